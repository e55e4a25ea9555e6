#include "nclift/problem.hpp"

#include <fstream>
#include <sstream>

#include "nclift/errors.hpp"

namespace nclift {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) {
  throw InputError(ErrorCode::SchemaError, where, msg);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where.empty() ? key : where + "." + key, "missing field '" + key + "'");
  return *it;
}

std::size_t read_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

int read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<int>();
}

Scalar read_scalar(const Field& k, const json& v, const std::string& where) {
  std::string text;
  if (v.is_number_integer()) text = std::to_string(v.get<long long>());
  else if (v.is_string()) text = v.get<std::string>();
  else throw InputError(ErrorCode::BadScalar, where, "expected an integer or a string such as \"-3/2\"");
  try {
    return k.parse_scalar(text);
  } catch (const InputError& e) {
    throw InputError(ErrorCode::BadScalar, where, e.what());
  }
}

Vec read_vector(const Field& k, const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of " + std::to_string(n) + " scalars");
  if (v.size() != n)
    throw InputError(ErrorCode::ShapeMismatch, where,
                     "expected " + std::to_string(n) + " coefficients, got " + std::to_string(v.size()));
  Vec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_scalar(k, v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

std::shared_ptr<const Algebra> read_algebra(const Field& k, const json& a, Problem& p) {
  if (!a.is_object()) schema_error("algebra", "expected an object");
  if (a.contains("truncated_poly")) {
    const std::size_t m = read_count(a["truncated_poly"], "algebra.truncated_poly");
    p.truncated_poly = m;
    return std::make_shared<const Algebra>(Algebra::truncated_poly(k, m));
  }
  const json& basis = require(a, "basis", "algebra");
  if (!basis.is_array() || basis.empty()) schema_error("algebra.basis", "expected a non-empty array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) schema_error("algebra.basis[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = labels.size();
  Vec unit = read_vector(k, require(a, "unit", "algebra"), n, "algebra.unit");
  const json& mult = require(a, "mult", "algebra");
  if (!mult.is_array() || mult.size() != n)
    throw InputError(ErrorCode::ShapeMismatch, "algebra.mult", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Vec>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = "algebra.mult[" + std::to_string(i) + "]";
    if (!mult[i].is_array() || mult[i].size() != n)
      throw InputError(ErrorCode::ShapeMismatch, wi, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      table[i].push_back(read_vector(k, mult[i][j], n, wi + "[" + std::to_string(j) + "]"));
  }
  auto alg = std::make_shared<const Algebra>(k, std::move(labels), std::move(unit), std::move(table));
  if (auto v = alg->validate()) {
    if (v->kind == AlgebraViolation::Kind::Associativity)
      throw InputError(ErrorCode::AlgebraNotAssociative, "algebra.mult", v->detail);
    throw InputError(ErrorCode::AlgebraBadUnit, "algebra.unit", v->detail);
  }
  return alg;
}

std::shared_ptr<const ChainComplex> read_complex(const json& c, std::shared_ptr<const Algebra> alg) {
  const Field& k = alg->field();
  const int lo = read_int(require(c, "lo", "complex"), "complex.lo");
  const json& rj = require(c, "ranks", "complex");
  if (!rj.is_array() || rj.empty()) schema_error("complex.ranks", "expected a non-empty array");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i) ranks.push_back(read_count(rj[i], "complex.ranks[" + std::to_string(i) + "]"));
  const int hi = lo + static_cast<int>(ranks.size()) - 1;

  const json dj = c.contains("differentials") ? c["differentials"] : json::object();
  if (!dj.is_object()) schema_error("complex.differentials", "expected an object keyed by degree");
  for (const auto& [key, _] : dj.items()) {
    int deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error("complex.differentials." + key, "keys must be integer degrees");
    }
    if (deg <= lo || deg > hi)
      schema_error("complex.differentials." + key,
                   "degree must lie in " + std::to_string(lo + 1) + ".." + std::to_string(hi));
  }

  std::vector<RMatrix> diffs{RMatrix(*alg, ranks[0], 0)};
  for (int i = lo + 1; i <= hi; ++i) {
    const std::size_t rows = ranks[static_cast<std::size_t>(i - lo)], cols = ranks[static_cast<std::size_t>(i - 1 - lo)];
    RMatrix d(*alg, rows, cols);
    const std::string where = "complex.differentials." + std::to_string(i);
    auto it = dj.find(std::to_string(i));
    if (it != dj.end()) {
      const json& m = *it;
      if (!m.is_array() || m.size() != rows)
        throw InputError(ErrorCode::ShapeMismatch, where,
                         "d_" + std::to_string(i) + " must have " + std::to_string(rows) + " rows");
      for (std::size_t a = 0; a < rows; ++a) {
        const std::string wa = where + "[" + std::to_string(a) + "]";
        if (!m[a].is_array() || m[a].size() != cols)
          throw InputError(ErrorCode::ShapeMismatch, wa, "expected " + std::to_string(cols) + " entries");
        for (std::size_t b = 0; b < cols; ++b) {
          const Vec e = read_vector(k, m[a][b], alg->dim(), wa + "[" + std::to_string(b) + "]");
          std::copy(e.begin(), e.end(), d.at(a, b).begin());
        }
      }
    } else if (rows != 0 && cols != 0) {
      schema_error(where, "missing differential d_" + std::to_string(i));
    }
    diffs.push_back(std::move(d));
  }
  return std::make_shared<const ChainComplex>(alg, lo, std::move(ranks), std::move(diffs));
}

ProblemOptions read_options(const json& j) {
  ProblemOptions o;
  if (!j.contains("options")) return o;
  const json& op = j["options"];
  if (!op.is_object()) schema_error("options", "expected an object");
  if (op.contains("order")) o.order = read_count(op["order"], "options.order");
  if (op.contains("guard")) o.guard = read_count(op["guard"], "options.guard");
  if (op.contains("presentation")) {
    const json& pr = op["presentation"];
    if (!pr.is_array() || pr.size() != 2) schema_error("options.presentation", "expected [source, target]");
    o.presentation = {read_int(pr[0], "options.presentation[0]"), read_int(pr[1], "options.presentation[1]")};
  }
  return o;
}

}  // namespace

Problem parse_problem(const json& j, std::optional<Field> field_override) {
  if (!j.is_object()) schema_error("", "the problem must be a JSON object");
  const json& schema = require(j, "schema", "");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion)
    schema_error("schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  Problem p;
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error("name", "expected a string");
    p.name = j["name"].get<std::string>();
  }
  if (field_override) {
    p.field = *field_override;
  } else {
    const json& f = require(j, "field", "");
    if (!f.is_string()) throw InputError(ErrorCode::BadField, "field", "expected a string such as \"Q\" or \"GF(5)\"");
    p.field = Field::parse(f.get<std::string>());
  }
  p.algebra = read_algebra(p.field, require(j, "algebra", ""), p);
  p.complex = read_complex(require(j, "complex", ""), p.algebra);
  p.options = read_options(j);
  return p;
}

Problem parse_problem_text(const std::string& text, std::optional<Field> field_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(ErrorCode::MalformedJson, "line " + std::to_string(line) + ", column " + std::to_string(col),
                     e.what());
  }
  return parse_problem(j, field_override);
}

Problem parse_problem_file(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorCode::BadArgument, path, "cannot open problem file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str(), field_override);
}

json problem_to_json(const Problem& p) {
  json j;
  j["schema"] = kSchemaVersion;
  if (!p.name.empty()) j["name"] = p.name;
  j["field"] = p.field.name();
  const Algebra& a = *p.algebra;
  if (p.truncated_poly) {
    j["algebra"] = {{"truncated_poly", *p.truncated_poly}};
  } else {
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      json row = json::array();
      for (std::size_t l = 0; l < a.dim(); ++l) row.push_back(vector_json(a.product(i, l)));
      mult.push_back(row);
    }
    j["algebra"] = {{"basis", a.labels()}, {"unit", vector_json(a.unit())}, {"mult", mult}};
  }
  const ChainComplex& c = *p.complex;
  json diffs = json::object();
  for (int i = c.lo() + 1; i <= c.hi(); ++i) {
    const RMatrix& d = c.diff(i);
    json m = json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      json row = json::array();
      for (std::size_t s = 0; s < d.cols(); ++s) row.push_back(vector_json(d.at(r, s)));
      m.push_back(row);
    }
    diffs[std::to_string(i)] = m;
  }
  j["complex"] = {{"lo", c.lo()}, {"ranks", c.ranks()}, {"differentials", diffs}};
  json op = json::object();
  if (p.options.order) op["order"] = *p.options.order;
  if (p.options.guard) op["guard"] = *p.options.guard;
  if (p.options.presentation) op["presentation"] = {p.options.presentation->first, p.options.presentation->second};
  if (!op.empty()) j["options"] = op;
  return j;
}

}  // namespace nclift
