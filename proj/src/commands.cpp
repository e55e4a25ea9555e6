#include "nclift/commands.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "nclift/errors.hpp"
#include "nclift/modcomp.hpp"
#include "nclift/smallext.hpp"

namespace nclift {

using nlohmann::json;

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << line << "\n";
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return "(" + out + ")";
}

std::vector<std::size_t> ladder(const LiftState& s) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d <= s.order + 1; ++d) out.push_back(s.quotient().ideal().dim_mod_power(d));
  return out;
}

std::string header(const Problem& p, const std::string& what) {
  return what + (p.name.empty() ? "" : " for " + p.name) + " over " + p.field.name() + "\n";
}

json relations_json(const LiftState& s) {
  json rel = json::array();
  for (const auto& r : s.relations) rel.push_back({{"series", r.series.to_string()}, {"leading_order", r.leading_order}});
  return rel;
}

std::string relations_text(const LiftState& s) {
  if (s.relations.empty()) return "relations: none\n";
  std::string out = "relations:\n";
  for (const auto& r : s.relations)
    out += "  " + r.series.to_string() + "    (leading order " + std::to_string(r.leading_order) + ")\n";
  return out;
}

Report cmd_ext(const Problem& p, const RunOptions&) {
  Report r;
  Table t({"i", "dim Ext^i"});
  json dims = json::object();
  for (int i = 0; i <= 2; ++i) {
    const std::size_t d = ext_space(p.complex, i).dim();
    dims[std::to_string(i)] = d;
    t.add({std::to_string(i), std::to_string(d)});
  }
  r.json = {{"ext", dims}};
  r.text = header(p, "Ext^i(F, F)") + t.str();
  return r;
}

Report cmd_lift(const Problem& p, const RunOptions& opt) {
  const LiftState s = checked_lift(p, opt.order);
  Report r;
  json steps = json::array();
  Table t({"order", "small ext", "relations"});
  for (const auto& st : s.log) {
    json dirs = json::array();
    for (const auto& d : st.directions) dirs.push_back(d.to_string());
    steps.push_back({{"order", st.order}, {"directions", dirs}, {"relations", st.relations}});
    t.add({std::to_string(st.order), std::to_string(st.directions.size()), std::to_string(st.relations)});
  }
  r.json = {{"order", s.order},
            {"parameters", s.parameters()},
            {"ext1", s.ext1.dim()},
            {"ext2", s.ext2.dim()},
            {"relations", relations_json(s)},
            {"quotient_dims", s.quotient().dims_per_degree()},
            {"relation_ladder", ladder(s)},
            {"steps", steps},
            {"verified", true}};
  r.text = header(p, "universal lift to order " + std::to_string(s.order)) +
           "parameters: " + std::to_string(s.parameters()) + "   dim Ext^2: " + std::to_string(s.ext2.dim()) + "\n" +
           relations_text(s) + "quotient dims by degree: " + join(s.quotient().dims_per_degree()) + "\n" +
           "dim I/(I ∩ m^d), d = 2..N+1: " + join(ladder(s)) + "\n" + t.str() + "every order verified\n";
  return r;
}

Report cmd_relations(const Problem& p, const RunOptions& opt) {
  const LiftState s = checked_lift(p, opt.order);
  Report r;
  r.json = {{"order", s.order}, {"relations", relations_json(s)}, {"relation_ladder", ladder(s)}, {"ext2", s.ext2.dim()}};
  r.text = header(p, "relations of the parameter algebra to order " + std::to_string(s.order)) + relations_text(s) +
           "dim I/(I ∩ m^d), d = 2..N+1: " + join(ladder(s)) + "\n";
  return r;
}

Report cmd_abelianize(const Problem& p, const RunOptions& opt) {
  const LiftState s = checked_lift(p, opt.order);
  const QuotientBasis q0 = abelianize(s.quotient().ideal());
  Report r;
  r.json = {{"order", s.order},
            {"quotient_dims", s.quotient().dims_per_degree()},
            {"abelian_dims", q0.dims_per_degree()}};
  Table t({"degree", "P0", "Q0"});
  for (std::size_t d = 0; d <= s.order; ++d)
    t.add({std::to_string(d), std::to_string(s.quotient().dims_per_degree()[d]), std::to_string(q0.dims_per_degree()[d])});
  r.text = header(p, "abelianized parameter algebra to order " + std::to_string(s.order)) + t.str();
  return r;
}

Report cmd_family(const Problem& p, const RunOptions& opt) {
  if (!p.options.presentation)
    throw InputError(ErrorCode::NoPresentation, "options.presentation",
                     "mark the presentation degrees with options.presentation = [1, 0]");
  const LiftState s = checked_lift(p, opt.order);
  const FamilyPresentation f = h0_family(s, *p.options.presentation);
  Report r;
  const auto text = f.text();
  r.ok = f.at_zero() == p.complex->diff(f.source_degree);
  r.json = {{"order", s.order}, {"family", text}, {"specializes_to_input", r.ok}};
  std::string out = header(p, "H0 family to order " + std::to_string(s.order));
  for (const auto& row : text) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) line += (j ? "  |  " : "[ ") + row[j];
    out += line + " ]\n";
  }
  if (auto c = f.companion()) {
    json cm = json::array();
    out += "companion form over the abelianized parameters:\n";
    Table t(std::vector<std::string>(c->size(), ""));
    for (const auto& row : *c) {
      json jr = json::array();
      std::vector<std::string> tr;
      for (const auto& e : row) {
        jr.push_back(e.to_string());
        tr.push_back(e.to_string());
      }
      cm.push_back(jr);
      t.add(tr);
    }
    r.json["companion"] = cm;
    const std::string body = t.str();
    out += body.substr(body.find('\n') + 1);
  }
  out += std::string("t = 0 recovers the input differential: ") + (r.ok ? "yes" : "NO") + "\n";
  r.text = out;
  return r;
}

Report cmd_smallext(const Problem& p, const RunOptions& opt) {
  const LiftState s = checked_lift(p, opt.order);
  const SmallExtSpace sp = small_ext_space(s.quotient(), opt.guard);
  const KMatrix am = alpha_matrix(s, sp);
  const auto na = sp.non_artifact_functionals();
  Report r;
  json dirs = json::array();
  for (const auto& d : sp.direction_series()) dirs.push_back(d.to_string());
  const std::size_t rank_na = rank_on(am, na);
  const std::size_t syz = second_syzygy_dim(s.quotient(), sp.guard());
  r.ok = syz == sp.dim() && rank_na == na.size();
  r.json = {{"order", s.order},
            {"guard", sp.guard()},
            {"dim", sp.dim()},
            {"directions", dirs},
            {"artifact", sp.artifact_subspace().dim()},
            {"non_artifact", na.size()},
            {"alpha_rank", rank(am)},
            {"alpha_rank_non_artifact", rank_na},
            {"second_syzygy", syz}};
  std::string out = header(p, "small extensions of P0 truncated at order " + std::to_string(s.order));
  out += "dim: " + std::to_string(sp.dim()) + "   second syzygy: " + std::to_string(syz) + "\n";
  out += "artifact: " + std::to_string(sp.artifact_subspace().dim()) + "   non-artifact: " + std::to_string(na.size()) +
         "   alpha rank on non-artifact: " + std::to_string(rank_na) + "\n";
  const std::size_t shown = std::min<std::size_t>(dirs.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) out += "  " + dirs[i].get<std::string>() + "\n";
  if (shown < dirs.size()) out += "  ... " + std::to_string(dirs.size() - shown) + " more (see --json)\n";
  r.text = out;
  return r;
}

Report cmd_rho(const Problem& p, const RunOptions& opt) {
  const LiftState s = checked_lift(p, opt.order);
  const auto rows = rho_report(s);
  Report r;
  json jr = json::array();
  Table t({"n", "Ext2(k,k)", "syzygy", "T(A_n)", "artifact", "non-art", "rank alpha", "alpha = obs", "ok"});
  for (const auto& row : rows) {
    jr.push_back({{"n", row.n},
                  {"ext2_kk", row.ext2_kk},
                  {"second_syzygy", row.second_syzygy},
                  {"small_ext", row.small_ext},
                  {"artifact", row.artifact},
                  {"non_artifact", row.non_artifact},
                  {"alpha_rank", row.alpha_rank},
                  {"alpha_matches_obstruction", row.alpha_matches_obstruction},
                  {"ok", row.ok()}});
    t.add({std::to_string(row.n), std::to_string(row.ext2_kk), std::to_string(row.second_syzygy),
           std::to_string(row.small_ext), std::to_string(row.artifact), std::to_string(row.non_artifact),
           std::to_string(row.alpha_rank), row.alpha_matches_obstruction ? "yes" : "no", row.ok() ? "ok" : "FAIL"});
    r.ok = r.ok && row.ok();
  }
  r.json = {{"order", s.order}, {"rows", jr}};
  r.text = header(p, "comparison with Ext over A_n = P0 / m^n") + t.str();
  return r;
}

Report cmd_selfcheck(const Problem& p, const RunOptions& opt) {
  Report r;
  json checks = json::array();
  Table t({"check", "result"});
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    std::string detail;
    try {
      ok = f();
    } catch (const InvariantViolation& e) {
      detail = e.what();
    }
    checks.push_back({{"check", name}, {"ok", ok}});
    if (!detail.empty()) checks.back()["detail"] = detail;
    t.add({name, ok ? "pass" : "FAIL" + (detail.empty() ? "" : ": " + detail)});
    r.ok = r.ok && ok;
  };

  check("algebra axioms", [&] { return !p.algebra->validate().has_value(); });
  check("d^2 = 0", [&] { return is_dg(*p.complex); });
  std::optional<LiftState> s;
  check("lift verified at every order", [&] {
    s = checked_lift(p, opt.order);
    return true;
  });
  if (s) {
    check("relations <= dim Ext^2", [&] { return s->relations.size() <= s->ext2.dim(); });
    check("image of alpha over T/m^2 = Ext^1 squared", [&] {
      const LiftState first = truncate_state(*s, 1);
      const KMatrix am = alpha_matrix(first, small_ext_space(first.quotient()));
      Subspace image(p.field, s->ext2.dim());
      for (std::size_t j = 0; j < am.cols(); ++j) image.insert(am.col(j));
      return image == ext1_squared(s->ext1, s->ext2);
    });
    check("alpha injective on non-artifact directions", [&] {
      const SmallExtSpace sp = small_ext_space(s->quotient(), opt.guard);
      const auto na = sp.non_artifact_functionals();
      return rank_on(alpha_matrix(*s, sp), na) == na.size();
    });
    check("basis independence", [&] {
      const std::size_t r0 = s->parameters();
      if (r0 == 0) return true;
      std::mt19937_64 rng(1);
      KMatrix m(p.field, r0, r0);
      do {
        for (std::size_t i = 0; i < r0; ++i)
          for (std::size_t j = 0; j < r0; ++j) m(i, j) = p.field.from_int(static_cast<long>(rng() % 7) - 3);
      } while (rank(m) != r0);
      const LiftState other = checked_lift(p, opt.order, m);
      return other.quotient().dims_per_degree() == s->quotient().dims_per_degree() && ladder(other) == ladder(*s);
    });
    if (s->order >= 3) {
      check("square isomorphism", [&] { return square_iso_report(*s).ok(); });
      check("second syzygy, small extensions and alpha (rho)", [&] {
        const auto rows = rho_report(*s);
        return std::all_of(rows.begin(), rows.end(), [](const RhoRow& row) { return row.ok(); });
      });
    }
  }
  r.json = {{"order", opt.order}, {"checks", checks}, {"ok", r.ok}};
  r.text = header(p, "self-check to order " + std::to_string(opt.order)) + t.str();
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"ext",      "lift",     "relations", "abelianize",
                                              "family",   "smallext", "rho",       "selfcheck"};
  return names;
}

LiftState checked_lift(const Problem& p, std::size_t order, const std::optional<KMatrix>& basis_change) {
  if (order < 1) throw InputError(ErrorCode::BadArgument, "order", "order must be at least 1");
  if (!is_dg(*p.complex)) throw InvariantViolation("the input complex does not square to zero");
  LiftState s = first_order_lift(p.complex, basis_change);
  auto verify = [&] {
    const LiftCheck c = verify_lift(s);
    if (!c.ok()) {
      std::string msg = "order " + std::to_string(s.order) + ":";
      for (const auto& f : c.failures) msg += " " + f + ";";
      throw InvariantViolation(msg);
    }
    if (s.relations.size() > s.ext2.dim())
      throw InvariantViolation("order " + std::to_string(s.order) + ": more relations than dim Ext^2");
  };
  verify();
  while (s.order < order) {
    s = extend_one_order(s);
    verify();
  }
  return s;
}

Report run_command(const std::string& command, const Problem& p, const RunOptions& opt) {
  static const std::vector<std::pair<std::string, Report (*)(const Problem&, const RunOptions&)>> table{
      {"ext", cmd_ext},           {"lift", cmd_lift},         {"relations", cmd_relations}, {"abelianize", cmd_abelianize},
      {"family", cmd_family},     {"smallext", cmd_smallext}, {"rho", cmd_rho},             {"selfcheck", cmd_selfcheck}};
  for (const auto& [name, fn] : table) {
    if (name != command) continue;
    Report r = fn(p, opt);
    r.json["command"] = command;
    r.json["field"] = p.field.name();
    r.json["ok"] = r.ok;
    r.json["problem"] = problem_to_json(p);
    return r;
  }
  throw InputError(ErrorCode::BadArgument, "command", "unknown command '" + command + "'");
}

}  // namespace nclift
