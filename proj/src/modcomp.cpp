#include "nclift/modcomp.hpp"

#include <stdexcept>

#include "nclift/errors.hpp"
#include "nclift/smallext.hpp"

namespace nclift {

std::shared_ptr<const Algebra> algebra_from_quotient(const QuotientBasis& q) {
  const Field& k = q.field();
  const WordIndex& idx = q.index();
  const auto& std_words = q.standard();
  const std::size_t n = std_words.size();
  std::vector<std::string> labels;
  for (auto w : std_words) labels.push_back(idx.name(w));
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(k, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto w = idx.concat(std_words[i], std_words[j])) table[i][j] = q.coords(unit_vec(k, idx.size(), *w));
  return std::make_shared<const Algebra>(k, std::move(labels), unit_vec(k, n, 0), std::move(table));
}

namespace {

void check_local(const Algebra& a) {
  const Field& k = a.field();
  const std::size_t n = a.dim();
  if (a.unit() != unit_vec(k, n, 0))
    throw InputError(ErrorCode::NotLocal, "algebra.unit", "the unit must be the first basis element");
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!a.product(i, j)[0].is_zero())
        throw InputError(ErrorCode::NotLocal, "algebra.mult",
                         a.labels()[i] + " * " + a.labels()[j] + " leaves the span of the radical basis");
  // rad^n = 0
  std::vector<Vec> power;
  for (std::size_t i = 1; i < n; ++i) power.push_back(a.basis_element(i));
  for (std::size_t step = 0; step < n && !power.empty(); ++step) {
    Subspace next(k, n);
    for (const auto& p : power)
      for (std::size_t l = 1; l < n; ++l) next.insert(a.mul(p, a.basis_element(l)));
    power = next.basis();
  }
  if (!power.empty()) throw InputError(ErrorCode::NotLocal, "algebra.mult", "the radical basis is not nilpotent");
}

// a * v on A^r, v entry-major.
Vec left_mul(const Algebra& a, std::size_t l, const Vec& v) {
  const std::size_t n = a.dim();
  Vec out = zero_vec(a.field(), v.size());
  const Vec e = a.basis_element(l);
  for (std::size_t j = 0; j < v.size() / n; ++j) {
    std::span<const Scalar> vj(v.data() + j * n, n);
    if (is_zero(vj)) continue;
    a.mul_acc(std::span<Scalar>(out.data() + j * n, n), a.field().one(), e, vj);
  }
  return out;
}

KMatrix constant_terms(const Field& k, const RMatrix& m) {
  KMatrix out(k, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j)[0];
  return out;
}

}  // namespace

Resolution resolve_simple(std::shared_ptr<const Algebra> alg, std::size_t length) {
  const Algebra& a = *alg;
  check_local(a);
  const Field& k = a.field();
  const std::size_t n = a.dim();

  std::vector<std::size_t> ranks{1};
  std::vector<RMatrix> diffs{RMatrix(a, 1, 0)};
  // kernel of F_0 -> k is the radical
  std::vector<Vec> kernel_basis;
  for (std::size_t i = 1; i < n; ++i) kernel_basis.push_back(a.basis_element(i));

  for (std::size_t i = 1; i <= length; ++i) {
    const std::size_t r = ranks.back();
    const Subspace nk = Subspace::span(k, r * n, kernel_basis);
    Subspace rad_n(k, r * n);
    for (const auto& v : nk.basis())
      for (std::size_t l = 1; l < n; ++l) rad_n.insert(left_mul(a, l, v));
    const std::vector<Vec> gens = QuotientSpace(nk, rad_n).complement();
    const std::size_t s = gens.size();

    RMatrix d(a, s, r);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t c = 0; c < r * n; ++c) d.at(j, c / n)[c % n] = gens[j][c];
    ranks.push_back(s);
    diffs.push_back(std::move(d));

    // x ↦ Σ_j x_j g_j, as a k-linear map k^{s n} -> k^{r n}
    KMatrix m(k, r * n, s * n);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Vec img = left_mul(a, l, gens[j]);
        for (std::size_t c = 0; c < img.size(); ++c) m(c, j * n + l) = img[c];
      }
    kernel_basis = s == 0 ? std::vector<Vec>{} : kernel(m);
  }
  Resolution res;
  res.algebra = alg;
  res.complex = std::make_shared<const ChainComplex>(alg, 0, std::move(ranks), std::move(diffs));
  res.length = length;
  return res;
}

bool is_minimal(const Resolution& r) {
  for (int i = 1; i <= static_cast<int>(r.length); ++i) {
    const RMatrix& d = r.complex->diff(i);
    for (std::size_t a = 0; a < d.rows(); ++a)
      for (std::size_t b = 0; b < d.cols(); ++b)
        if (!d.at(a, b)[0].is_zero()) return false;
  }
  return true;
}

std::size_t ext_k_k(const Resolution& r, std::size_t i) {
  if (i > r.length) throw std::invalid_argument("ext_k_k: degree beyond the computed resolution");
  const ChainComplex& c = *r.complex;
  auto rank_of = [&](std::size_t j) -> std::size_t {
    if (j == 0 || j > r.length) return 0;
    const RMatrix& d = c.diff(static_cast<int>(j));
    if (d.rows() == 0 || d.cols() == 0) return 0;
    return rank(constant_terms(r.algebra->field(), d));
  };
  return c.rank(static_cast<int>(i)) - rank_of(i) - rank_of(i + 1);
}

std::size_t ext_k_k(std::shared_ptr<const Algebra> a, std::size_t i) { return ext_k_k(resolve_simple(std::move(a), i), i); }

std::size_t second_syzygy_dim(const QuotientBasis& a, std::optional<std::size_t> guard) {
  const std::size_t n = a.order();
  const std::size_t g = guard.value_or(n + 2);
  if (g < n + 2)
    throw InputError(ErrorCode::GuardTooSmall, "guard",
                     "guard " + std::to_string(g) + " is below order + 2 = " + std::to_string(n + 2));
  const IdealSpan j = a.ideal().preimage(g);
  const WordIndex& idx = j.index();
  const Field& k = a.field();
  // J is a two-sided ideal, so mJ + Jm is already one
  Subspace m(k, idx.size());
  for (const auto& row : j.span().basis()) {
    if (idx.degree(*leading_index(row)) >= g) continue;
    for (std::size_t t = 0; t < idx.generators(); ++t) {
      Vec left = zero_vec(k, idx.size()), right = zero_vec(k, idx.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        if (auto w = idx.left_mul(t, i)) left[*w] = row[i];
        if (auto w = idx.right_mul(i, t)) right[*w] = row[i];
      }
      m.insert(std::move(left));
      m.insert(std::move(right));
    }
  }
  return j.dim() - m.dim();
}

// ---------------------------------------------------------------------------

std::string FamilyPresentation::entry_text(std::size_t i, std::size_t j) const {
  const Algebra& a = *algebra;
  const WordIndex& idx = parameters.index();
  std::string out;
  bool first = true;
  for (std::size_t b = a.dim(); b-- > 0;) {
    for (std::size_t p = 0; p < by_monomial.size(); ++p) {
      Scalar c = by_monomial[p].at(i, j)[b];
      if (c.is_zero()) continue;
      const bool neg = c.is_negative_for_display();
      if (neg) c = -c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string body;
      const std::string w = idx.name(parameters.standard()[p]);
      if (w != "1") body = w;
      if (a.labels()[b] != "1") body += (body.empty() ? "" : "*") + a.labels()[b];
      if (body.empty()) out += c.to_string();
      else if (c.is_one()) out += body;
      else out += c.to_string() + "*" + body;
    }
  }
  return first ? "0" : out;
}

std::vector<std::vector<std::string>> FamilyPresentation::text() const {
  std::vector<std::vector<std::string>> out(rows(), std::vector<std::string>(cols()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i][j] = entry_text(i, j);
  return out;
}

std::optional<std::vector<std::vector<TruncSeries>>> FamilyPresentation::companion() const {
  if (rows() != 1 || cols() != 1) return std::nullopt;
  const Algebra& a = *algebra;
  const Field& k = a.field();
  if (a.labels() != Algebra::truncated_poly(k, a.dim()).labels()) return std::nullopt;
  const WordIndex& idx = parameters.index();
  const std::size_t r = parameters.generators(), order = parameters.order();

  std::vector<TruncSeries> c(a.dim(), TruncSeries(k, r, order));
  for (std::size_t p = 0; p < by_monomial.size(); ++p)
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (!by_monomial[p].at(0, 0)[b].is_zero())
        c[b].add_term(idx.word(parameters.standard()[p]), by_monomial[p].at(0, 0)[b]);
  std::size_t n = a.dim();
  while (n > 0 && c[n - 1].is_zero()) --n;
  if (n < 2) return std::nullopt;
  --n;
  TruncSeries one(k, r, order);
  one.add_term({}, k.one());
  if (!(c[n] == one)) return std::nullopt;

  const QuotientBasis ab = abelianize(parameters.ideal());
  std::vector<std::vector<TruncSeries>> m(n, std::vector<TruncSeries>(n, TruncSeries(k, r, order)));
  for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = one;
  for (std::size_t j = 0; j < n; ++j) {
    TruncSeries e(k, r, order);
    e -= c[j];
    m[n - 1][j] = ab.reduce(e);
  }
  return m;
}

FamilyPresentation h0_family(const LiftState& s, std::pair<int, int> presentation) {
  const ChainComplex& c = *s.lift.complex;
  const auto [src, tgt] = presentation;
  if (src != tgt + 1 || !c.in_range(src) || !c.in_range(tgt))
    throw InputError(ErrorCode::NoPresentation, "options.presentation",
                     "presentation [" + std::to_string(src) + ", " + std::to_string(tgt) +
                         "] is not a pair of adjacent degrees of the complex");
  FamilyPresentation f;
  f.algebra = c.algebra_ptr();
  f.parameters = s.quotient();
  f.source_degree = src;
  for (const auto& g : s.lift.coeffs) f.by_monomial.push_back(g.component(src));
  return f;
}

std::vector<RhoRow> rho_report(const LiftState& s) {
  if (s.order < 3) throw InputError(ErrorCode::BadArgument, "order", "the rho report needs order >= 3");
  std::vector<RhoRow> rows;
  for (std::size_t n = 2; n <= s.order; ++n) {
    const LiftState t = truncate_state(s, n - 1);
    const QuotientBasis& q = t.quotient();
    RhoRow row;
    row.n = n;
    row.ext2_kk = ext_k_k(algebra_from_quotient(q), 2);
    row.second_syzygy = second_syzygy_dim(q);
    const SmallExtSpace sp = small_ext_space(q);
    row.small_ext = sp.dim();
    row.artifact = sp.artifact_subspace().dim();
    const auto na = sp.non_artifact_functionals();
    row.non_artifact = na.size();
    const KMatrix am = alpha_matrix(t, sp);
    row.alpha_rank = rank_on(am, na);
    for (const auto& step : s.log)
      if (step.order == n) row.alpha_matches_obstruction = step.obstruction == am;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nclift
