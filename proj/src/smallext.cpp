#include "nclift/smallext.hpp"

#include <stdexcept>

#include "nclift/errors.hpp"
#include "nclift/lifting.hpp"

namespace nclift {

SmallExtSpace small_ext_space(const QuotientBasis& a, std::optional<std::size_t> guard) {
  const std::size_t n = a.order();
  SmallExtSpace s;
  s.base_ = a;
  s.guard_ = guard.value_or(n + 2);
  if (s.guard_ < n + 2)
    throw InputError(ErrorCode::GuardTooSmall, "guard",
                     "guard " + std::to_string(s.guard_) + " is below order + 2 = " + std::to_string(n + 2));
  s.j_ = a.ideal().preimage(n + 1);
  const WordIndex& idx = s.j_.index();
  const Field& k = a.field();

  s.m_ = Subspace(k, idx.size());
  const auto j_basis = s.j_.span().basis();
  for (const auto& row : j_basis) {
    if (idx.degree(*leading_index(row)) > n) continue;  // products vanish in T_{N+1}
    for (std::size_t g = 0; g < idx.generators(); ++g) {
      Vec left = zero_vec(k, idx.size()), right = zero_vec(k, idx.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        if (auto w = idx.left_mul(g, i)) left[*w] = row[i];
        if (auto w = idx.right_mul(i, g)) right[*w] = row[i];
      }
      s.m_.insert(std::move(left));
      s.m_.insert(std::move(right));
    }
  }

  Subspace dirs(k, idx.size());
  for (const auto& row : j_basis) dirs.insert(s.m_.reduce(row));
  s.directions_ = dirs.basis();
  s.pivots_ = dirs.pivots();
  return s;
}

std::vector<TruncSeries> SmallExtSpace::direction_series() const {
  std::vector<TruncSeries> out;
  for (const auto& d : directions_) out.push_back(TruncSeries::from_vec(base_.field(), ambient(), d));
  return out;
}

Vec SmallExtSpace::coords(std::span<const Scalar> v) const {
  Vec w = m_.reduce(Vec(v.begin(), v.end()));
  Vec out;
  for (std::size_t a = 0; a < directions_.size(); ++a) {
    out.push_back(w[pivots_[a]]);
    axpy(w, -out.back(), directions_[a]);
  }
  if (!is_zero(w)) throw std::invalid_argument("SmallExtSpace::coords: vector is not in J");
  return out;
}

Subspace SmallExtSpace::artifact_subspace() const {
  const WordIndex& idx = ambient();
  Subspace w(base_.field(), dim());
  for (std::size_t i = idx.offset(order() + 1); i < idx.size(); ++i)
    w.insert(coords(unit_vec(base_.field(), idx.size(), i)));
  return w;
}

std::vector<Vec> SmallExtSpace::non_artifact_functionals() const {
  const Subspace w = artifact_subspace();
  if (w.dim() == 0) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < dim(); ++i) all.push_back(unit_vec(base_.field(), dim(), i));
    return all;
  }
  return kernel(KMatrix::from_rows(base_.field(), dim(), w.basis()));
}

// ---------------------------------------------------------------------------

namespace {

void check_base(const LiftState& s, const SmallExtSpace& space) {
  if (s.order != space.order() || !(s.quotient().ideal().span() == space.base().ideal().span()))
    throw std::invalid_argument("alpha: the lift does not live over the base of the small-extension space");
}

Vec alpha_with(const LiftState& s, const SmallExtSpace& space, const std::map<std::size_t, GradedMap>& products,
               std::span<const Scalar> f) {
  const ChainComplex& c = *s.lift.complex;
  const Field& k = space.base().field();
  if (f.size() != space.dim()) throw std::invalid_argument("alpha: functional has the wrong length");
  auto i0 = leading_index(f);
  if (!i0) return zero_vec(k, s.ext2.dim());

  // J_f = mJ + Jm + ker f, and ε with f(ε) = 1
  const auto& dirs = space.directions();
  Subspace jf = space.m_space();
  const Scalar inv = f[*i0].inverse();
  for (std::size_t b = 0; b < dirs.size(); ++b) {
    if (b == *i0) continue;
    Vec v = dirs[b];
    axpy(v, -(f[b] * inv), dirs[*i0]);
    jf.insert(std::move(v));
  }
  Vec eps = dirs[*i0];
  scale(eps, inv);

  WordNormalForms nf(space.ambient(), jf);
  std::map<std::size_t, GradedMap> total;
  for (const auto& [w, o] : products) {
    const Vec& v = nf(w);
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (v[col].is_zero()) continue;
      auto it = total.find(col);
      if (it == total.end()) total.emplace(col, GradedMap(o).scale(v[col]));
      else it->second.add_scaled(v[col], o);
    }
  }

  // Δ'^2 = σ ⊗ ε
  const Vec e = jf.reduce(eps);
  const std::size_t c0 = *leading_index(e);
  GradedMap sigma = total.count(c0) ? total.at(c0) : GradedMap(c, -2);
  sigma.scale(e[c0].inverse());
  for (std::size_t col = 0; col < e.size(); ++col) {
    GradedMap expected = sigma;
    expected.scale(e[col]);
    auto it = total.find(col);
    const bool match = it == total.end() ? expected.is_zero() : it->second == expected;
    if (!match) throw InvariantViolation("alpha: the square of the lift is not a multiple of the kernel generator");
    if (it != total.end()) total.erase(it);
  }
  for (const auto& [col, m] : total)
    if (!m.is_zero()) throw InvariantViolation("alpha: the square of the lift leaves the kernel of A' -> A");
  return s.ext2.reduce(sigma).coords;
}

}  // namespace

Vec alpha(const LiftState& s, const SmallExtSpace& space, std::span<const Scalar> functional) {
  check_base(s, space);
  return alpha_with(s, space, word_products(s.lift, space.ambient()), functional);
}

KMatrix alpha_matrix(const LiftState& s, const SmallExtSpace& space) {
  check_base(s, space);
  const Field& k = space.base().field();
  const auto products = word_products(s.lift, space.ambient());
  KMatrix out(k, s.ext2.dim(), space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const Vec col = alpha_with(s, space, products, unit_vec(k, space.dim(), j));
    for (std::size_t i = 0; i < col.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

std::size_t rank_on(const KMatrix& alpha, const std::vector<Vec>& functionals) {
  if (functionals.empty()) return 0;
  KMatrix images(alpha.field(), functionals.size(), alpha.rows());
  for (std::size_t f = 0; f < functionals.size(); ++f) {
    const Vec img = alpha.apply(functionals[f]);
    for (std::size_t i = 0; i < img.size(); ++i) images(f, i) = img[i];
  }
  return rank(images);
}

SquareIsoReport square_iso_report(const LiftState& s) {
  if (s.order < 3)
    throw InputError(ErrorCode::BadArgument, "order", "the square-isomorphism report needs order >= 3");
  SquareIsoReport r;
  r.ext1_squared_dim = ext1_squared(s.ext1, s.ext2).dim();
  r.relations_mod_cube = s.quotient().ideal().dim_mod_power(3);
  return r;
}

}  // namespace nclift
