#include "nclift/complexes.hpp"

#include <stdexcept>
#include <string>

#include "nclift/errors.hpp"

namespace nclift {

namespace {

bool odd(int n) { return n % 2 != 0; }

}  // namespace

ChainComplex::ChainComplex(std::shared_ptr<const Algebra> alg, int lo, std::vector<std::size_t> ranks,
                           std::vector<RMatrix> diffs)
    : alg_(std::move(alg)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (diffs_.empty())
    for (std::size_t k = 0; k < ranks_.size(); ++k) diffs_.emplace_back(*alg_, ranks_[k], k == 0 ? 0 : ranks_[k - 1]);
  if (diffs_.size() != ranks_.size())
    throw InputError(ErrorCode::SchemaError, "complex.differentials", "one differential per degree is required");
  for (int i = lo_; i <= hi(); ++i) {
    const RMatrix& d = diff(i);
    if (d.rows() != rank(i) || d.cols() != rank(i - 1) || d.elem_dim() != alg_->dim())
      throw InputError(ErrorCode::ShapeMismatch, "complex.differentials." + std::to_string(i),
                       "d_" + std::to_string(i) + " must be " + std::to_string(rank(i)) + " x " +
                           std::to_string(rank(i - 1)));
  }
  if (!is_dg(*this)) throw InputError(ErrorCode::ComplexNotDg, "complex.differentials", "d^2 != 0");
}

std::size_t ChainComplex::rank(int i) const { return in_range(i) ? ranks_[static_cast<std::size_t>(i - lo_)] : 0; }

bool is_dg(const ChainComplex& c) {
  for (int i = c.lo() + 1; i <= c.hi(); ++i)
    if (!rmat_mul(c.algebra(), c.diff(i), c.diff(i - 1)).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

GradedMap::GradedMap(const ChainComplex& c, int degree) : degree_(degree), lo_(c.lo()) {
  for (int i = c.lo(); i <= c.hi(); ++i) comps_.emplace_back(c.algebra(), c.rank(i), c.rank(i + degree));
}

bool GradedMap::is_zero() const {
  for (const auto& m : comps_)
    if (!m.is_zero()) return false;
  return true;
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
  if (o.degree_ != degree_ || o.comps_.size() != comps_.size()) throw std::invalid_argument("GradedMap +=: degree mismatch");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
  if (o.degree_ != degree_ || o.comps_.size() != comps_.size()) throw std::invalid_argument("GradedMap -=: degree mismatch");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

GradedMap& GradedMap::scale(const Scalar& c) {
  for (auto& m : comps_) m.scale(c);
  return *this;
}

GradedMap& GradedMap::add_scaled(const Scalar& c, const GradedMap& o) {
  if (o.degree_ != degree_ || o.comps_.size() != comps_.size()) throw std::invalid_argument("GradedMap: degree mismatch");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k].add_scaled(c, o.comps_[k]);
  return *this;
}

Vec GradedMap::to_vec() const {
  Vec v;
  for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) v.insert(v.end(), it->flat().begin(), it->flat().end());
  return v;
}

GradedMap GradedMap::from_vec(const ChainComplex& c, int degree, std::span<const Scalar> v) {
  GradedMap f(c, degree);
  std::size_t pos = 0;
  for (auto it = f.comps_.rbegin(); it != f.comps_.rend(); ++it) {
    RMatrix& m = *it;
    if (pos + m.flat_size() > v.size()) throw std::invalid_argument("GradedMap::from_vec: vector too short");
    std::copy(v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + m.flat_size()),
              m.flat().begin());
    pos += m.flat_size();
  }
  if (pos != v.size()) throw std::invalid_argument("GradedMap::from_vec: vector too long");
  return f;
}

std::size_t GradedMap::flat_size(const ChainComplex& c, int degree) {
  std::size_t n = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) n += c.rank(i) * c.rank(i + degree) * c.algebra().dim();
  return n;
}

GradedMap differential(const ChainComplex& c) {
  GradedMap d(c, -1);
  for (int i = c.lo(); i <= c.hi(); ++i) d.component(i) = c.diff(i);
  return d;
}

GradedMap identity_map(const ChainComplex& c) {
  GradedMap id(c, 0);
  for (int i = c.lo(); i <= c.hi(); ++i) id.component(i) = rmat_identity(c.algebra(), c.rank(i));
  return id;
}

GradedMap compose(const ChainComplex& c, const GradedMap& f, const GradedMap& g) {
  GradedMap out(c, f.degree() + g.degree());
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const int mid = i + g.degree();
    if (!c.in_range(mid) || !c.in_range(mid + f.degree())) continue;
    out.component(i) = rmat_mul(c.algebra(), g.component(i), f.component(mid));
  }
  return out;
}

GradedMap bracket(const ChainComplex& c, const GradedMap& f, const GradedMap& g) {
  GradedMap out = compose(c, f, g);
  const GradedMap gf = compose(c, g, f);
  if (odd(f.degree() + g.degree())) out -= gf;
  else out += gf;
  return out;
}

bool is_chain_map(const ChainComplex& c, const GradedMap& f) { return bracket(c, differential(c), f).is_zero(); }

// ---------------------------------------------------------------------------

ExtBasis ExtBasis::compute(std::shared_ptr<const ChainComplex> cp, int i) {
  const ChainComplex& c = *cp;
  const Field& k = c.algebra().field();
  const int j = -i;
  const GradedMap d = differential(c);

  ExtBasis e;
  e.c_ = cp;
  e.i_ = i;

  // chain maps: kernel of f -> [d, f]
  const std::size_t nf = GradedMap::flat_size(c, j);
  const std::size_t nz = GradedMap::flat_size(c, j - 1);
  KMatrix cycle_op(k, nz, nf);
  for (std::size_t u = 0; u < nf; ++u) {
    const Vec img = bracket(c, d, GradedMap::from_vec(c, j, unit_vec(k, nf, u))).to_vec();
    for (std::size_t r = 0; r < nz; ++r) cycle_op(r, u) = img[r];
  }
  const std::vector<Vec> cycles = kernel(cycle_op);

  // null-homotopic maps: image of h -> [d, h]
  const std::size_t nh = GradedMap::flat_size(c, j + 1);
  e.boundary_op_ = KMatrix(k, nf, nh);
  e.boundaries_ = Subspace(k, nf);
  for (std::size_t u = 0; u < nh; ++u) {
    const Vec img = bracket(c, d, GradedMap::from_vec(c, j + 1, unit_vec(k, nh, u))).to_vec();
    for (std::size_t r = 0; r < nf; ++r) e.boundary_op_(r, u) = img[r];
    e.boundaries_.insert(img);
  }

  Subspace classes(k, nf);
  for (const auto& z : cycles) classes.insert(e.boundaries_.reduce(z));
  e.rep_vecs_ = classes.basis();
  e.rep_pivots_ = classes.pivots();
  for (const auto& v : e.rep_vecs_) e.reps_.push_back(GradedMap::from_vec(c, j, v));
  return e;
}

ExtBasis::Reduction ExtBasis::reduce(const GradedMap& f) const {
  const ChainComplex& c = *c_;
  if (f.degree() != -i_) throw InvariantViolation("reduce_mod_homotopy: wrong degree");
  if (!is_chain_map(c, f)) throw InvariantViolation("reduce_mod_homotopy: input is not a chain map");
  const Vec v = f.to_vec();
  Vec w = boundaries_.reduce(v);
  Reduction out;
  for (auto p : rep_pivots_) out.coords.push_back(w[p]);
  Vec target = v;
  for (std::size_t a = 0; a < rep_vecs_.size(); ++a) {
    axpy(w, -out.coords[a], rep_vecs_[a]);
    axpy(target, -out.coords[a], rep_vecs_[a]);
  }
  if (!is_zero(w)) throw InvariantViolation("reduce_mod_homotopy: residue outside the boundary space");
  auto h = solve(boundary_op_, target);
  if (!h) throw InvariantViolation("reduce_mod_homotopy: no homotopy witness");
  out.witness = GradedMap::from_vec(c, -i_ + 1, *h);
  return out;
}

GradedMap ExtBasis::from_coords(std::span<const Scalar> coords) const {
  if (coords.size() != reps_.size()) throw std::invalid_argument("ExtBasis::from_coords: length mismatch");
  GradedMap f(*c_, -i_);
  for (std::size_t a = 0; a < reps_.size(); ++a) f.add_scaled(coords[a], reps_[a]);
  return f;
}

bool ExtBasis::is_null_homotopic(const GradedMap& f) const { return boundaries_.contains(f.to_vec()); }

ExtBasis ext_space(std::shared_ptr<const ChainComplex> c, int i) { return ExtBasis::compute(std::move(c), i); }

Vec yoneda(const ExtBasis& ea, std::span<const Scalar> a, const ExtBasis& eb, std::span<const Scalar> b,
           const ExtBasis& target) {
  if (target.ext_degree() != ea.ext_degree() + eb.ext_degree())
    throw std::invalid_argument("yoneda: target degree mismatch");
  const GradedMap prod = compose(ea.complex(), ea.from_coords(a), eb.from_coords(b));
  return target.reduce(prod).coords;
}

Subspace ext1_squared(const ExtBasis& e1, const ExtBasis& e2) {
  const Field& k = e1.complex().algebra().field();
  Subspace s(k, e2.dim());
  for (const auto& f : e1.reps())
    for (const auto& g : e1.reps()) s.insert(e2.reduce(compose(e1.complex(), f, g)).coords);
  return s;
}

}  // namespace nclift
