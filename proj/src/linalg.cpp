#include "nclift/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nclift {

Vec zero_vec(const Field& k, std::size_t n) { return Vec(n, k.zero()); }

Vec unit_vec(const Field& k, std::size_t n, std::size_t i) {
  Vec v = zero_vec(k, n);
  v.at(i) = k.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

void scale(Vec& v, const Scalar& a) {
  for (auto& s : v)
    if (!s.is_zero()) s *= a;
}

std::optional<std::size_t> leading_index(std::span<const Scalar> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// KMatrix

KMatrix::KMatrix(const Field& k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

KMatrix KMatrix::identity(const Field& k, std::size_t n) {
  KMatrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

KMatrix KMatrix::from_rows(const Field& k, std::size_t cols, const std::vector<Vec>& rows) {
  KMatrix m(k, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec KMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec KMatrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec KMatrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("KMatrix::apply: shape mismatch");
  Vec y = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero() && !(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("KMatrix product: shape mismatch");
  KMatrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Scalar& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(l, j).is_zero()) p(i, j) += a * o(l, j);
    }
  return p;
}

bool operator==(const KMatrix& a, const KMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Row reduction

RrefResult rref(const KMatrix& m) {
  RrefResult out{0, m, {}};
  KMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const KMatrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const KMatrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: A.rows != len(b)");
  const Field& k = a.field();
  KMatrix aug(k, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(k, a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, a.cols());
  return x;
}

std::vector<Vec> kernel(const KMatrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(a.field(), a.cols());
    x[f] = a.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = -r.reduced(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const Field& k, std::size_t ambient_dim)
    : field_(k), n_(ambient_dim), pivot_row_(ambient_dim, -1) {}

Subspace Subspace::span(const Field& k, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(k, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c].is_zero()) continue;
    const long r = pivot_row_[c];
    if (r < 0) continue;
    const Vec& row = rows_[static_cast<std::size_t>(r)];
    const Scalar f = v[c];
    for (std::size_t j = c; j < n_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

std::optional<Vec> Subspace::insert(Vec v) {
  Vec w = reduce(std::move(v));
  auto lead = leading_index(w);
  if (!lead) return std::nullopt;
  scale(w, w[*lead].inverse());
  pivot_row_[*lead] = static_cast<long>(rows_.size());
  piv_.push_back(*lead);
  rows_.push_back(w);
  return w;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(Vec(v.begin(), v.end()))); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& r) { return contains(r); });
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p = piv_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return piv_[a] < piv_[b]; });
  std::vector<Vec> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(rows_[i]);
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::size_t p = piv_[order[i]];
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j][p].is_zero()) continue;
      const Scalar f = out[j][p];
      axpy(out[j], -f, out[i]);
    }
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  Subspace s = *this;
  for (const auto& r : other.rows_) s.insert(r);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Σ a_i u_i ∈ other  ⟺  Σ a_i NF_other(u_i) = 0
  const std::size_t m = rows_.size();
  KMatrix a(field_, n_, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec r = other.reduce(rows_[i]);
    for (std::size_t j = 0; j < n_; ++j) a(j, i) = r[j];
  }
  Subspace out(field_, n_);
  for (const auto& coeffs : kernel(a)) {
    Vec v = zero_vec(field_, n_);
    for (std::size_t i = 0; i < m; ++i) axpy(v, coeffs[i], rows_[i]);
    out.insert(std::move(v));
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.dim() == b.dim() && a.contains(b);
}

// ---------------------------------------------------------------------------
// Quotients

QuotientSpace::QuotientSpace(const Subspace& u, const Subspace& v) : u_(u), v_(v) {
  if (!u.contains(v)) throw std::invalid_argument("QuotientSpace: V is not contained in U");
  Subspace c(u.field(), u.ambient_dim());
  for (const auto& b : u.basis()) c.insert(v.reduce(b));
  complement_ = c.basis();
  complement_pivots_ = c.pivots();
}

Vec QuotientSpace::coords(std::span<const Scalar> x) const {
  Vec w = v_.reduce(Vec(x.begin(), x.end()));
  Vec out;
  out.reserve(complement_.size());
  for (auto p : complement_pivots_) out.push_back(w[p]);
  for (std::size_t a = 0; a < complement_.size(); ++a) axpy(w, -out[a], complement_[a]);
  if (!is_zero(w)) throw std::invalid_argument("quotient_coords: vector is not in U");
  return out;
}

Vec QuotientSpace::lift(std::span<const Scalar> coords) const {
  if (coords.size() != complement_.size()) throw std::invalid_argument("QuotientSpace::lift: length mismatch");
  Vec v = zero_vec(u_.field(), u_.ambient_dim());
  for (std::size_t a = 0; a < coords.size(); ++a) axpy(v, coords[a], complement_[a]);
  return v;
}

Vec quotient_coords(const Subspace& u, const Subspace& v, std::span<const Scalar> x) {
  return QuotientSpace(u, v).coords(x);
}

}  // namespace nclift
