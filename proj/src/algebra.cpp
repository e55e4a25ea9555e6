#include "nclift/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nclift/errors.hpp"

namespace nclift {

Algebra::Algebra(Field k, std::vector<std::string> labels, Vec unit, std::vector<std::vector<Vec>> table)
    : field_(k), dim_(labels.size()), labels_(std::move(labels)), unit_(std::move(unit)), table_(std::move(table)) {
  if (dim_ == 0) throw InputError(ErrorCode::SchemaError, "algebra", "algebra must have positive dimension");
  if (unit_.size() != dim_) throw InputError(ErrorCode::SchemaError, "algebra.unit", "unit has wrong length");
  if (table_.size() != dim_) throw InputError(ErrorCode::SchemaError, "algebra.mult", "multiplication table has wrong size");
  sparse_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (table_[i].size() != dim_)
      throw InputError(ErrorCode::SchemaError, "algebra.mult[" + std::to_string(i) + "]", "row has wrong size");
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& v = table_[i][j];
      if (v.size() != dim_)
        throw InputError(ErrorCode::SchemaError,
                         "algebra.mult[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                         "product vector has wrong length");
      for (std::size_t l = 0; l < dim_; ++l)
        if (!v[l].is_zero()) sparse_[i * dim_ + j].emplace_back(l, v[l]);
    }
  }
}

Algebra Algebra::truncated_poly(const Field& k, std::size_t m) {
  if (m == 0) throw InputError(ErrorCode::BadArgument, "algebra.truncated_poly", "truncated_poly needs m >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m, zero_vec(k, m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i + j < m) table[i][j][i + j] = k.one();
  return Algebra(k, std::move(labels), unit_vec(k, m, 0), std::move(table));
}

Vec Algebra::product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

void Algebra::mul_acc(std::span<Scalar> out, const Scalar& c, std::span<const Scalar> a,
                      std::span<const Scalar> b) const {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    const Scalar ca = c * a[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar cab = ca * b[j];
      for (const auto& [l, s] : sparse_[i * dim_ + j]) out[l] += cab * s;
    }
  }
}

AlgebraElement Algebra::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("Algebra::mul: length mismatch");
  AlgebraElement out = zero();
  mul_acc(out, field_.one(), a, b);
  return out;
}

std::optional<AlgebraViolation> Algebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const AlgebraElement e = basis_element(i);
    if (mul(unit_, e) != e)
      return AlgebraViolation{AlgebraViolation::Kind::Unit, "unit law fails: 1 * " + labels_[i] + " != " + labels_[i]};
    if (mul(e, unit_) != e)
      return AlgebraViolation{AlgebraViolation::Kind::Unit, "unit law fails: " + labels_[i] + " * 1 != " + labels_[i]};
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const AlgebraElement ij = table_[i][j];
      for (std::size_t l = 0; l < dim_; ++l) {
        const AlgebraElement left = mul(ij, basis_element(l));
        const AlgebraElement right = mul(basis_element(i), table_[j][l]);
        if (left != right)
          return AlgebraViolation{AlgebraViolation::Kind::Associativity,
                                  "associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[l] + ")"};
      }
    }
  return std::nullopt;
}

std::string Algebra::format(std::span<const Scalar> a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = dim_; i-- > 0;) {
    if (a[i].is_zero()) continue;
    Scalar c = a[i];
    const bool neg = c.is_negative_for_display();
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (labels_[i] == "1") os << c;
    else if (c.is_one()) os << labels_[i];
    else os << c << "*" << labels_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

RMatrix::RMatrix(const Algebra& alg, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), dim_(alg.dim()), data_(rows * cols * alg.dim(), alg.field().zero()) {}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (data_.size() != o.data_.size() || rows_ != o.rows_) throw std::invalid_argument("RMatrix +=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  if (data_.size() != o.data_.size() || rows_ != o.rows_) throw std::invalid_argument("RMatrix -=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

RMatrix& RMatrix::scale(const Scalar& c) {
  nclift::scale(data_, c);
  return *this;
}

RMatrix& RMatrix::add_scaled(const Scalar& c, const RMatrix& o) {
  if (data_.size() != o.data_.size() || rows_ != o.rows_) throw std::invalid_argument("RMatrix add_scaled: shape mismatch");
  axpy(data_, c, o.data_);
  return *this;
}

RMatrix rmat_mul(const Algebra& alg, const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw InputError(ErrorCode::ShapeMismatch, "rmat_mul", "rmat_mul: a.cols != b.rows");
  RMatrix out(alg, a.rows(), b.cols());
  const Scalar one = alg.field().one();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      auto x = a.at(i, l);
      if (nclift::is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) alg.mul_acc(out.at(i, j), one, x, b.at(l, j));
    }
  return out;
}

RMatrix rmat_identity(const Algebra& alg, std::size_t n) {
  RMatrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = m.at(i, i);
    std::copy(alg.unit().begin(), alg.unit().end(), e.begin());
  }
  return m;
}

std::vector<AlgebraElement> apply_row(const Algebra& alg, const std::vector<AlgebraElement>& x, const RMatrix& m) {
  if (x.size() != m.rows()) throw InputError(ErrorCode::ShapeMismatch, "apply_row", "apply_row: length mismatch");
  std::vector<AlgebraElement> y(m.cols(), alg.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) alg.mul_acc(y[j], alg.field().one(), x[i], m.at(i, j));
  return y;
}

}  // namespace nclift
