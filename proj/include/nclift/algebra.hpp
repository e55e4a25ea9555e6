#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nclift/linalg.hpp"

namespace nclift {

/// Coefficient vector of an element of R in the fixed k-basis.
using AlgebraElement = Vec;

struct AlgebraViolation {
  enum class Kind { Unit, Associativity } kind;
  std::string detail;
};

/// Finite-dimensional associative unital k-algebra given by structure
/// constants: e_i * e_j = Σ_l c_{ij}^l e_l.
class Algebra {
 public:
  /// table[i][j] is the coefficient vector of e_i * e_j. Only shapes are
  /// checked here; call validate() for the algebra axioms.
  Algebra(Field k, std::vector<std::string> labels, Vec unit, std::vector<std::vector<Vec>> table);

  /// k[x]/(x^m), basis 1, x, ..., x^{m-1}.
  static Algebra truncated_poly(const Field& k, std::size_t m);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  Vec product(std::size_t i, std::size_t j) const;

  AlgebraElement zero() const { return zero_vec(field_, dim_); }
  AlgebraElement basis_element(std::size_t i) const { return unit_vec(field_, dim_, i); }
  AlgebraElement mul(std::span<const Scalar> a, std::span<const Scalar> b) const;
  /// out += c * a * b
  void mul_acc(std::span<Scalar> out, const Scalar& c, std::span<const Scalar> a, std::span<const Scalar> b) const;

  /// Checks unit laws and associativity on all basis triples; reports the
  /// first violation.
  std::optional<AlgebraViolation> validate() const;

  std::string format(std::span<const Scalar> a) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  Vec unit_;
  std::vector<std::vector<Vec>> table_;
  // sparse copy of table_: (l, c) with c != 0
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

/// Matrix with entries in R. An a x b RMatrix M is the left R-module map
/// R^a -> R^b sending the row vector x to x * M; hence "first M, then N"
/// is rmat_mul(M, N).
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(const Algebra& alg, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t elem_dim() const { return dim_; }
  std::size_t flat_size() const { return data_.size(); }

  std::span<Scalar> at(std::size_t i, std::size_t j) { return {data_.data() + (i * cols_ + j) * dim_, dim_}; }
  std::span<const Scalar> at(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * cols_ + j) * dim_, dim_};
  }
  /// All coordinates, entry-major then basis index.
  const Vec& flat() const { return data_; }
  Vec& flat() { return data_; }

  bool is_zero() const { return nclift::is_zero(data_); }
  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& scale(const Scalar& c);
  /// this += c * o
  RMatrix& add_scaled(const Scalar& c, const RMatrix& o);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, dim_ = 0;
  Vec data_;
};

/// Ordinary matrix product with entries multiplied in R.
RMatrix rmat_mul(const Algebra& alg, const RMatrix& a, const RMatrix& b);
RMatrix rmat_identity(const Algebra& alg, std::size_t n);
/// Row vector of algebra elements times M.
std::vector<AlgebraElement> apply_row(const Algebra& alg, const std::vector<AlgebraElement>& x, const RMatrix& m);

}  // namespace nclift
