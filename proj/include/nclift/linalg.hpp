#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nclift/scalar.hpp"

namespace nclift {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& k, std::size_t n);
Vec unit_vec(const Field& k, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x);
void scale(Vec& v, const Scalar& a);
/// Index of the first nonzero entry, or nullopt.
std::optional<std::size_t> leading_index(std::span<const Scalar> v);

/// Dense matrix over k, row-major.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(const Field& k, std::size_t rows, std::size_t cols);
  static KMatrix identity(const Field& k, std::size_t n);
  static KMatrix from_rows(const Field& k, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  KMatrix transpose() const;
  Vec apply(std::span<const Scalar> x) const;  // this * x
  KMatrix operator*(const KMatrix& o) const;
  friend bool operator==(const KMatrix& a, const KMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

struct RrefResult {
  std::size_t rank = 0;
  KMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form (unique).
RrefResult rref(const KMatrix& m);

/// Some x with A x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vec> solve(const KMatrix& a, std::span<const Scalar> b);

/// Basis of {x : A x = 0}, one vector per free column, in RREF order.
std::vector<Vec> kernel(const KMatrix& a);

std::size_t rank(const KMatrix& m);

/// A linear subspace of k^n kept in echelon form. Rows are inserted
/// incrementally; normal forms modulo the subspace are canonical (they
/// vanish on every pivot column) regardless of insertion order.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& k, std::size_t ambient_dim);
  static Subspace span(const Field& k, std::size_t ambient_dim, const std::vector<Vec>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds v; returns the reduced vector that was added, or nullopt if v was
  /// already in the span.
  std::optional<Vec> insert(Vec v);
  /// v minus its component along the subspace; zero on every pivot column.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Canonical basis: the rows of the reduced row-echelon form, sorted by pivot.
  std::vector<Vec> basis() const;
  /// Pivot columns in increasing order, matching basis().
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;         // echelon rows, leading entry 1
  std::vector<std::size_t> piv_;  // pivot of rows_[i]
  std::vector<long> pivot_row_;   // column -> row index, -1 if none
};

/// The quotient U/V for V ⊆ U ⊆ k^n, with a fixed complement basis of V in U
/// (rows of an RREF, so coordinates are read off at the complement pivots).
class QuotientSpace {
 public:
  QuotientSpace(const Subspace& u, const Subspace& v);

  std::size_t dim() const { return complement_.size(); }
  const Subspace& numerator() const { return u_; }
  const Subspace& denominator() const { return v_; }
  /// Complement generators c_a; v + V = Σ coords_a c_a + V.
  const std::vector<Vec>& complement() const { return complement_; }

  /// Coordinates of v + V. Throws std::invalid_argument if v is not in U.
  Vec coords(std::span<const Scalar> v) const;
  Vec lift(std::span<const Scalar> coords) const;

 private:
  Subspace u_, v_;
  std::vector<Vec> complement_;
  std::vector<std::size_t> complement_pivots_;
};

/// Coordinates of v + V in U/V (see QuotientSpace).
Vec quotient_coords(const Subspace& u, const Subspace& v, std::span<const Scalar> x);

}  // namespace nclift
