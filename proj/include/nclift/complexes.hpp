#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "nclift/algebra.hpp"

namespace nclift {

/// Bounded complex of finite-rank free left R-modules
///   F_hi -> ... -> F_lo,   d_i : F_i -> F_{i-1}.
/// Degrees outside [lo, hi] carry the zero module.
class ChainComplex {
 public:
  /// diffs[k] is d_{lo+k} as a rank(lo+k) x rank(lo+k-1) RMatrix (so the
  /// first one has zero columns). Throws InputError(ComplexNotDg) if d^2 != 0.
  ChainComplex(std::shared_ptr<const Algebra> alg, int lo, std::vector<std::size_t> ranks, std::vector<RMatrix> diffs);

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int i) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d_i; a rank(i) x rank(i-1) RMatrix for i in [lo, hi].
  const RMatrix& diff(int i) const { return diffs_.at(static_cast<std::size_t>(i - lo_)); }
  bool in_range(int i) const { return i >= lo_ && i <= hi(); }

 private:
  std::shared_ptr<const Algebra> alg_;
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<RMatrix> diffs_;
};

/// Graded homomorphism F -> F[j]; component i maps F_i -> F_{i+j}.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(const ChainComplex& c, int degree);

  int degree() const { return degree_; }
  /// Component on F_i, indexed by source degree in [lo, hi].
  RMatrix& component(int i) { return comps_.at(static_cast<std::size_t>(i - lo_)); }
  const RMatrix& component(int i) const { return comps_.at(static_cast<std::size_t>(i - lo_)); }

  bool is_zero() const;
  GradedMap& operator+=(const GradedMap& o);
  GradedMap& operator-=(const GradedMap& o);
  GradedMap& scale(const Scalar& c);
  GradedMap& add_scaled(const Scalar& c, const GradedMap& o);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  friend bool operator==(const GradedMap& a, const GradedMap& b) = default;

  /// Flattened coordinates (components from the top source degree down,
  /// entries row-major, then algebra basis) and the inverse.
  Vec to_vec() const;
  static GradedMap from_vec(const ChainComplex& c, int degree, std::span<const Scalar> v);
  static std::size_t flat_size(const ChainComplex& c, int degree);

 private:
  int degree_ = 0;
  int lo_ = 0;
  std::vector<RMatrix> comps_;
};

GradedMap differential(const ChainComplex& c);
GradedMap identity_map(const ChainComplex& c);

/// Composite f·g (apply g, then f); degree is the sum.
GradedMap compose(const ChainComplex& c, const GradedMap& f, const GradedMap& g);

/// [f, g] = f·g + (-1)^{j+l} g·f for f of degree j, g of degree l.
GradedMap bracket(const ChainComplex& c, const GradedMap& f, const GradedMap& g);

/// [d, f] == 0.
bool is_chain_map(const ChainComplex& c, const GradedMap& f);

/// d_{i-1} ∘ d_i = 0 for every i.
bool is_dg(const ChainComplex& c);

/// Ext^i(F, F) as degree -i chain maps modulo null-homotopic ones, with
/// canonical representatives: the RMatrix coordinates of chain maps are
/// reduced modulo the boundary space {[d, h]}, and the representatives are
/// the reduced row-echelon basis of the result.
class ExtBasis {
 public:
  struct Reduction {
    Vec coords;
    /// Degree -i+1 map h with f = Σ coords_a reps_a + [d, h].
    GradedMap witness;
  };

  static ExtBasis compute(std::shared_ptr<const ChainComplex> c, int i);

  int ext_degree() const { return i_; }
  int map_degree() const { return -i_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<GradedMap>& reps() const { return reps_; }
  const ChainComplex& complex() const { return *c_; }
  std::shared_ptr<const ChainComplex> complex_ptr() const { return c_; }

  /// Throws InvariantViolation if f is not a chain map of the right degree.
  Reduction reduce(const GradedMap& f) const;
  GradedMap from_coords(std::span<const Scalar> coords) const;
  bool is_null_homotopic(const GradedMap& f) const;

 private:
  std::shared_ptr<const ChainComplex> c_;
  int i_ = 0;
  KMatrix boundary_op_;  // columns: [d, e_h] for unit homotopies e_h
  Subspace boundaries_;
  std::vector<GradedMap> reps_;
  std::vector<Vec> rep_vecs_;
  std::vector<std::size_t> rep_pivots_;
};

/// Ext^i(F,F) dimension, convenience wrapper around ExtBasis::compute.
ExtBasis ext_space(std::shared_ptr<const ChainComplex> c, int i);

/// Yoneda product [f][g] = [f·g], in coordinates.
Vec yoneda(const ExtBasis& ea, std::span<const Scalar> a, const ExtBasis& eb, std::span<const Scalar> b,
           const ExtBasis& target);

/// Span of all products of two Ext^1 classes, as a subspace of Ext^2 coordinates.
Subspace ext1_squared(const ExtBasis& e1, const ExtBasis& e2);

}  // namespace nclift
