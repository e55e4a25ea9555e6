#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nclift/freealg.hpp"

namespace nclift {

struct LiftState;

/// Small extensions of A = T_N / J_N, through the coordinates of
/// J / (mJ + Jm) where J = J_N + m^{N+1} is the full preimage in T.
///
/// J contains every word of degree > N, so mJ + Jm contains every word of
/// degree > N+1. The quotient is therefore computed inside T_{N+1}; the
/// guard order only has to be large enough for that argument (N+2).
class SmallExtSpace {
 public:
  const QuotientBasis& base() const { return base_; }
  std::size_t order() const { return base_.order(); }
  std::size_t guard() const { return guard_; }
  /// Coordinates of T_{N+1}.
  const WordIndex& ambient() const { return j_.index(); }
  /// J = J_N + m^{N+1} inside T_{N+1}.
  const IdealSpan& j_space() const { return j_; }
  /// mJ + Jm inside T_{N+1}.
  const Subspace& m_space() const { return m_; }

  std::size_t dim() const { return directions_.size(); }
  /// Basis of J/(mJ + Jm): normal forms modulo mJ + Jm in reduced echelon form.
  const std::vector<Vec>& directions() const { return directions_; }
  const std::vector<std::size_t>& direction_pivots() const { return pivots_; }
  std::vector<TruncSeries> direction_series() const;

  /// Coordinates of v in J modulo mJ + Jm. The coordinate functionals are the
  /// dual basis of directions(); a small-extension class is a vector of
  /// values of a functional on directions(). Throws std::invalid_argument if
  /// v is not in J.
  Vec coords(std::span<const Scalar> v) const;

  /// Directions coming from the cut m^{N+1}: the span of the classes of the
  /// degree N+1 words, in direction coordinates.
  Subspace artifact_subspace() const;
  /// Basis of the functionals vanishing on artifact_subspace().
  std::vector<Vec> non_artifact_functionals() const;

 private:
  friend SmallExtSpace small_ext_space(const QuotientBasis& a, std::optional<std::size_t> guard);
  QuotientBasis base_;
  std::size_t guard_ = 0;
  IdealSpan j_;
  Subspace m_;
  std::vector<Vec> directions_;
  std::vector<std::size_t> pivots_;
};

/// Throws InputError(GuardTooSmall) when guard < N+2. Default guard is N+2.
SmallExtSpace small_ext_space(const QuotientBasis& a, std::optional<std::size_t> guard = std::nullopt);

/// Obstruction class of the small extension given by a functional on
/// J/(mJ + Jm): builds A' = T/J_f with J_f = mJ + Jm + ker f, takes the lift
/// coefficients verbatim, checks Δ'^2 = σ ⊗ ε and returns the Ext^2
/// coordinates of σ. The lift of the state must live over space.base().
Vec alpha(const LiftState& s, const SmallExtSpace& space, std::span<const Scalar> functional);

/// Ext^2-dim x space.dim() matrix of alpha on the dual basis.
KMatrix alpha_matrix(const LiftState& s, const SmallExtSpace& space);

/// Rank of alpha restricted to the span of the given functionals.
std::size_t rank_on(const KMatrix& alpha, const std::vector<Vec>& functionals);

struct SquareIsoReport {
  std::size_t ext1_squared_dim = 0;
  /// dim I / (I ∩ m^3), read off the ideal of the state.
  std::size_t relations_mod_cube = 0;
  bool ok() const { return ext1_squared_dim == relations_mod_cube; }
};

/// Requires order >= 3.
SquareIsoReport square_iso_report(const LiftState& s);

}  // namespace nclift
