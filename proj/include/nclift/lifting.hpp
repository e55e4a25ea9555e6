#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nclift/complexes.hpp"
#include "nclift/freealg.hpp"
#include "nclift/smallext.hpp"

namespace nclift {

/// Δ = Σ_w g_w ⊗ w over the standard monomials w of A = T_N / J_N.
struct TruncatedLift {
  std::shared_ptr<const ChainComplex> complex;
  QuotientBasis quotient;
  /// Degree -1 maps, one per standard monomial, in quotient.standard() order.
  std::vector<GradedMap> coeffs;

  /// Coefficient of a word; zero for words that are not standard.
  GradedMap coeff(const Word& w) const;
  /// The same lift read over T_M / (J_N + m^{M+1}), M <= N.
  TruncatedLift truncated(std::size_t order) const;
};

struct RelationSeries {
  TruncSeries series;
  std::size_t leading_order = 0;
};

/// One step N -> N+1 of the construction.
struct OrderStep {
  std::size_t order = 0;  // N+1
  std::vector<TruncSeries> directions;
  /// Ext^2-dim x directions.size(): Ext^2 coordinates of the obstructions.
  KMatrix obstruction;
  std::size_t relations = 0;
};

struct LiftState {
  TruncatedLift lift;
  ExtBasis ext1, ext2;
  /// Row i holds the Ext^1 coordinates of the coefficient of t_i.
  KMatrix basis_change;
  std::vector<RelationSeries> relations;
  std::size_t order = 1;
  std::vector<OrderStep> log;

  std::size_t parameters() const { return ext1.dim(); }
  const QuotientBasis& quotient() const { return lift.quotient; }
};

/// Δ = d ⊗ 1 + Σ g_i ⊗ t_i over T/m^2, g_i = Σ_j P_ij rep_j. P defaults to
/// the identity and must be invertible.
LiftState first_order_lift(std::shared_ptr<const ChainComplex> c, const std::optional<KMatrix>& basis_change = {});

/// O_w = Σ_{uv = w} g_u·g_v for every word w of the target index that arises.
std::map<std::size_t, GradedMap> word_products(const TruncatedLift& lift, const WordIndex& target);

/// Δ^2 = Σ_w O_w ⊗ w reduced modulo a subspace of the target coordinates;
/// returns the nonzero coefficients by coordinate.
std::map<std::size_t, GradedMap> lift_square(const TruncatedLift& lift, const WordIndex& target, const Subspace& ideal);

/// Obstructions to going from order N to N+1. Δ reread over
/// B = T_{N+1}/(mJ + Jm) squares to Σ_κ σ_κ ⊗ κ over the small-extension
/// directions κ; each σ_κ is a degree -2 chain map.
struct Obstruction {
  SmallExtSpace space;
  std::vector<GradedMap> sigma;
  KMatrix coords;  // Ext^2-dim x space.dim()
  std::vector<GradedMap> witnesses;
};
Obstruction obstruction_at_order(const LiftState& s);

/// Kills the obstructions: the new ideal is mJ + Jm plus the span of the
/// Ext^2-coordinate combinations Σ_κ c_aκ κ, the lift is corrected by
/// -Σ_κ h_κ ⊗ κ and Δ^2 = 0 is re-verified.
LiftState extend_one_order(const LiftState& s);

LiftState universal_lift(std::shared_ptr<const ChainComplex> c, std::size_t order,
                         const std::optional<KMatrix>& basis_change = {});

/// The state read at a lower order.
LiftState truncate_state(const LiftState& s, std::size_t order);

struct LiftCheck {
  bool square_zero = false;
  bool constant_term = false;
  bool linear_terms = false;
  bool relations_match = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// (a) Δ^2 = 0 over the quotient, (b) constant term d, (c) linear terms are
/// chain maps with Ext^1 coordinates equal to the rows of basis_change,
/// (d) the quotient ideal is generated by the relations.
LiftCheck verify_lift(const LiftState& s);

}  // namespace nclift
