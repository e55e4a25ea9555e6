#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nclift/complexes.hpp"
#include "nclift/freealg.hpp"
#include "nclift/lifting.hpp"

namespace nclift {

/// The finite-dimensional algebra T_N / J with the standard monomials as
/// basis (unit first, radical after).
std::shared_ptr<const Algebra> algebra_from_quotient(const QuotientBasis& q);

/// Minimal free resolution F_L -> ... -> F_0 = A of the left module k.
struct Resolution {
  std::shared_ptr<const Algebra> algebra;
  std::shared_ptr<const ChainComplex> complex;  // degrees 0..length
  std::size_t length = 0;
  std::vector<std::size_t> ranks() const { return complex->ranks(); }
};

/// A must be local with unit e_0 and radical spanned by e_1, ..., e_{n-1};
/// otherwise InputError(NotLocal).
Resolution resolve_simple(std::shared_ptr<const Algebra> a, std::size_t length);

/// Every differential has all entries in the radical.
bool is_minimal(const Resolution& r);

/// dim H^i Hom_A(F, k). The coboundaries are the constant terms of the
/// differentials; past the computed length the next differential is minimal
/// and contributes nothing. Requires i <= length.
std::size_t ext_k_k(const Resolution& r, std::size_t i);
std::size_t ext_k_k(std::shared_ptr<const Algebra> a, std::size_t i);

/// dim J / (mJ + Jm) for A = T_N / J_N, computed in T_guard with the full
/// preimage J = J_N + m^{N+1}. Default guard N+2; smaller guards throw
/// InputError(GuardTooSmall).
std::size_t second_syzygy_dim(const QuotientBasis& a, std::optional<std::size_t> guard = std::nullopt);

/// Degree-1 differential of the lift: D = Σ_w M_w ⊗ w over the standard
/// monomials w of the parameter quotient.
struct FamilyPresentation {
  std::shared_ptr<const Algebra> algebra;
  QuotientBasis parameters;
  int source_degree = 1;
  std::vector<RMatrix> by_monomial;  // one per standard monomial

  std::size_t rows() const { return by_monomial.empty() ? 0 : by_monomial[0].rows(); }
  std::size_t cols() const { return by_monomial.empty() ? 0 : by_monomial[0].cols(); }
  /// All parameters set to zero.
  const RMatrix& at_zero() const { return by_monomial.at(0); }
  /// "x^3 + t2*x^2 + t1*x + t0": algebra basis descending, then monomials.
  std::string entry_text(std::size_t i, std::size_t j) const;
  std::vector<std::vector<std::string>> text() const;

  /// For a 1x1 family over k[x]/(x^m) of the form x^n + Σ_{j<n} c_j x^j:
  /// the n x n companion matrix over the abelianized parameters (ones on the
  /// superdiagonal, last row -c_0, ..., -c_{n-1}).
  std::optional<std::vector<std::vector<TruncSeries>>> companion() const;
};

/// presentation = {source, target} degrees with source = target + 1; both
/// must lie in the complex, otherwise InputError(NoPresentation).
FamilyPresentation h0_family(const LiftState& s, std::pair<int, int> presentation = {1, 0});

struct RhoRow {
  std::size_t n = 0;  // A_n = P_0 / m^n
  std::size_t ext2_kk = 0;
  std::size_t second_syzygy = 0;
  std::size_t small_ext = 0;
  std::size_t artifact = 0;
  std::size_t non_artifact = 0;
  std::size_t alpha_rank = 0;  // rank of alpha on the non-artifact functionals
  bool alpha_matches_obstruction = false;
  bool ok() const {
    return ext2_kk == second_syzygy && second_syzygy == small_ext && alpha_rank == non_artifact &&
           alpha_matches_obstruction;
  }
};

/// Rows for n = 2..order. Requires order >= 3.
std::vector<RhoRow> rho_report(const LiftState& s);

}  // namespace nclift
