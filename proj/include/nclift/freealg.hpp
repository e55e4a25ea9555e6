#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nclift/linalg.hpp"

namespace nclift {

/// A word in the generators t_0, ..., t_{r-1}; the empty word is the unit.
using Word = std::vector<std::uint32_t>;

/// Degree first, then lexicographic in generator index.
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// "t" when r == 1, otherwise "t0", "t1", ...
std::string generator_name(std::size_t r, std::size_t i);
/// "1" for the empty word, otherwise generator names joined by '.'.
std::string word_name(std::size_t r, const Word& w);

/// All r^deg words of length deg, in deglex order.
std::vector<Word> monomials(std::size_t r, std::size_t deg);

/// Coordinates on T_N = k<t_0..t_{r-1}>/m^{N+1}: the words of length <= N,
/// numbered by degree and then lexicographically. The number of a word does
/// not depend on N, so T_N sits inside T_{N+1} as a prefix of coordinates.
class WordIndex {
 public:
  WordIndex() : WordIndex(0, 0) {}
  WordIndex(std::size_t r, std::size_t order);

  std::size_t generators() const { return r_; }
  std::size_t order() const { return n_; }
  std::size_t size() const { return offset_[n_ + 1]; }
  /// First coordinate of degree d; offset(order() + 1) == size().
  std::size_t offset(std::size_t d) const { return offset_[d]; }
  std::size_t count(std::size_t d) const { return offset_[d + 1] - offset_[d]; }
  std::size_t degree(std::size_t idx) const;

  std::size_t index(const Word& w) const;
  Word word(std::size_t idx) const;
  std::string name(std::size_t idx) const { return word_name(r_, word(idx)); }

  /// Index of the concatenation, or nullopt when its degree exceeds the order.
  std::optional<std::size_t> concat(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> left_mul(std::size_t gen, std::size_t idx) const;
  std::optional<std::size_t> right_mul(std::size_t idx, std::size_t gen) const;

 private:
  std::size_t r_, n_;
  std::vector<std::size_t> offset_;  // size n_ + 2
  std::vector<std::size_t> pow_;     // r^d, size n_ + 2
};

/// Product of two coordinate vectors of T_N (truncated at the order).
Vec series_mul(const WordIndex& idx, std::span<const Scalar> a, std::span<const Scalar> b);
/// Restriction of a vector of T_M coordinates to T_N (N <= M) or zero padding (N > M).
Vec resize_order(const WordIndex& to, std::span<const Scalar> v);

/// Element of T_N kept as a sparse map word -> nonzero coefficient.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(Field k, std::size_t r, std::size_t order) : k_(k), r_(r), order_(order) {}

  static TruncSeries from_vec(const Field& k, const WordIndex& idx, std::span<const Scalar> v);
  /// Parses "c*t0.t1 + t1.t1 - 2" (r == 1 uses "t"); "0" is the zero series.
  static TruncSeries parse(const Field& k, std::size_t r, std::size_t order, std::string_view text);

  const Field& field() const { return k_; }
  std::size_t generators() const { return r_; }
  std::size_t order_cap() const { return order_; }
  const std::map<Word, Scalar, DeglexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest degree carrying a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> leading_order() const;
  Scalar coeff(const Word& w) const;

  /// Adds c*w; terms of degree above the cap are dropped.
  void add_term(const Word& w, const Scalar& c);
  Vec to_vec(const WordIndex& idx) const;
  TruncSeries truncated(std::size_t order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& scale(const Scalar& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  std::string to_string() const;

 private:
  Field k_;
  std::size_t r_ = 0, order_ = 0;
  std::map<Word, Scalar, DeglexLess> terms_;
};

/// Two-sided ideal of T_N, stored as an echelon subspace of the monomial
/// coordinates. Pivots are the lowest monomials, so normal forms are
/// computed with respect to the local (degree-ascending) order.
class IdealSpan {
 public:
  IdealSpan() = default;
  /// The zero ideal.
  IdealSpan(const Field& k, std::size_t r, std::size_t order);
  /// Smallest ideal containing the given coordinate vectors.
  static IdealSpan generated_by(const Field& k, const WordIndex& idx, const std::vector<Vec>& vectors,
                                std::vector<TruncSeries> generators = {});

  const Field& field() const { return span_.field(); }
  const WordIndex& index() const { return idx_; }
  std::size_t num_generators() const { return idx_.generators(); }
  std::size_t order() const { return idx_.order(); }
  const Subspace& span() const { return span_; }
  const std::vector<TruncSeries>& generators() const { return gens_; }
  std::size_t dim() const { return span_.dim(); }
  bool contains(const TruncSeries& s) const { return span_.contains(s.to_vec(idx_)); }

  /// The image in T_M, M <= order().
  IdealSpan truncated(std::size_t order) const;
  /// The full preimage in T_M, M >= order(): this ideal plus m^{order()+1}.
  IdealSpan preimage(std::size_t order) const;
  /// dim of the image of the ideal in T_{d-1}, i.e. dim I / (I ∩ m^d).
  std::size_t dim_mod_power(std::size_t d) const;

 private:
  WordIndex idx_;
  Subspace span_;
  std::vector<TruncSeries> gens_;
};

/// Fixpoint closure of gens under left and right multiplication by every t_i.
IdealSpan ideal_span(const Field& k, std::size_t r, const std::vector<TruncSeries>& gens, std::size_t order);

/// All words of degree >= d inside T_N as an ideal (m^d).
IdealSpan power_of_maximal(const Field& k, std::size_t r, std::size_t d, std::size_t order);

/// The quotient T_N / I with its standard monomials (the non-pivot words).
class QuotientBasis {
 public:
  QuotientBasis() = default;
  explicit QuotientBasis(IdealSpan ideal);

  const Field& field() const { return ideal_.field(); }
  const IdealSpan& ideal() const { return ideal_; }
  const WordIndex& index() const { return ideal_.index(); }
  std::size_t generators() const { return index().generators(); }
  std::size_t order() const { return index().order(); }
  std::size_t dim() const { return standard_.size(); }
  /// Word indices of the standard monomials, ascending.
  const std::vector<std::size_t>& standard() const { return standard_; }
  /// Position of a word among the standard monomials, if it is one.
  std::optional<std::size_t> standard_position(std::size_t word) const;
  std::vector<std::size_t> dims_per_degree() const;

  /// Normal form in T_N coordinates: supported on standard monomials.
  Vec reduce(Vec v) const { return ideal_.span().reduce(std::move(v)); }
  TruncSeries reduce(const TruncSeries& s) const;
  /// Coordinates of the normal form in the standard-monomial basis.
  Vec coords(std::span<const Scalar> v) const;
  Vec from_coords(std::span<const Scalar> c) const;
  /// Product of classes in standard-monomial coordinates.
  Vec mul(std::span<const Scalar> a, std::span<const Scalar> b) const;

 private:
  IdealSpan ideal_;
  std::vector<std::size_t> standard_;
  std::vector<long> position_;  // word -> standard position or -1
};

TruncSeries quotient_mul(const QuotientBasis& q, const TruncSeries& a, const TruncSeries& b);

/// Quotient by I plus all commutators t_i t_j - t_j t_i.
QuotientBasis abelianize(const IdealSpan& ideal);

/// Normal forms of single words modulo a fixed subspace, computed on demand.
class WordNormalForms {
 public:
  WordNormalForms(const WordIndex& idx, const Subspace& ideal) : idx_(idx), ideal_(ideal), cache_(idx.size()) {}
  const Vec& operator()(std::size_t word);

 private:
  const WordIndex& idx_;
  const Subspace& ideal_;
  std::vector<std::optional<Vec>> cache_;
};

}  // namespace nclift
