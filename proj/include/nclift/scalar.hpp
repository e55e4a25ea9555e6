#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace nclift {

class Scalar;

/// Ground field: either the rationals or a prime field GF(p), p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Accepts "q", "Q", "gf5", "GF(5)", "GF5".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  /// Integer or "a/b" literal.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Arithmetic between elements of different fields
/// throws std::logic_error.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  Field field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q()) == 0 : r() == 0; }
  bool is_one() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Sign-aware helpers for pretty printing; for GF(p) the residue is
  /// shown in the symmetric range (-p/2, p/2].
  bool is_negative_for_display() const;
  std::string to_string() const;

 private:
  friend class Field;
  void check_same(const Scalar& o) const;
  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  mpq_class& q() { return std::get<mpq_class>(v_); }
  std::uint64_t r() const { return std::get<std::uint64_t>(v_); }
  std::uint64_t& r() { return std::get<std::uint64_t>(v_); }

  // mpq_class when p_ == 0, residue otherwise
  std::variant<mpq_class, std::uint64_t> v_;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nclift
