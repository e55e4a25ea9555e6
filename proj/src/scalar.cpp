#include "nclift/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "nclift/errors.hpp"

namespace nclift {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1;
  b %= m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError(ErrorCode::BadField, "field", "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field{p};
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q" || s == "qq" || s == "rational" || s == "rationals") return rationals();
  if (s.size() > 2 && s.compare(0, 2, "gf") == 0) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), p);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return prime(p);
  }
  throw InputError(ErrorCode::BadField, "field", "unrecognised field '" + std::string(text) + "'");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.v_ = mpq_class(v);
  } else {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    s.v_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string t(text);
  try {
    mpq_class q(t, 10);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    if (p_ == 0) {
      Scalar s;
      s.v_ = q;
      return s;
    }
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0) throw std::invalid_argument("denominator divisible by p");
    if (num < 0) num += p_;
    Scalar n = from_int(static_cast<long>(num.get_si()));
    Scalar d = from_int(static_cast<long>(den.get_si()));
    return n / d;
  } catch (const std::invalid_argument&) {
    throw InputError(ErrorCode::BadScalar, "scalar", "cannot parse scalar '" + t + "' over " + name());
  }
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_one() const { return p_ == 0 ? q() == 1 : r() == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q() += o.q();
  else r() = (r() + o.r()) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q() -= o.q();
  else r() = (r() + p_ - o.r()) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q() *= o.q();
  else r() = r() * o.r() % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) s.q() = -q();
  else s.r() = r() == 0 ? 0 : p_ - r();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (p_ == 0) s.q() = 1 / q();
  else s.r() = pow_mod(r(), p_ - 2, p_);
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q() == b.q() : a.r() == b.r();
}

bool Scalar::is_negative_for_display() const {
  if (p_ == 0) return sgn(q()) < 0;
  return r() > p_ / 2;
}

std::string Scalar::to_string() const {
  if (p_ == 0) return q().get_str();
  if (r() > p_ / 2) return "-" + std::to_string(p_ - r());
  return std::to_string(r());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nclift
