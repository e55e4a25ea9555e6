#include <doctest.h>

#include <random>

#include "nclift/algebra.hpp"
#include "nclift/errors.hpp"

using namespace nclift;

namespace {

AlgebraElement poly(const Algebra& a, std::vector<long> c) {
  AlgebraElement e = a.zero();
  for (std::size_t i = 0; i < c.size(); ++i) e[i] = a.field().from_int(c[i]);
  return e;
}

RMatrix random_rmatrix(const Algebra& a, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  RMatrix m(a, r, c);
  for (auto& s : m.flat()) s = a.field().from_int(static_cast<long>(rng() % 5) - 2);
  return m;
}

// Upper triangular 2x2 matrices: a genuinely non-commutative test algebra.
// Basis e11, e12, e22.
Algebra upper_triangular(const Field& k) {
  auto v = [&](long a, long b, long c) { return Vec{k.from_int(a), k.from_int(b), k.from_int(c)}; };
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, v(0, 0, 0)));
  t[0][0] = v(1, 0, 0);  // e11 e11 = e11
  t[0][1] = v(0, 1, 0);  // e11 e12 = e12
  t[1][2] = v(0, 1, 0);  // e12 e22 = e12
  t[2][2] = v(0, 0, 1);  // e22 e22 = e22
  return Algebra(k, {"e11", "e12", "e22"}, v(1, 0, 1), t);
}

}  // namespace

TEST_CASE("truncated_poly") {
  const Field q = Field::rationals();
  const Algebra r1 = Algebra::truncated_poly(q, 1);
  CHECK(r1.dim() == 1);
  CHECK_FALSE(r1.validate().has_value());

  const Algebra r2 = Algebra::truncated_poly(q, 2);
  CHECK(r2.mul(poly(r2, {0, 1}), poly(r2, {0, 1})) == r2.zero());

  const Algebra r4 = Algebra::truncated_poly(q, 4);
  CHECK(r4.mul(poly(r4, {0, 1}), poly(r4, {0, 0, 1})) == poly(r4, {0, 0, 0, 1}));
  CHECK(r4.mul(poly(r4, {0, 0, 1}), poly(r4, {0, 0, 1})) == r4.zero());
  CHECK_FALSE(r4.validate().has_value());

  CHECK_THROWS_AS(Algebra::truncated_poly(q, 0), InputError);
}

TEST_CASE("validate reports a non-associative table") {
  const Field q = Field::rationals();
  // basis 1, a, b with a*a = b, b*a = a, everything else zero: (a a) a = b a = a but a (a a) = a b = 0
  auto v = [&](long x, long y, long z) { return Vec{q.from_int(x), q.from_int(y), q.from_int(z)}; };
  std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, v(0, 0, 0)));
  for (int i = 0; i < 3; ++i) {
    t[0][i] = Vec(3, q.zero());
    t[0][i][i] = q.one();
    t[i][0] = t[0][i];
  }
  t[1][1] = v(0, 0, 1);
  t[2][1] = v(0, 1, 0);
  const Algebra bad(q, {"1", "a", "b"}, v(1, 0, 0), t);
  auto violation = bad.validate();
  REQUIRE(violation.has_value());
  CHECK(violation->kind == AlgebraViolation::Kind::Associativity);
  CHECK(violation->detail.find("(a, a, a)") != std::string::npos);

  CHECK_FALSE(upper_triangular(q).validate().has_value());
}

TEST_CASE("rmat_mul examples") {
  const Field q = Field::rationals();
  const Algebra r2 = Algebra::truncated_poly(q, 2);
  RMatrix x(r2, 1, 1);
  x.at(0, 0)[1] = q.one();
  CHECK(rmat_mul(r2, x, x).is_zero());

  const Algebra r4 = Algebra::truncated_poly(q, 4);
  RMatrix a(r4, 1, 1), b(r4, 1, 1), c(r4, 1, 1);
  a.at(0, 0)[1] = q.one();
  b.at(0, 0)[2] = q.one();
  c.at(0, 0)[3] = q.one();
  CHECK(rmat_mul(r4, a, b) == c);

  std::mt19937_64 rng(1);
  const RMatrix m = random_rmatrix(r4, 2, 3, rng);
  CHECK(rmat_mul(r4, rmat_identity(r4, 2), m) == m);
  CHECK_THROWS_AS(rmat_mul(r4, m, m), InputError);
}

TEST_CASE("rmat_mul is associative on random triples") {
  std::mt19937_64 rng(2);
  const Field k = Field::prime(5);
  const Algebra ut = upper_triangular(k);
  for (int t = 0; t < 20; ++t) {
    const std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3, r = 1 + rng() % 3, s = 1 + rng() % 3;
    const RMatrix a = random_rmatrix(ut, p, q, rng), b = random_rmatrix(ut, q, r, rng), c = random_rmatrix(ut, r, s, rng);
    CHECK(rmat_mul(ut, rmat_mul(ut, a, b), c) == rmat_mul(ut, a, rmat_mul(ut, b, c)));
  }
}

TEST_CASE("RMatrix maps are left-module maps and compose in argument order") {
  std::mt19937_64 rng(4);
  const Field k = Field::prime(7);
  const Algebra ut = upper_triangular(k);
  for (int t = 0; t < 20; ++t) {
    const RMatrix m = random_rmatrix(ut, 2, 3, rng), n = random_rmatrix(ut, 3, 2, rng);
    std::vector<AlgebraElement> x(2, ut.zero());
    for (auto& e : x)
      for (auto& s : e) s = k.from_int(static_cast<long>(rng() % 7));
    AlgebraElement r = ut.zero();
    for (auto& s : r) s = k.from_int(static_cast<long>(rng() % 7));

    std::vector<AlgebraElement> rx;
    for (const auto& e : x) rx.push_back(ut.mul(r, e));
    const auto lhs = apply_row(ut, rx, m);
    const auto mx = apply_row(ut, x, m);
    for (std::size_t j = 0; j < lhs.size(); ++j) CHECK(lhs[j] == ut.mul(r, mx[j]));

    // x -> (x M) N equals x -> x (M N)
    CHECK(apply_row(ut, mx, n) == apply_row(ut, x, rmat_mul(ut, m, n)));
  }
}
