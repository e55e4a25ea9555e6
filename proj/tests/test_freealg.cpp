#include <doctest.h>

#include <random>

#include "nclift/errors.hpp"
#include "nclift/freealg.hpp"

using namespace nclift;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TruncSeries commutator(const Field& k, std::size_t order) {
  return TruncSeries::parse(k, 2, order, "t0.t1 - t1.t0");
}

TruncSeries random_series(const Field& k, const WordIndex& idx, std::mt19937_64& rng, std::size_t min_deg = 0) {
  Vec v = zero_vec(k, idx.size());
  for (std::size_t i = idx.offset(std::min(min_deg, idx.order() + 1)); i < idx.size(); ++i)
    if (rng() % 2) v[i] = k.from_int(static_cast<long>(rng() % 7) - 3);
  return TruncSeries::from_vec(k, idx, v);
}

// Ideal of T_N by explicit enumeration: the span of u*g*v over all words u, v.
Subspace ideal_by_enumeration(const Field& k, const WordIndex& idx, const std::vector<TruncSeries>& gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens)
    for (std::size_t u = 0; u < idx.size(); ++u)
      for (std::size_t v = 0; v < idx.size(); ++v) {
        TruncSeries uu(k, idx.generators(), idx.order()), vv(k, idx.generators(), idx.order());
        uu.add_term(idx.word(u), k.one());
        vv.add_term(idx.word(v), k.one());
        vs.push_back((uu * g * vv).to_vec(idx));
      }
  return Subspace::span(k, idx.size(), vs);
}

}  // namespace

TEST_CASE("monomials and the word index") {
  CHECK(monomials(2, 0) == std::vector<Word>{Word{}});
  CHECK(monomials(2, 2).size() == 4);
  CHECK(monomials(3, 3).size() == 27);
  CHECK(monomials(2, 2)[1] == Word{0, 1});

  const WordIndex idx(3, 4);
  CHECK(idx.size() == 1 + 3 + 9 + 27 + 81);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index(idx.word(i)) == i);
  for (std::size_t a = 0; a < idx.size(); a += 7)
    for (std::size_t b = 0; b < idx.size(); b += 5) {
      Word w = idx.word(a);
      const Word wb = idx.word(b);
      w.insert(w.end(), wb.begin(), wb.end());
      auto c = idx.concat(a, b);
      CHECK(c.has_value() == (w.size() <= 4));
      if (c) CHECK(idx.word(*c) == w);
    }
  // indices do not depend on the order
  const WordIndex big(3, 6);
  CHECK(big.index({2, 1, 0}) == idx.index({2, 1, 0}));

  const WordIndex none(0, 3);
  CHECK(none.size() == 1);
}

TEST_CASE("series text form") {
  const Field q = Field::rationals();
  const TruncSeries s = TruncSeries::parse(q, 2, 4, "t1.t0 - 2*t0.t1.t1 + 1/2 + t0");
  CHECK(s.to_string() == "1/2 + t0 + t1.t0 - 2*t0.t1.t1");
  CHECK(TruncSeries::parse(q, 2, 4, s.to_string()) == s);
  CHECK(TruncSeries::parse(q, 1, 3, "t.t").to_string() == "t.t");
  CHECK(TruncSeries::parse(q, 1, 3, "0").is_zero());
  CHECK(TruncSeries::parse(q, 1, 2, "t.t.t").is_zero());
  CHECK(*s.leading_order() == 0);
  CHECK_THROWS_AS(TruncSeries::parse(q, 2, 3, "t2"), InputError);
  CHECK_THROWS_AS(TruncSeries::parse(q, 2, 3, "t0 + "), InputError);

  std::mt19937_64 rng(2);
  const Field f = Field::prime(7);
  const WordIndex idx(3, 3);
  for (int t = 0; t < 20; ++t) {
    const TruncSeries r = random_series(f, idx, rng);
    CHECK(TruncSeries::parse(f, 3, 3, r.to_string()) == r);
  }
}

TEST_CASE("ideal_span examples") {
  const Field q = Field::rationals();
  CHECK(ideal_span(q, 2, {}, 3).dim() == 0);

  const IdealSpan t2 = ideal_span(q, 1, {TruncSeries::parse(q, 1, 4, "t.t")}, 4);
  CHECK(t2.dim() == 3);
  for (const char* w : {"t.t", "t.t.t", "t.t.t.t"}) CHECK(t2.contains(TruncSeries::parse(q, 1, 4, w)));
  CHECK_FALSE(t2.contains(TruncSeries::parse(q, 1, 4, "t")));

  // one commutator in degree 2 and four independent multiples in degree 3
  const IdealSpan c = ideal_span(q, 2, {commutator(q, 3)}, 3);
  CHECK(c.dim() == 1 + 4);
  CHECK(c.span() == ideal_by_enumeration(q, c.index(), {commutator(q, 3)}));
}

TEST_CASE("ideal_span agrees with enumeration and is closed") {
  std::mt19937_64 rng(7);
  const Field k = Field::prime(5);
  const WordIndex idx(2, 4);
  for (int t = 0; t < 8; ++t) {
    std::vector<TruncSeries> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(random_series(k, idx, rng, 2));
    const IdealSpan span = ideal_span(k, 2, gens, 4);
    CHECK(span.span() == ideal_by_enumeration(k, idx, gens));
    for (const auto& row : span.span().basis())
      for (std::uint32_t g = 0; g < 2; ++g) {
        TruncSeries tg(k, 2, 4);
        tg.add_term({g}, k.one());
        const TruncSeries s = TruncSeries::from_vec(k, idx, row);
        CHECK(span.contains(tg * s));
        CHECK(span.contains(s * tg));
      }
    // generators in m^2 leave degrees 0 and 1 alone
    QuotientBasis qb(span);
    CHECK(qb.dims_per_degree()[0] == 1);
    CHECK(qb.dims_per_degree()[1] == 2);
    CHECK(qb.dim() + span.dim() == idx.size());
  }
}

TEST_CASE("quotient arithmetic") {
  const Field q = Field::rationals();
  const QuotientBasis t2(ideal_span(q, 1, {TruncSeries::parse(q, 1, 3, "t.t")}, 3));
  const TruncSeries t = TruncSeries::parse(q, 1, 3, "t");
  const TruncSeries one = TruncSeries::parse(q, 1, 3, "1");
  CHECK(quotient_mul(t2, t, t).is_zero());
  CHECK(quotient_mul(t2, one, t) == t);
  CHECK(t2.dims_per_degree() == std::vector<std::size_t>{1, 1, 0, 0});

  std::mt19937_64 rng(9);
  const Field k = Field::prime(7);
  const QuotientBasis qc(ideal_span(k, 2, {commutator(k, 3)}, 3));
  const WordIndex& idx = qc.index();
  const TruncSeries unit = TruncSeries::parse(k, 2, 3, "1");
  for (int t = 0; t < 20; ++t) {
    const TruncSeries a = qc.reduce(random_series(k, idx, rng)), b = qc.reduce(random_series(k, idx, rng)),
                      c = qc.reduce(random_series(k, idx, rng));
    CHECK(quotient_mul(qc, quotient_mul(qc, a, b), c) == quotient_mul(qc, a, quotient_mul(qc, b, c)));
    CHECK(quotient_mul(qc, unit, a) == a);
    CHECK(quotient_mul(qc, a, unit) == a);
    CHECK(qc.reduce(qc.reduce(a)) == qc.reduce(a));
    // the product does not depend on representatives
    const TruncSeries i1 = TruncSeries::from_vec(k, idx, qc.ideal().span().basis()[rng() % qc.ideal().dim()]);
    const TruncSeries i2 = TruncSeries::from_vec(k, idx, qc.ideal().span().basis()[rng() % qc.ideal().dim()]);
    CHECK(quotient_mul(qc, a + i1, b + i2) == quotient_mul(qc, a, b));
  }
  // t1.t0 and t0.t1 have the same class
  CHECK(qc.reduce(TruncSeries::parse(k, 2, 3, "t1.t0")) == qc.reduce(TruncSeries::parse(k, 2, 3, "t0.t1")));
}

TEST_CASE("abelianization dimensions") {
  const Field q = Field::rationals();
  CHECK(abelianize(IdealSpan(q, 2, 2)).dims_per_degree() == std::vector<std::size_t>{1, 2, 3});
  for (std::size_t r : {1u, 2u, 3u}) {
    const auto dims = abelianize(IdealSpan(q, r, 4)).dims_per_degree();
    for (std::size_t d = 0; d <= 4; ++d) CHECK(dims[d] == binomial(r + d - 1, d));
  }
  const QuotientBasis k = abelianize(ideal_span(q, 1, {TruncSeries::parse(q, 1, 4, "t.t")}, 4));
  CHECK(k.dims_per_degree() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  // r = 1: nothing changes
  CHECK(abelianize(IdealSpan(q, 1, 4)).dim() == 5);
}

TEST_CASE("truncation and preimage of ideals") {
  const Field q = Field::rationals();
  const IdealSpan c = ideal_span(q, 2, {commutator(q, 4)}, 4);
  CHECK(c.truncated(2).dim() == 1);
  CHECK(c.dim_mod_power(3) == 1);
  CHECK(c.dim_mod_power(2) == 0);
  const IdealSpan up = c.truncated(3).preimage(4);
  CHECK(up.dim() == c.truncated(3).dim() + 16);
  CHECK(up.span().contains(c.span()));
}
