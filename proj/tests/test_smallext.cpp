#include <doctest.h>

#include <random>

#include "nclift/errors.hpp"
#include "nclift/lifting.hpp"
#include "nclift/samples.hpp"
#include "nclift/smallext.hpp"

using namespace nclift;

namespace {

// dim J/(mJ + Jm) computed literally inside T_{guard}: J is the full preimage
// and mJ + Jm is generated as a two-sided ideal from all products t_i·j, j·t_i.
std::size_t literal_dim(const QuotientBasis& a, std::size_t guard) {
  const IdealSpan j = a.ideal().preimage(guard);
  const WordIndex& idx = j.index();
  const Field& k = a.field();
  std::vector<Vec> products;
  for (const auto& row : j.span().basis())
    for (std::uint32_t g = 0; g < idx.generators(); ++g) {
      TruncSeries t(k, idx.generators(), idx.order());
      t.add_term({g}, k.one());
      const TruncSeries s = TruncSeries::from_vec(k, idx, row);
      products.push_back((t * s).to_vec(idx));
      products.push_back((s * t).to_vec(idx));
    }
  return j.dim() - IdealSpan::generated_by(k, idx, products).dim();
}

}  // namespace

TEST_CASE("small_ext_space examples") {
  const Field q = Field::rationals();
  // T/m^2, r = 2
  CHECK(small_ext_space(QuotientBasis(IdealSpan(q, 2, 1))).dim() == 4);
  CHECK(small_ext_space(QuotientBasis(power_of_maximal(q, 2, 2, 2))).dim() == 4);
  // A = k
  for (std::size_t r : {1u, 2u, 3u}) CHECK(small_ext_space(QuotientBasis(power_of_maximal(q, r, 1, 1))).dim() == r);
  // k[t]/(t^2)
  const QuotientBasis kt2(ideal_span(q, 1, {TruncSeries::parse(q, 1, 3, "t.t")}, 3));
  CHECK(small_ext_space(kt2).dim() == 1);
  CHECK(small_ext_space(kt2).direction_series()[0].to_string() == "t.t");

  CHECK_THROWS_AS(small_ext_space(kt2, 4), InputError);
  try {
    small_ext_space(kt2, 3);
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::GuardTooSmall);
  }
  CHECK(small_ext_space(kt2, 7).dim() == 1);
}

TEST_CASE("small_ext_space agrees with the literal computation in T_{N+2}") {
  std::mt19937_64 rng(12);
  const Field k = Field::prime(5);
  for (int t = 0; t < 10; ++t) {
    const std::size_t r = 1 + rng() % 2, n = 2 + rng() % 2;
    const WordIndex idx(r, n);
    std::vector<TruncSeries> gens;
    for (int g = 0; g < 2; ++g) {
      Vec v = zero_vec(k, idx.size());
      for (std::size_t i = idx.offset(2); i < idx.size(); ++i)
        if (rng() % 3 == 0) v[i] = k.from_int(static_cast<long>(rng() % 5));
      gens.push_back(TruncSeries::from_vec(k, idx, v));
    }
    const QuotientBasis a(ideal_span(k, r, gens, n));
    const SmallExtSpace sp = small_ext_space(a);
    CHECK(sp.dim() == literal_dim(a, n + 2));
    CHECK(sp.dim() == literal_dim(a, n + 3));
    // every direction functional kills mJ + Jm
    for (const auto& row : sp.m_space().basis()) CHECK(is_zero(sp.coords(row)));
  }
}

TEST_CASE("alpha over T/m^2 is the Yoneda square") {
  const Field k = Field::prime(7);
  std::mt19937_64 rng(3);
  for (auto c : {samples::obstructed(k), samples::direct_sum(*samples::obstructed(k), *samples::obstructed(k)),
                 samples::jordan(k, 2, 4)}) {
    const LiftState s = first_order_lift(c);
    const SmallExtSpace sp = small_ext_space(s.quotient());
    const std::size_t r = s.parameters();
    REQUIRE(sp.dim() == r * r);
    for (int t = 0; t < 5; ++t) {
      Vec f;
      for (std::size_t i = 0; i < sp.dim(); ++i) f.push_back(k.from_int(static_cast<long>(rng() % 7)));
      // direction pivots are the words t_i t_j in order
      Vec expected = zero_vec(k, s.ext2.dim());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          const std::size_t pos = i * r + j;
          CHECK(sp.direction_pivots()[pos] == sp.ambient().index({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}));
          axpy(expected, f[pos], yoneda(s.ext1, unit_vec(k, r, i), s.ext1, unit_vec(k, r, j), s.ext2));
        }
      CHECK(alpha(s, sp, f) == expected);
    }
    // image = Ext^1 squared
    const KMatrix am = alpha_matrix(s, sp);
    Subspace image(k, s.ext2.dim());
    for (std::size_t j = 0; j < am.cols(); ++j) image.insert(am.col(j));
    CHECK(image == ext1_squared(s.ext1, s.ext2));
  }
}

TEST_CASE("alpha is linear and vanishes on the trivial extension") {
  std::mt19937_64 rng(19);
  const Field k = Field::prime(5);
  const LiftState s = universal_lift(samples::direct_sum(*samples::obstructed(k), *samples::obstructed(k)), 2);
  const SmallExtSpace sp = small_ext_space(s.quotient());
  CHECK(alpha(s, sp, zero_vec(k, sp.dim())) == zero_vec(k, s.ext2.dim()));
  auto rnd = [&] {
    Vec v;
    for (std::size_t i = 0; i < sp.dim(); ++i) v.push_back(k.from_int(static_cast<long>(rng() % 5)));
    return v;
  };
  for (int t = 0; t < 5; ++t) {
    const Vec u = rnd(), v = rnd();
    const Scalar a = k.from_int(static_cast<long>(rng() % 5)), b = k.from_int(static_cast<long>(rng() % 5));
    Vec w = u;
    scale(w, a);
    axpy(w, b, v);
    Vec expected = alpha(s, sp, u);
    scale(expected, a);
    axpy(expected, b, alpha(s, sp, v));
    CHECK(alpha(s, sp, w) == expected);
  }
}

TEST_CASE("alpha of the universal lift") {
  const Field q = Field::rationals();
  const LiftState s = universal_lift(samples::obstructed(q), 4);
  // every truncation: alpha equals the next-order obstruction matrix and is
  // injective away from the artifact directions
  for (std::size_t n = 1; n <= 3; ++n) {
    const LiftState t = truncate_state(s, n);
    const SmallExtSpace sp = small_ext_space(t.quotient());
    const KMatrix am = alpha_matrix(t, sp);
    CHECK(am == s.log[n - 1].obstruction);
    const auto na = sp.non_artifact_functionals();
    CHECK(rank_on(am, na) == na.size());
    CHECK(na.size() == t.relations.size());
  }
  // the unique relation direction t.t maps to the nonzero class
  const SmallExtSpace sp = small_ext_space(s.quotient());
  REQUIRE(sp.dim() == 1);
  CHECK(sp.direction_series()[0].to_string() == "t.t");
  CHECK(alpha(s, sp, Vec{q.one()}) == Vec{-q.one()});

  // Ext^2 = 0: zero matrix
  const LiftState j = universal_lift(samples::jordan(q, 2, 4), 3);
  const SmallExtSpace spj = small_ext_space(j.quotient());
  CHECK(alpha_matrix(j, spj).rows() == 0);
  CHECK(spj.non_artifact_functionals().empty());
}

TEST_CASE("square isomorphism report") {
  const Field q = Field::rationals();
  auto j = square_iso_report(universal_lift(samples::jordan(q, 2, 4), 3));
  CHECK(j.ext1_squared_dim == 0);
  CHECK(j.relations_mod_cube == 0);
  auto kk = square_iso_report(universal_lift(samples::obstructed(q), 3));
  CHECK(kk.ext1_squared_dim == 1);
  CHECK(kk.relations_mod_cube == 1);
  auto two = square_iso_report(universal_lift(samples::direct_sum(*samples::obstructed(q), *samples::obstructed(q)), 3));
  CHECK(two.ok());
  CHECK(two.ext1_squared_dim == 4);
  CHECK_THROWS_AS(square_iso_report(universal_lift(samples::obstructed(q), 2)), InputError);
}

TEST_CASE("small extension dimensions stabilise") {
  const Field q = Field::rationals();
  const LiftState s = universal_lift(samples::obstructed(q), 5);
  std::vector<std::size_t> dims;
  for (std::size_t n = 2; n <= 5; ++n) dims.push_back(small_ext_space(truncate_state(s, n).quotient()).dim());
  for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] >= dims[i - 1]);
  CHECK(dims.back() == dims[dims.size() - 2]);
}
