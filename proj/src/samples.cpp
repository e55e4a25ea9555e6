#include "nclift/samples.hpp"

namespace nclift::samples {

namespace {

Scalar random_scalar(const Field& k, std::mt19937_64& rng) {
  if (k.is_rational()) return k.from_int(static_cast<long>(rng() % 5) - 2);
  return k.from_int(static_cast<long>(rng() % k.characteristic()));
}

}  // namespace

std::shared_ptr<const ChainComplex> jordan(const Field& k, std::size_t n, std::size_t m) {
  auto alg = std::make_shared<const Algebra>(Algebra::truncated_poly(k, m));
  RMatrix d0(*alg, 1, 0), d1(*alg, 1, 1);
  d1.at(0, 0)[n] = k.one();
  return std::make_shared<const ChainComplex>(alg, 0, std::vector<std::size_t>{1, 1}, std::vector<RMatrix>{d0, d1});
}

std::shared_ptr<const ChainComplex> obstructed(const Field& k) {
  auto alg = std::make_shared<const Algebra>(Algebra::truncated_poly(k, 2));
  RMatrix d0(*alg, 1, 0), d1(*alg, 1, 1), d2(*alg, 1, 1);
  d1.at(0, 0)[1] = k.one();
  d2.at(0, 0)[1] = k.one();
  return std::make_shared<const ChainComplex>(alg, 0, std::vector<std::size_t>{1, 1, 1},
                                              std::vector<RMatrix>{d0, d1, d2});
}

std::shared_ptr<const ChainComplex> direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const Algebra& alg = a.algebra();
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<std::size_t> ranks;
  std::vector<RMatrix> diffs;
  for (int i = lo; i <= hi; ++i) {
    ranks.push_back(a.rank(i) + b.rank(i));
    const std::size_t cols = i == lo ? 0 : a.rank(i - 1) + b.rank(i - 1);
    RMatrix d(alg, a.rank(i) + b.rank(i), cols);
    if (i > lo) {
      for (std::size_t r = 0; r < a.rank(i); ++r)
        for (std::size_t c = 0; c < a.rank(i - 1); ++c) {
          auto src = a.diff(i).at(r, c);
          std::copy(src.begin(), src.end(), d.at(r, c).begin());
        }
      for (std::size_t r = 0; r < b.rank(i); ++r)
        for (std::size_t c = 0; c < b.rank(i - 1); ++c) {
          auto src = b.diff(i).at(r, c);
          std::copy(src.begin(), src.end(), d.at(a.rank(i) + r, a.rank(i - 1) + c).begin());
        }
    }
    diffs.push_back(std::move(d));
  }
  return std::make_shared<const ChainComplex>(a.algebra_ptr(), lo, std::move(ranks), std::move(diffs));
}

std::shared_ptr<const ChainComplex> random_three_term(const Field& k, std::size_t m, std::size_t max_rank,
                                                      std::mt19937_64& rng) {
  auto alg = std::make_shared<const Algebra>(Algebra::truncated_poly(k, m));
  const std::size_t r0 = 1 + rng() % max_rank, r1 = 1 + rng() % max_rank, r2 = 1 + rng() % max_rank;

  // entries in the radical (x): the complex is minimal
  RMatrix d2(*alg, r2, r1);
  for (std::size_t u = 0; u < d2.flat().size(); ++u)
    if (u % m != 0) d2.flat()[u] = random_scalar(k, rng);

  // d1 ranges over {X in (x) : d2 * X = 0}; pick a random element of that kernel.
  std::vector<std::size_t> slots;
  for (std::size_t u = 0; u < r1 * r0 * m; ++u)
    if (u % m != 0) slots.push_back(u);
  const std::size_t rows = r2 * r0 * m;
  KMatrix op(k, rows, slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    RMatrix x(*alg, r1, r0);
    x.flat()[slots[s]] = k.one();
    const RMatrix img = rmat_mul(*alg, d2, x);
    for (std::size_t r = 0; r < rows; ++r) op(r, s) = img.flat()[r];
  }
  RMatrix d1(*alg, r1, r0);
  for (const auto& v : kernel(op)) {
    const Scalar c = random_scalar(k, rng);
    for (std::size_t s = 0; s < slots.size(); ++s) d1.flat()[slots[s]] += c * v[s];
  }

  return std::make_shared<const ChainComplex>(alg, 0, std::vector<std::size_t>{r0, r1, r2},
                                              std::vector<RMatrix>{RMatrix(*alg, r0, 0), d1, d2});
}

}  // namespace nclift::samples
