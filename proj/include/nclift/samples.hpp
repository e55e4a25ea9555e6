#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>

#include "nclift/complexes.hpp"

namespace nclift::samples {

/// 0 -> R --x^n--> R -> 0 over R = k[x]/(x^m), degrees 1, 0.
std::shared_ptr<const ChainComplex> jordan(const Field& k, std::size_t n, std::size_t m);

/// 0 -> R --x--> R --x--> R -> 0 over R = k[x]/(x^2), degrees 2, 1, 0.
std::shared_ptr<const ChainComplex> obstructed(const Field& k);

/// Degree-wise direct sum of two complexes over the same algebra and degree range.
std::shared_ptr<const ChainComplex> direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Complex over k[x]/(x^m) with three nonzero degrees 2, 1, 0, ranks in
/// [1, max_rank], differentials drawn at random from the radical (x) subject
/// to d^2 = 0.
std::shared_ptr<const ChainComplex> random_three_term(const Field& k, std::size_t m, std::size_t max_rank,
                                                      std::mt19937_64& rng);

}  // namespace nclift::samples
