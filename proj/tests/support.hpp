#pragma once

// Generators shared by the unit tests and the acceptance binary.

#include <numeric>
#include <random>
#include <vector>

#include "twistgrp/heisenberg.hpp"
#include "twistgrp/reps.hpp"

namespace twistgrp::testing {

inline RationalPhase random_phase(std::mt19937_64& rng, std::int64_t max_den) {
  const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den));
  return {static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d)), d};
}

/// Valid parameters: p in [1, max_p], η = a/p with gcd(a, p) = 1, ξ and α
/// with denominators up to 12. Every p in range occurs when count ≥ max_p.
inline std::vector<RepParams> sample_rep_params(std::mt19937_64& rng, std::size_t count, std::int64_t max_p = 6) {
  std::vector<RepParams> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t p = i < static_cast<std::size_t>(max_p) ? static_cast<std::int64_t>(i) + 1
                                                               : 1 + static_cast<std::int64_t>(rng() % max_p);
    std::vector<std::int64_t> units;
    for (std::int64_t a = 0; a < p; ++a)
      if (std::gcd(a, p) == 1) units.push_back(a);
    const std::int64_t a = units[rng() % units.size()];
    out.emplace_back(random_phase(rng, 12), RationalPhase(a, p), random_phase(rng, 12), p);
  }
  return out;
}

inline HeisenbergElement random_heis(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace twistgrp::testing
