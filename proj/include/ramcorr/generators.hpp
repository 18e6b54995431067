#pragma once

// Seeded random instances for property checks.

#include <cstdint>
#include <random>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/transforms.hpp"
#include "ramcorr/twoseasons.hpp"

namespace ramcorr::gen {

using Rng = std::mt19937_64;

struct TdsShape {
  bool odd_only = false;
  bool squarefree_only = false;
  double density = 0.5;
  std::int64_t lo = -5;
  std::int64_t hi = 5;
};

/// Nonzero ExactInt TDS with cutoff D whose g' respects the shape.
TruncatedDivisorSum exact_tds(Rng& rng, std::uint64_t D, const TdsShape& shape = {});
/// Nonzero Real TDS with entries in [-1, 1].
TruncatedDivisorSum real_tds(Rng& rng, std::uint64_t D, const TdsShape& shape = {});

/// Integers in [lo, hi] on [1..M], each nonzero with probability density.
TabulatedFunction exact_function(Rng& rng, std::uint64_t M, std::int64_t lo, std::int64_t hi,
                                 double density = 1.0);
/// Nonzero ExactInt values on the (odd) primes <= M, zero elsewhere.
TabulatedFunction prime_supported(Rng& rng, const PrimeTable& primes, std::uint64_t M,
                                  bool odd_only);

MembershipSet random_set(Rng& rng, std::uint64_t limit, double density);

/// Uniform in [1, max].
BigNat bignat(Rng& rng, const BigNat& max);
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

struct TwoSeasonsInstance {
  std::uint64_t N = 0;
  TabulatedFunction f;     // on [1..N]
  TruncatedDivisorSum g;   // cutoff N, odd square-free support
};

/// Random ExactInt instance passing check_axioms at Q = N (N must satisfy axiom 4).
TwoSeasonsInstance two_seasons(Rng& rng, const PrimeTable& primes, std::uint64_t N);

}  // namespace ramcorr::gen
