#include "ramcorr/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace ramcorr::gen {

namespace {

bool allowed(const std::vector<int>& mu, std::uint64_t d, const TdsShape& shape) {
  if (shape.odd_only && d % 2 == 0) return false;
  if (shape.squarefree_only && mu[d] == 0) return false;
  return true;
}

}  // namespace

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

TruncatedDivisorSum exact_tds(Rng& rng, std::uint64_t D, const TdsShape& shape) {
  if (D == 0) throw std::invalid_argument("cutoff must be >= 1");
  const std::vector<int> mu = mobius_table(D);
  std::bernoulli_distribution keep(shape.density);
  std::uniform_int_distribution<std::int64_t> value(shape.lo, shape.hi);
  std::vector<std::int64_t> et(D, 0);
  bool any = false;
  for (std::uint64_t d = 1; d <= D; ++d) {
    if (!allowed(mu, d, shape) || !keep(rng)) continue;
    et[d - 1] = value(rng);
    any = any || et[d - 1] != 0;
  }
  if (!any) et[0] = 1;  // d = 1 fits every shape
  return TruncatedDivisorSum::exact(std::move(et));
}

TruncatedDivisorSum real_tds(Rng& rng, std::uint64_t D, const TdsShape& shape) {
  if (D == 0) throw std::invalid_argument("cutoff must be >= 1");
  const std::vector<int> mu = mobius_table(D);
  std::bernoulli_distribution keep(shape.density);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> et(D, 0.0);
  bool any = false;
  for (std::uint64_t d = 1; d <= D; ++d) {
    if (!allowed(mu, d, shape) || !keep(rng)) continue;
    et[d - 1] = value(rng);
    any = any || std::abs(et[d - 1]) > kZeroThreshold;
  }
  if (!any) et[0] = 0.5;
  return TruncatedDivisorSum::real(std::move(et));
}

TabulatedFunction exact_function(Rng& rng, std::uint64_t M, std::int64_t lo, std::int64_t hi,
                                 double density) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  std::vector<std::int64_t> v(M, 0);
  for (auto& x : v) {
    if (keep(rng)) x = value(rng);
  }
  return TabulatedFunction::exact(std::move(v));
}

TabulatedFunction prime_supported(Rng& rng, const PrimeTable& primes, std::uint64_t M,
                                  bool odd_only) {
  std::uniform_int_distribution<std::int64_t> value(1, 9);
  std::bernoulli_distribution sign(0.5);
  std::vector<std::int64_t> v(M, 0);
  for (std::uint32_t p : primes.primes()) {
    if (p > M) break;
    if (odd_only && p == 2) continue;
    v[p - 1] = sign(rng) ? value(rng) : -value(rng);
  }
  return TabulatedFunction::exact(std::move(v));
}

MembershipSet random_set(Rng& rng, std::uint64_t limit, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<bool> bits(limit);
  for (std::uint64_t i = 0; i < limit; ++i) bits[i] = keep(rng);
  return MembershipSet(std::move(bits));
}

BigNat bignat(Rng& rng, const BigNat& max) {
  if (max < 1) throw std::invalid_argument("upper bound must be >= 1");
  const unsigned bits = boost::multiprecision::msb(max) + 1;
  // Rejection sampling on the bit length of max.
  for (;;) {
    BigNat x = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) x = (x << 64) | BigNat(rng());
    x >>= ((bits + 63) / 64) * 64 - bits;
    if (x >= 1 && x <= max) return x;
  }
}

TwoSeasonsInstance two_seasons(Rng& rng, const PrimeTable& primes, std::uint64_t N) {
  TdsShape shape;
  shape.odd_only = true;
  shape.squarefree_only = true;
  shape.density = 0.6;
  return {N, prime_supported(rng, primes, N, true), exact_tds(rng, N, shape)};
}

}  // namespace ramcorr::gen
