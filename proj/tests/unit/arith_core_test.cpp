#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ramcorr/arith_core.hpp"
#include "support/oracles.hpp"

using namespace ramcorr;

TEST(PrimeTable, RejectsBadLimits) {
  EXPECT_THROW(PrimeTable(0), std::invalid_argument);
  EXPECT_THROW(PrimeTable(1), std::invalid_argument);
  EXPECT_THROW(PrimeTable((std::uint64_t{1} << 32) + 1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeTable(2));
}

TEST(PrimeTable, RejectsZeroAndOutOfRange) {
  const PrimeTable t(100);
  EXPECT_THROW(t.is_prime(0), std::invalid_argument);
  EXPECT_THROW(t.mobius(0), std::invalid_argument);
  EXPECT_THROW(t.is_prime(101), std::invalid_argument);
  EXPECT_NO_THROW(t.is_prime(100));
}

TEST(PrimeTable, PrimesMatchTrialDivision) {
  const PrimeTable t(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) ASSERT_EQ(t.is_prime(n), oracle::is_prime(n)) << n;
}

TEST(PrimeTable, PrimeCountToAMillion) {
  // pi(10^6) = 78498, pi(10^4) = 1229.
  const PrimeTable t(1000000);
  EXPECT_EQ(t.prime_count(1000000), 78498u);
  EXPECT_EQ(t.prime_count(10000), 1229u);
  EXPECT_EQ(t.prime_count(1), 0u);
  EXPECT_EQ(t.prime_count(2), 1u);
}

TEST(PrimeTable, MultiplicativeFunctionsMatchDefinitions) {
  const PrimeTable t(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(t.mobius(n), oracle::mobius(n)) << n;
    ASSERT_DOUBLE_EQ(t.von_mangoldt(n), oracle::von_mangoldt(n)) << n;
    std::uint64_t k = 1;
    for (auto p : oracle::prime_factors(n)) k *= p;
    ASSERT_EQ(t.kappa(n), k) << n;
  }
  for (std::uint64_t n = 1; n <= 600; ++n) ASSERT_EQ(t.euler_phi(n), oracle::phi(n)) << n;
}

TEST(PrimeTable, MobiusExamples) {
  const PrimeTable t(100);
  EXPECT_EQ(t.mobius(1), 1);
  EXPECT_EQ(t.mobius(6), 1);
  EXPECT_EQ(t.mobius(30), -1);
  EXPECT_EQ(t.mobius(12), 0);
  EXPECT_DOUBLE_EQ(t.von_mangoldt(8), std::log(2.0));
  EXPECT_DOUBLE_EQ(t.von_mangoldt(6), 0.0);
  EXPECT_DOUBLE_EQ(t.von_mangoldt(1), 0.0);
}

TEST(PrimeTable, DivisorsAndFactorization) {
  const PrimeTable t(5000);
  for (std::uint64_t n = 1; n <= 5000; n += 7) {
    auto d = t.divisors(n);
    std::sort(d.begin(), d.end());
    ASSERT_EQ(d, oracle::divisors(n)) << n;
    std::uint64_t back = 1;
    for (auto [p, e] : t.factorize(n)) {
      ASSERT_TRUE(oracle::is_prime(p));
      for (int i = 0; i < e; ++i) back *= p;
    }
    ASSERT_EQ(back, n);
  }
  EXPECT_TRUE(t.factorize(1).empty());
}

TEST(PrimeTable, SmoothSiftedSplit) {
  const PrimeTable t(30000);
  EXPECT_EQ(t.smooth_sifted_split(360 * 77, 5), (std::pair<std::uint64_t, std::uint64_t>{360, 77}));
  EXPECT_THROW(t.smooth_sifted_split(100, 4), std::invalid_argument);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = rng() % 10000 + 1;
    const std::uint64_t P = t.primes()[rng() % 25];
    const auto [s, r] = t.smooth_sifted_split(n, P);
    ASSERT_EQ(s * r, n);
    for (auto p : oracle::prime_factors(s)) ASSERT_LE(p, P);
    for (auto p : oracle::prime_factors(r)) ASSERT_GT(p, P);
  }
}

TEST(MobiusTable, AgreesWithSieve) {
  const auto mu = mobius_table(3000);
  ASSERT_EQ(mu.size(), 3001u);
  EXPECT_EQ(mu[0], 0);
  for (std::uint64_t n = 1; n <= 3000; ++n) ASSERT_EQ(mu[n], oracle::mobius(n)) << n;
}

TEST(TwoAdic, ValuationAndOddPart) {
  EXPECT_THROW(v2(std::uint64_t{0}), std::invalid_argument);
  EXPECT_THROW(odd_part(std::uint64_t{0}), std::invalid_argument);
  EXPECT_EQ(v2(std::uint64_t{1}), 0u);
  EXPECT_EQ(v2(std::uint64_t{96}), 5u);
  EXPECT_EQ(odd_part(std::uint64_t{96}), 3u);
  const BigNat big = (BigNat(1) << 100) * 3;
  EXPECT_EQ(v2(big), 100u);
  EXPECT_EQ(odd_part(big), 3);
  EXPECT_THROW(v2(BigNat(0)), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    ASSERT_EQ(odd_part(n), oracle::odd_part(n));
    ASSERT_EQ(odd_part(n) << v2(n), n);
  }
}

TEST(TrialFactorize, BeyondAnySieve) {
  const std::uint64_t n = 1000003ULL * 999983ULL;
  const auto f = trial_factorize(n);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, 999983u);
  EXPECT_EQ(f[1].first, 1000003u);
  EXPECT_THROW(trial_factorize(0), std::invalid_argument);
}

TEST(Values, KindsAndEquality) {
  EXPECT_EQ(parse_kind("ExactInt"), Kind::ExactInt);
  EXPECT_EQ(parse_kind(to_string(Kind::Real)), Kind::Real);
  EXPECT_THROW(parse_kind("Complex"), std::invalid_argument);
  EXPECT_TRUE(values_equal(Value{std::int64_t{3}}, Value{std::int64_t{3}}, 0.0));
  EXPECT_FALSE(values_equal(Value{std::int64_t{3}}, Value{std::int64_t{4}}, 10.0));
  EXPECT_TRUE(values_equal(Value{1.0}, Value{1.0 + 1e-12}, 1e-9));
  EXPECT_FALSE(is_nonzero(Value{1e-13}));
  EXPECT_TRUE(is_nonzero(Value{std::int64_t{-1}}));
  EXPECT_EQ(common_kind(Kind::ExactInt, Kind::Real), Kind::Real);
}

TEST(TabulatedFunction, AccessAndValidation) {
  const auto f = TabulatedFunction::exact({1, -2, 3});
  EXPECT_EQ(f.limit(), 3u);
  EXPECT_EQ(f.exact_at(2), -2);
  EXPECT_THROW(f(0), std::invalid_argument);
  EXPECT_THROW(f(4), std::invalid_argument);
  EXPECT_THROW(TabulatedFunction::real({1.0, NAN}), std::invalid_argument);
  const auto r = f.as_real();
  EXPECT_EQ(r.kind(), Kind::Real);
  EXPECT_THROW(r.exact_at(1), std::logic_error);
  EXPECT_DOUBLE_EQ(r.real_at(3), 3.0);
  EXPECT_EQ(f.restricted(2).limit(), 2u);
  EXPECT_THROW(f.restricted(4), std::invalid_argument);
}

TEST(NamedFunctions, Tables) {
  const PrimeTable t(100);
  const auto lam = fn::von_mangoldt(t, 100);
  EXPECT_EQ(lam.kind(), Kind::Real);
  EXPECT_DOUBLE_EQ(lam.real_at(9), std::log(3.0));
  const auto opl = fn::odd_prime_log(t, 100);
  EXPECT_DOUBLE_EQ(opl.real_at(2), 0.0);
  EXPECT_DOUBLE_EQ(opl.real_at(9), 0.0);
  EXPECT_DOUBLE_EQ(opl.real_at(7), std::log(7.0));
  EXPECT_EQ(fn::delta_one(5).exact_values(), (std::vector<std::int64_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(fn::unit(3).exact_values(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(fn::mobius_squared(t, 12).exact_at(12), 0);
  const auto ind = fn::indicator(10, [](std::uint64_t n) { return n % 3 == 0; });
  EXPECT_EQ(ind.exact_at(9), 1);
  EXPECT_EQ(ind.exact_at(10), 0);
  const auto prod = fn::multiply(fn::identity(6), fn::mobius(t, 6));
  EXPECT_EQ(prod.exact_at(6), 6);
  EXPECT_EQ(prod.exact_at(5), -5);
}
