#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ramcorr/correlations.hpp"
#include "ramcorr/hlmodels.hpp"
#include "ramcorr/ramanujan.hpp"
#include "support/oracles.hpp"

using namespace ramcorr;

namespace {

const PrimeTable& primes() {
  static const PrimeTable t(200000);
  return t;
}

double L(double x) { return std::log(x); }

// sum_{d | m, d <= N, d in the chosen parity class} -mu(d) log d, by enumeration.
double lambda_N_brute(std::uint64_t m, std::uint64_t N, bool odd_d_only, bool even_d_only = false) {
  double s = 0.0;
  for (auto d : oracle::divisors(m)) {
    if (d > N || d == 1) continue;
    if (odd_d_only && d % 2 == 0) continue;
    if (even_d_only && d % 2 == 1) continue;
    s -= oracle::mobius(d) * L(double(d));
  }
  return s;
}

}  // namespace

TEST(HlCorrelation, SmallExampleByEnumeration) {
  // n in {2, 3, 5, 7, 9}: pairs (2,4) (3,5) (5,7) (7,9) (9,11).
  const double want = L(2) * L(2) + L(3) * L(5) + L(5) * L(7) + L(7) * L(3) + L(3) * L(11);
  EXPECT_NEAR(hl_correlation(primes(), 10, 2), want, 1e-12);
  EXPECT_DOUBLE_EQ(hl_correlation(primes(), 1, 5), 0.0);
  EXPECT_THROW(hl_correlation(PrimeTable(20), 19, 2), std::invalid_argument);
  EXPECT_THROW(hl_correlation(primes(), 10, 0), std::invalid_argument);
}

TEST(HlCorrelation, AgreesWithBruteForce) {
  for (std::uint64_t a = 1; a <= 12; ++a) {
    double want = 0.0;
    for (std::uint64_t n = 1; n <= 3000; ++n) want += oracle::von_mangoldt(n) * oracle::von_mangoldt(n + a);
    ASSERT_NEAR(hl_correlation(primes(), 3000, a), want, 1e-9);
  }
}

TEST(Artifact, SmallExample) {
  // Below the cutoff Lambda_9 is Lambda itself.
  const double want = L(3) * L(5) + L(5) * L(7) + L(7) * L(3);
  EXPECT_NEAR(artifact(primes(), 9, BigNat(2)), want, 1e-12);
  EXPECT_THROW(artifact(primes(), 2, BigNat(2)), std::invalid_argument);
}

TEST(Artifact, EvenShiftsIgnoreTheOddLift) {
  for (std::uint64_t N : {9, 50, 200}) {
    const auto f = fn::odd_prime_log(primes(), N);
    const auto plain = lambda_truncated(primes(), N);
    for (std::uint64_t a = 2; a <= 40; a += 2) {
      ASSERT_NEAR(artifact(primes(), N, BigNat(a)), to_double(correlate_direct(f, plain, N, BigNat(a))),
                  1e-9);
    }
  }
}

TEST(Artifact, HugeShiftsRepeatWithTheUniversalPeriod) {
  for (std::uint64_t N : {9, 10, 15, 16, 21, 22}) {
    const BigNat U = universal_period(N).value;
    for (std::uint64_t k = 1; k <= 4; ++k) {
      ASSERT_NEAR(artifact(primes(), N, BigNat(k)), artifact(primes(), N, BigNat(U + k)), 1e-9);
    }
  }
}

TEST(Artifact, IdentityWithFullVonMangoldt) {
  for (std::uint64_t N : {9, 100, 101, 500}) {
    for (std::uint64_t a = 1; a <= 30; ++a) ASSERT_TRUE(artifact_identity_check(primes(), N, a)) << N << ' ' << a;
  }
}

TEST(ModelChain, HandScaleRow) {
  const std::uint64_t N = 9;
  for (std::uint64_t a = 1; a <= 8; ++a) {
    double hl = 0, cut = 0, cut_odd = 0, odd_n_cut_odd = 0, odd_n_cut = 0, art = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
      const double ln = oracle::von_mangoldt(n);
      if (ln == 0.0) continue;
      hl += ln * oracle::von_mangoldt(n + a);
      cut += ln * lambda_N_brute(n + a, N, false);
      cut_odd += ln * lambda_N_brute(n + a, N, true);
      if (n % 2 == 1) {
        odd_n_cut_odd += ln * lambda_N_brute(n + a, N, true);
        odd_n_cut += ln * lambda_N_brute(n + a, N, false);
        if (oracle::is_prime(n)) art += ln * lambda_N_brute(n + a, N, true);
      }
    }
    const ModelRow r = model_chain(primes(), N, a);
    ASSERT_NEAR(r.hl, hl, 1e-12);
    ASSERT_NEAR(r.cut, cut, 1e-12);
    ASSERT_NEAR(r.cut_odd, cut_odd, 1e-12);
    ASSERT_NEAR(r.odd_n_cut_odd, odd_n_cut_odd, 1e-12);
    ASSERT_NEAR(r.odd_n_cut, odd_n_cut, 1e-12);
    ASSERT_NEAR(r.artifact, art, 1e-12);
    ASSERT_DOUBLE_EQ(r.residual, r.hl - r.artifact);
    ASSERT_EQ(r.normalized.has_value(), a % 2 == 0);
  }
}

TEST(ModelChain, ResidualDecomposesIntoCorrectionSums) {
  const std::uint64_t N = 1000;
  const ModelContext ctx(primes(), N, 30);
  const auto lambda = fn::von_mangoldt(primes(), N + 30);
  for (std::uint64_t a = 1; a <= 30; ++a) {
    const ModelRow r = ctx.row(a);
    const auto parts = r.decomposition();
    double even_div = 0, two_powers = 0, odd_pp = 0;
    for (std::uint64_t n = 2; n <= N; ++n) {
      const double ln = oracle::von_mangoldt(n);
      if (ln == 0.0) continue;
      even_div += ln * lambda_N_brute(n + a, N, false, true);
      const double odd_lifted = lambda_N_brute(n + a, N, true);
      if (n % 2 == 0) {
        two_powers += ln * odd_lifted;
      } else if (!oracle::is_prime(n)) {
        odd_pp += ln * odd_lifted;
      }
    }
    ASSERT_NEAR(parts.tail_divisors, to_double(truncation_difference(lambda, lambda, N, a)), 1e-8);
    ASSERT_NEAR(parts.even_divisors, even_div, 1e-8);
    ASSERT_NEAR(parts.powers_of_two, two_powers, 1e-8);
    ASSERT_NEAR(parts.odd_prime_powers, odd_pp, 1e-8);
    ASSERT_NEAR(parts.total(), r.residual, 1e-8);
    if (a % 2 == 0) ASSERT_EQ(r.odd_n_cut_odd, r.odd_n_cut);
  }
  EXPECT_THROW(ctx.hl(31), std::invalid_argument);
}

TEST(ModelChain, BatchMatchesSingleRows) {
  const std::vector<std::uint64_t> shifts = {6, 1, 2, 9};
  const ModelComparison table = model_chain(primes(), 2000, shifts);
  ASSERT_EQ(table.rows.size(), 4u);
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    EXPECT_EQ(table.rows[i].a, shifts[i]);
    EXPECT_DOUBLE_EQ(table.rows[i].artifact, model_chain(primes(), 2000, shifts[i]).artifact);
  }
}

TEST(SingularSeries, TwinPrimeConstantAndOddShifts) {
  const auto s2 = singular_series(primes(), 2, 100000);
  EXPECT_NEAR(s2.euler_product, 1.3203236, 1e-5);
  EXPECT_NEAR(s2.truncated_sum, s2.euler_product, 0.01);
  EXPECT_EQ(s2.truncation_Q, 100000u);
  for (std::uint64_t a : {1, 3, 15, 99}) {
    const auto s = singular_series(primes(), a, 10000);
    EXPECT_DOUBLE_EQ(s.euler_product, 0.0);
    EXPECT_NEAR(s.truncated_sum, 0.0, 0.01);
  }
  EXPECT_THROW(singular_series(primes(), 0, 100), std::invalid_argument);
  EXPECT_THROW(singular_series(primes(), 2, 1), std::invalid_argument);
}

TEST(SingularSeries, IgnoresPrimePowers) {
  for (std::uint64_t a = 1; a <= 100; ++a) {
    const auto s = singular_series(primes(), a, 3000);
    const auto k = singular_series(primes(), primes().kappa(a), 3000);
    ASSERT_DOUBLE_EQ(s.euler_product, k.euler_product) << a;
    ASSERT_NEAR(s.truncated_sum, k.truncated_sum, 1e-12) << a;
  }
}

TEST(ErrorBound, EvenShiftsOnly) {
  EXPECT_THROW(error_bound_check(primes(), {1000}, {2, 3}), std::invalid_argument);
  const ErrorBoundTable t = error_bound_check(primes(), {1000, 10000}, {2, 4, 10, 30});
  ASSERT_EQ(t.entries.size(), 8u);
  for (const auto& e : t.entries) {
    ASSERT_TRUE(std::isfinite(e.normalized));
    ASSERT_LE(e.normalized, t.max_normalized);
  }
  EXPECT_LE(t.max_normalized, 3.0);
}

TEST(Chebyshev, ThetaAndUniversalPeriod) {
  EXPECT_NEAR(chebyshev_theta(primes(), 9), L(210), 1e-12);
  EXPECT_NEAR(chebyshev_theta(primes(), 2), L(2), 1e-15);
  for (std::uint64_t N = 2; N <= 100; ++N) ASSERT_TRUE(pnt_sanity(primes(), N)) << N;
  const double ratio = chebyshev_theta(primes(), 100000) / 100000.0;
  EXPECT_GE(ratio, 0.95);
  EXPECT_LE(ratio, 1.05);
  EXPECT_NEAR(log_big(BigNat(1) << 200), 200 * L(2), 1e-9);
  EXPECT_THROW(log_big(BigNat(0)), std::invalid_argument);
}

TEST(ModelCsv, LayoutAndDeterminism) {
  const ModelComparison t = model_chain(primes(), 100, std::vector<std::uint64_t>{1, 2});
  std::ostringstream a;
  std::ostringstream b;
  write_model_csv(a, t);
  write_model_csv(b, model_chain(primes(), 100, std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  EXPECT_EQ(header, "N,a,hl,cut,cut_odd,odd_n_cut_odd,odd_n_cut,artifact,residual,normalized");
  EXPECT_EQ(row1.back(), ',');  // odd shift: no normalized value
  EXPECT_NE(row2.back(), ',');
  EXPECT_EQ(row1.rfind("100,1,", 0), 0u);
}
