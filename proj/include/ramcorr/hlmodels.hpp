#pragma once

// The Hardy-Littlewood correlation of von Mangoldt with itself, its truncated
// and ODD-lifted models, the Artifact, the singular series and residual checks.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

/// Lambda_N: g'(d) = -mu(d) log d for d <= N.
TruncatedDivisorSum lambda_truncated(const PrimeTable& primes, std::uint64_t N);
/// Lambda_N^ODD: the same restricted to odd d.
TruncatedDivisorSum lambda_truncated_odd(const PrimeTable& primes, std::uint64_t N);

/// sum_{n <= N} Lambda(n) Lambda(n + a). The sieve must cover N + a.
double hl_correlation(const PrimeTable& primes, std::uint64_t N, std::uint64_t a);

/// sum_{2 < p <= N} log p . Lambda_N^ODD(p + a), any shift. N >= 3.
double artifact(const PrimeTable& primes, std::uint64_t N, const BigNat& a);

/// Adds the exact truncation difference to the Artifact and compares with the
/// closed form using full Lambda: Lambda(p+a) for a even, the 2^j || p+a sum for
/// a odd. The sieve must cover N + a.
bool artifact_identity_check(const PrimeTable& primes, std::uint64_t N, std::uint64_t a,
                             double tol = 1e-9);

struct ResidualDecomposition {
  double tail_divisors = 0.0;     // C(Lambda, Lambda) - C(Lambda, Lambda_N)
  double even_divisors = 0.0;     // C(Lambda, Lambda_N) - C(Lambda, Lambda_N^ODD)
  double powers_of_two = 0.0;     // n = 2^k terms of C(Lambda, Lambda_N^ODD)
  double odd_prime_powers = 0.0;  // odd n = p^k, k >= 2

  double total() const { return tail_divisors + even_divisors + powers_of_two + odd_prime_powers; }
};

struct ModelRow {
  std::uint64_t a = 0;
  double hl = 0.0;        // sum Lambda(n) Lambda(n+a)
  double cut = 0.0;  // sum Lambda(n) Lambda_N(n+a)
  double cut_odd = 0.0;  // sum Lambda(n) Lambda_N^ODD(n+a)
  double odd_n_cut_odd = 0.0;  // sum_{n odd} Lambda(n) Lambda_N^ODD(n+a)
  double odd_n_cut = 0.0;  // sum_{n odd} Lambda(n) Lambda_N(n+a)
  double artifact = 0.0;
  double residual = 0.0;  // hl - artifact
  std::optional<double> normalized;  // even a only

  ResidualDecomposition decomposition() const;
};

struct ModelComparison {
  std::uint64_t N = 0;
  std::vector<ModelRow> rows;
};

/// |residual| / ((sqrt N + a) log N log(N + a)).
double normalized_residual(double residual, std::uint64_t N, std::uint64_t a);

/// Shared tables for every shift up to max_shift at one length N.
class ModelContext {
 public:
  ModelContext(const PrimeTable& primes, std::uint64_t N, std::uint64_t max_shift);

  std::uint64_t length() const { return N_; }
  std::uint64_t max_shift() const { return max_shift_; }

  double hl(std::uint64_t a) const;
  double cut(std::uint64_t a) const;
  double cut_odd(std::uint64_t a) const;
  double odd_n_cut_odd(std::uint64_t a) const;
  double odd_n_cut(std::uint64_t a) const;
  double artifact(std::uint64_t a) const;
  /// All six values; for even a also enforces odd_n_cut_odd == odd_n_cut (throws logic_error).
  ModelRow row(std::uint64_t a) const;

 private:
  void check_shift(std::uint64_t a) const;
  double sum_lambda(const std::vector<double>& g, std::uint64_t a, bool odd_n_only,
                    bool primes_only) const;

  const PrimeTable* primes_;
  std::uint64_t N_;
  std::uint64_t max_shift_;
  std::vector<double> lambda_;      // [0] = Lambda(1), up to N + max_shift
  std::vector<double> lambda_N_;
  std::vector<double> lambda_N_odd_;
  std::vector<std::uint64_t> prime_powers_;  // n <= N with Lambda(n) != 0
};

/// One ModelRow per shift (rows computed in parallel).
ModelComparison model_chain(const PrimeTable& primes, std::uint64_t N,
                            const std::vector<std::uint64_t>& shifts);
ModelRow model_chain(const PrimeTable& primes, std::uint64_t N, std::uint64_t a);

struct SingularSeriesValue {
  std::uint64_t a = 0;
  double truncated_sum = 0.0;
  double euler_product = 0.0;
  std::uint64_t truncation_Q = 0;
};

/// sum_{q <= Q} mu^2(q)/phi^2(q) c_q(a) and prod_{p <= Q} (1 + c_p(a)/(p-1)^2).
SingularSeriesValue singular_series(const PrimeTable& primes, std::uint64_t a,
                                    std::uint64_t Q = 100000);

struct ErrorBoundEntry {
  std::uint64_t N = 0;
  std::uint64_t a = 0;
  double residual = 0.0;
  double normalized = 0.0;
};

struct ErrorBoundTable {
  std::vector<ErrorBoundEntry> entries;
  double max_normalized = 0.0;
};

/// Throws invalid_argument for any odd shift.
ErrorBoundTable error_bound_check(const PrimeTable& primes, const std::vector<std::uint64_t>& Ns,
                                  const std::vector<std::uint64_t>& even_shifts);

/// theta(N) = sum_{p <= N} log p.
double chebyshev_theta(const PrimeTable& primes, std::uint64_t N);
/// Natural log of a positive big integer.
double log_big(const BigNat& x);
/// |log(2 U_N) - theta(N)| <= 1e-6.
bool pnt_sanity(const PrimeTable& primes, std::uint64_t N);

/// Columns N,a,hl,cut,cut_odd,odd_n_cut_odd,odd_n_cut,artifact,residual,normalized.
void write_model_csv(std::ostream& out, const ModelComparison& table, bool header = true);

}  // namespace ramcorr
