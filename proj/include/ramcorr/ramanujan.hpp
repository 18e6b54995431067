#pragma once

// Ramanujan sums, Wintner coefficients of truncated divisor sums, the
// fixed-length Ramanujan expansion and its Lucht inversion, support closure,
// and the Wintner / universal periods.

#include <cstdint>
#include <functional>
#include <vector>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

/// c_q(a) = sum_{d | q, d | a} d mu(q/d). Any integer a; q >= 1.
std::int64_t ramanujan_sum(std::uint64_t q, const BigNat& a);
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t a);
/// Sieve-backed variant for batch use (q <= primes.limit()).
std::int64_t ramanujan_sum(const PrimeTable& primes, std::uint64_t q, std::uint64_t a);

/// sum_{q | d} c_q(a); equals d when d | a and 0 otherwise.
std::int64_t ramanujan_orthogonality(std::uint64_t d, std::uint64_t a);

/// Precomputed divisor form of c_q for one modulus.
class RamanujanKernel {
 public:
  RamanujanKernel() = default;
  explicit RamanujanKernel(std::uint64_t q);
  RamanujanKernel(std::uint64_t q, std::vector<std::pair<std::uint64_t, std::int64_t>> terms);

  std::uint64_t modulus() const { return q_; }
  /// c_q(r) for a residue 0 <= r < q.
  std::int64_t at_residue(std::uint64_t r) const;
  std::int64_t operator()(std::uint64_t a) const { return at_residue(a % q_); }
  std::int64_t operator()(const BigNat& a) const;

 private:
  std::uint64_t q_ = 1;
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms_;  // (d, d * mu(q/d)), mu != 0
};

/// Wintner (= Carmichael) coefficients q -> g^(q) of a truncated divisor sum.
///
/// ExactInt sources give exact rationals; Real sources give doubles.
class RamanujanCoefficients {
 public:
  RamanujanCoefficients() = default;
  static RamanujanCoefficients from_exact(std::vector<Rational> coeffs);
  static RamanujanCoefficients from_real(std::vector<double> coeffs);

  Kind kind() const { return kind_; }
  std::uint64_t cutoff() const { return cutoff_; }
  /// Nonzero positions, ascending (Real entries above kZeroThreshold).
  const std::vector<std::uint64_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  Rational exact_at(std::uint64_t q) const;
  double real_at(std::uint64_t q) const;
  bool nonzero_at(std::uint64_t q) const;
  const std::vector<Rational>& exact_values() const { return exact_; }
  const std::vector<double>& real_values() const { return real_; }

  /// Kernel of c_q for each support element, parallel to support().
  const std::vector<RamanujanKernel>& kernels() const { return kernels_; }

  /// For ExactInt: L and L * g^(q) (integers), L the lcm of denominators.
  const BigNat& common_denominator() const { return denominator_; }
  const std::vector<BigNat>& scaled_numerators() const { return scaled_; }

 private:
  void finish();

  Kind kind_ = Kind::ExactInt;
  std::uint64_t cutoff_ = 0;
  std::vector<Rational> exact_;
  std::vector<double> real_;
  std::vector<std::uint64_t> support_;
  std::vector<RamanujanKernel> kernels_;
  BigNat denominator_ = 1;
  std::vector<BigNat> scaled_;  // parallel to support_
};

/// g^(q) = sum_{d <= D, q | d} g'(d) / d.
RamanujanCoefficients wintner_coefficients(const TruncatedDivisorSum& g);

/// sum_{q <= D} g^(q) c_q(a); equals g(a) for the source TDS.
Value ramanujan_expand(const RamanujanCoefficients& coeffs, const BigNat& a);

/// g'(d) = d sum_{K <= D/d} mu(K) g^(dK).
TruncatedDivisorSum lucht_invert(const RamanujanCoefficients& coeffs);

struct SupportInclusion {
  bool et_in_set = false;      // supp(g') within S
  bool coeffs_in_set = false;  // supp(g^) within S
};

/// Both inclusions for a divisor-closed S; S is checked for closure on [1..D].
SupportInclusion support_closure_check(const TruncatedDivisorSum& g,
                                       const std::function<bool(std::uint64_t)>& member);

enum class PeriodKind { WintnerPeriod, UniversalPeriod };

struct Period {
  BigNat value;
  PeriodKind kind;
};

/// lcm{q <= Q : g^(q) != 0}. Throws UndefinedPeriodError for the zero TDS.
Period wintner_period(const TruncatedDivisorSum& g, std::uint64_t Q);
Period wintner_period(const RamanujanCoefficients& coeffs, std::uint64_t Q);

/// Product of the odd primes <= N (1 for N = 2).
Period universal_period(std::uint64_t N);

/// g^_N(q) == g'(q)/q for every q in (N/2, N].
bool half_range_identity_check(const TabulatedFunction& g_source, std::uint64_t N);

}  // namespace ramcorr
