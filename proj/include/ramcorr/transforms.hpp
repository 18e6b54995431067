#pragma once

// Dirichlet convolution, the Eratosthenes transform F' = mu * F and its
// inverse, divisor truncation, and the ODD-lift operator.

#include <cstdint>
#include <vector>

#include "ramcorr/arith_core.hpp"

namespace ramcorr {

/// g_N(m) = sum_{d | m, d <= cutoff} g'(d), evaluable at arbitrarily large m.
///
/// The cutoff is a Wintner range for g but need not be the exact one: g'(cutoff)
/// may vanish. Real entries of magnitude <= kZeroThreshold are stored as zero.
class TruncatedDivisorSum {
 public:
  TruncatedDivisorSum() = default;

  static TruncatedDivisorSum exact(std::vector<std::int64_t> et_values);
  static TruncatedDivisorSum real(std::vector<double> et_values);
  static TruncatedDivisorSum zero(std::uint64_t cutoff, Kind kind);

  Kind kind() const { return kind_; }
  std::uint64_t cutoff() const { return cutoff_; }
  bool is_zero() const { return support_.empty(); }

  /// g'(d); zero for d > cutoff.
  Value et(std::uint64_t d) const;
  double et_real(std::uint64_t d) const;
  /// Nonzero positions of g', ascending.
  const std::vector<std::uint64_t>& support() const { return support_; }
  const std::vector<std::int64_t>& exact_et() const { return ints_; }
  const std::vector<double>& real_et() const { return reals_; }

  Value operator()(std::uint64_t m) const;
  Value operator()(const BigNat& m) const;
  /// Same sum, enumerating the divisors of m from a sieve (m <= primes.limit()).
  Value evaluate_via_divisors(const PrimeTable& primes, std::uint64_t m) const;

  TruncatedDivisorSum as_real() const;

 private:
  void rebuild_support();

  Kind kind_ = Kind::ExactInt;
  std::uint64_t cutoff_ = 0;
  std::vector<std::int64_t> ints_;
  std::vector<double> reals_;
  std::vector<std::uint64_t> support_;
};

/// n -> g(n + a) for one fixed shift a. Residues a mod d are reduced once per
/// support element, so huge shifts cost a single big-integer pass.
class ShiftedEvaluator {
 public:
  ShiftedEvaluator(const TruncatedDivisorSum& g, const BigNat& shift);
  Value operator()(std::uint64_t n) const;

 private:
  const TruncatedDivisorSum* g_;
  std::vector<std::uint64_t> residues_;  // shift mod d, parallel to g.support()
};

TabulatedFunction dirichlet_convolve(const TabulatedFunction& F, const TabulatedFunction& G,
                                     std::uint64_t M);

/// F'(d) = sum_{t | d} F(t) mu(d/t) on [1..M], by the divisor-lattice sweep.
TabulatedFunction eratosthenes_transform(const TabulatedFunction& F, std::uint64_t M);

/// (F' * 1)(n) on [1..M]: the inverse of eratosthenes_transform.
TabulatedFunction divisor_sum(const TabulatedFunction& Fprime, std::uint64_t M);

TruncatedDivisorSum truncate(const TabulatedFunction& F, std::uint64_t N);
TruncatedDivisorSum truncate(const TruncatedDivisorSum& g, std::uint64_t N);

Value evaluate_tds(const TruncatedDivisorSum& g, const BigNat& m);

/// F^ODD = (1_ODD . F') * 1, computed from the definition.
TabulatedFunction odd_lift(const TabulatedFunction& F);
/// F^ODD(n) = F(n_ODD), computed directly.
TabulatedFunction odd_lift_direct(const TabulatedFunction& F);
/// Zeroes the even entries of g'; the cutoff is preserved.
TruncatedDivisorSum odd_lift(const TruncatedDivisorSum& g);

/// g_N tabulated on [1..M].
TabulatedFunction tabulate(const TruncatedDivisorSum& g, std::uint64_t M);

}  // namespace ramcorr
