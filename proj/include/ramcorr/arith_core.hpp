#pragma once

// Sieved elementary arithmetic functions, the 2-adic / smooth-sifted
// splittings, and tabulated arithmetic functions on [1..M].

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramcorr {

using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Value domain of an arithmetic function: exact integers or doubles.
enum class Kind { ExactInt, Real };

std::string to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// A single function value. ExactInt results are carried as int64, Real as double.
using Value = std::variant<std::int64_t, double>;

inline double to_double(const Value& v) {
  return std::visit([](auto x) { return static_cast<double>(x); }, v);
}
inline Kind kind_of(const Value& v) {
  return std::holds_alternative<std::int64_t>(v) ? Kind::ExactInt : Kind::Real;
}
inline Kind common_kind(Kind a, Kind b) {
  return (a == Kind::Real || b == Kind::Real) ? Kind::Real : Kind::ExactInt;
}

// Entries of Real tables with magnitude at or below this are treated as zero
// when supports, periods and axiom checks are built.
inline constexpr double kZeroThreshold = 1e-12;

bool is_nonzero(const Value& v);

/// Exact comparison when both sides are ExactInt, absolute tolerance otherwise.
bool values_equal(const Value& lhs, const Value& rhs, double tol);

/// Sieve of smallest prime factors on [1..limit].
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  std::uint64_t smallest_prime_factor(std::uint64_t n) const;
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  std::size_t prime_count(std::uint64_t n) const;

  int mobius(std::uint64_t n) const;
  std::uint64_t euler_phi(std::uint64_t n) const;
  double von_mangoldt(std::uint64_t n) const;
  std::uint64_t kappa(std::uint64_t n) const;

  /// (prime, exponent) pairs in increasing prime order; empty for n = 1.
  std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) const;
  /// All divisors of n, unsorted.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

  /// n = smooth * sifted with smooth in (P) and sifted in )P(.
  std::pair<std::uint64_t, std::uint64_t> smooth_sifted_split(std::uint64_t n,
                                                              std::uint64_t P) const;

 private:
  void check_range(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable sieve_primes(std::uint64_t M);

/// Mobius values mu(1..M) by a local linear sieve; index 0 unused.
std::vector<int> mobius_table(std::uint64_t M);

// 2-adic valuation and odd part. Zero is rejected.
unsigned v2(std::uint64_t n);
std::uint64_t odd_part(std::uint64_t n);
unsigned v2(const BigNat& n);
BigNat odd_part(const BigNat& n);

/// Trial-division factorization, for arguments outside any sieve.
std::vector<std::pair<std::uint64_t, int>> trial_factorize(std::uint64_t n);

/// An arithmetic function materialized on [1..M].
class TabulatedFunction {
 public:
  TabulatedFunction() = default;

  static TabulatedFunction exact(std::vector<std::int64_t> values);
  static TabulatedFunction real(std::vector<double> values);
  static TabulatedFunction exact_from(std::uint64_t M,
                                      const std::function<std::int64_t(std::uint64_t)>& fn);
  static TabulatedFunction real_from(std::uint64_t M,
                                     const std::function<double(std::uint64_t)>& fn);

  Kind kind() const { return kind_; }
  std::uint64_t limit() const;

  Value operator()(std::uint64_t n) const;
  double real_at(std::uint64_t n) const;
  std::int64_t exact_at(std::uint64_t n) const;
  bool nonzero_at(std::uint64_t n) const;

  // values()[0] is F(1).
  const std::vector<std::int64_t>& exact_values() const { return ints_; }
  const std::vector<double>& real_values() const { return reals_; }

  TabulatedFunction as_real() const;
  /// Restriction to [1..M], M <= limit().
  TabulatedFunction restricted(std::uint64_t M) const;

 private:
  void check_index(std::uint64_t n) const;

  Kind kind_ = Kind::ExactInt;
  std::vector<std::int64_t> ints_;
  std::vector<double> reals_;
};

// Named arithmetic functions tabulated on [1..M].
namespace fn {
TabulatedFunction unit(std::uint64_t M);
TabulatedFunction delta_one(std::uint64_t M);
TabulatedFunction identity(std::uint64_t M);
TabulatedFunction mobius(const PrimeTable& primes, std::uint64_t M);
TabulatedFunction mobius_squared(const PrimeTable& primes, std::uint64_t M);
TabulatedFunction euler_phi(const PrimeTable& primes, std::uint64_t M);
TabulatedFunction von_mangoldt(const PrimeTable& primes, std::uint64_t M);
TabulatedFunction indicator(std::uint64_t M, const std::function<bool(std::uint64_t)>& member);
/// mu^2 * 1_ODD * Lambda: log p on odd primes, zero elsewhere.
TabulatedFunction odd_prime_log(const PrimeTable& primes, std::uint64_t M);
/// Pointwise product.
TabulatedFunction multiply(const TabulatedFunction& lhs, const TabulatedFunction& rhs);
}  // namespace fn

}  // namespace ramcorr
