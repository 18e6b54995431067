#pragma once

// Shifted convolution sums C_{f,g}(N, a) = sum_{n <= N} f(n) g(n + a): direct
// and expansion evaluation, exact truncation differences, periodicity checks,
// and shift profiles.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/ramanujan.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

/// g tabulated: requires N + a <= g.limit().
Value correlate_direct(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t N,
                       std::uint64_t a);
/// g a truncated divisor sum: any shift, including huge ones.
Value correlate_direct(const TabulatedFunction& f, const TruncatedDivisorSum& g, std::uint64_t N,
                       const BigNat& a);

/// sum_{q <= D} g^(q) sum_{n <= N} f(n) c_q(n + a).
Value correlate_expansion(const TabulatedFunction& f, const TruncatedDivisorSum& g,
                          std::uint64_t N, const BigNat& a);
Value correlate_expansion(const TabulatedFunction& f, const RamanujanCoefficients& coeffs,
                          std::uint64_t N, const BigNat& a);

/// C_{f,g} - C_{f,g_N} = sum_{N < d <= N+a} g'(d) sum_{n <= N, d | n+a} f(n).
/// g_source must be tabulated to N + a.
Value truncation_difference(const TabulatedFunction& f, const TabulatedFunction& g_source,
                            std::uint64_t N, std::uint64_t a);

/// For a <= N the inner sum collapses to f(d - a).
Value small_shift_difference(const TabulatedFunction& f, const TabulatedFunction& g_source,
                             std::uint64_t N, std::uint64_t a);

/// C(N, a) == C(N, a + P) for every listed shift. Throws UndefinedPeriodError for g = 0.
bool verify_periodicity(const TabulatedFunction& f, const TruncatedDivisorSum& g, std::uint64_t N,
                        const BigNat& period, std::span<const BigNat> shifts, double tol = 1e-9);

/// Tolerance for comparing two correlation values built from `summands` terms.
double correlation_tolerance(double base, std::uint64_t summands);

struct ProfileEntry {
  BigNat shift;
  Value value;
};

class CorrelationProfile {
 public:
  CorrelationProfile(std::uint64_t length, std::string f_id, std::string g_id);

  /// Shifts must be >= 1 and strictly increasing; values finite.
  void add(BigNat shift, Value value);

  std::uint64_t length() const { return length_; }
  const std::string& f_id() const { return f_id_; }
  const std::string& g_id() const { return g_id_; }
  const std::vector<ProfileEntry>& entries() const { return entries_; }

 private:
  std::uint64_t length_;
  std::string f_id_;
  std::string g_id_;
  std::vector<ProfileEntry> entries_;
};

/// Evaluates C(N, a) for each requested shift (sorted, deduplicated).
CorrelationProfile correlation_profile(const TabulatedFunction& f, const TruncatedDivisorSum& g,
                                       std::uint64_t N, std::vector<BigNat> shifts,
                                       std::string f_id, std::string g_id);

}  // namespace ramcorr
