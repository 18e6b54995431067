#include "ramcorr/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "ramcorr/errors.hpp"

namespace ramcorr {

namespace {

void require_length(const TabulatedFunction& f, std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("correlation length must be >= 1");
  if (f.limit() < N) {
    throw std::invalid_argument("f tabulated to " + std::to_string(f.limit()) +
                                ", correlation length " + std::to_string(N));
  }
}

}  // namespace

double correlation_tolerance(double base, std::uint64_t summands) {
  return base * static_cast<double>(std::max<std::uint64_t>(1, summands));
}

Value correlate_direct(const TabulatedFunction& f, const TabulatedFunction& g, std::uint64_t N,
                       std::uint64_t a) {
  require_length(f, N);
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  if (g.limit() < N + a) {
    throw std::invalid_argument("g tabulated to " + std::to_string(g.limit()) + ", needs " +
                                std::to_string(N + a) + " (use a truncated divisor sum)");
  }
  if (f.kind() == Kind::ExactInt && g.kind() == Kind::ExactInt) {
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n <= N; ++n) s += f.exact_at(n) * g.exact_at(n + a);
    return s;
  }
  double s = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double fn = f.real_at(n);
    if (fn != 0.0) s += fn * g.real_at(n + a);
  }
  return s;
}

Value correlate_direct(const TabulatedFunction& f, const TruncatedDivisorSum& g, std::uint64_t N,
                       const BigNat& a) {
  require_length(f, N);
  if (a <= 0) throw std::invalid_argument("shifts start at 1");
  const ShiftedEvaluator shifted(g, a);
  if (f.kind() == Kind::ExactInt && g.kind() == Kind::ExactInt) {
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
      const std::int64_t fn = f.exact_at(n);
      if (fn != 0) s += fn * std::get<std::int64_t>(shifted(n));
    }
    return s;
  }
  double s = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double fn = f.real_at(n);
    if (fn != 0.0) s += fn * to_double(shifted(n));
  }
  return s;
}

Value correlate_expansion(const TabulatedFunction& f, const RamanujanCoefficients& coeffs,
                          std::uint64_t N, const BigNat& a) {
  require_length(f, N);
  if (a <= 0) throw std::invalid_argument("shifts start at 1");
  const auto& support = coeffs.support();
  const auto& kernels = coeffs.kernels();

  // One big-integer reduction per modulus; the inner sum runs on residues.
  auto inner_exact = [&](std::size_t i) {
    const std::uint64_t q = support[i];
    const std::uint64_t r = static_cast<std::uint64_t>(a % q);
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
      const std::int64_t fn = f.exact_at(n);
      if (fn != 0) s += fn * kernels[i].at_residue((n % q + r) % q);
    }
    return s;
  };
  auto inner_real = [&](std::size_t i) {
    const std::uint64_t q = support[i];
    const std::uint64_t r = static_cast<std::uint64_t>(a % q);
    double s = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
      const double fn = f.real_at(n);
      if (fn != 0.0) s += fn * static_cast<double>(kernels[i].at_residue((n % q + r) % q));
    }
    return s;
  };

  if (f.kind() == Kind::ExactInt && coeffs.kind() == Kind::ExactInt) {
    BigNat acc = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const std::int64_t s = inner_exact(i);
      if (s != 0) acc += coeffs.scaled_numerators()[i] * s;
    }
    BigNat quot;
    BigNat rem;
    boost::multiprecision::divide_qr(acc, coeffs.common_denominator(), quot, rem);
    if (rem != 0) throw std::domain_error("exact correlation expansion is not an integer");
    return quot.convert_to<std::int64_t>();
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    acc += coeffs.real_at(support[i]) * inner_real(i);
  }
  return acc;
}

Value correlate_expansion(const TabulatedFunction& f, const TruncatedDivisorSum& g,
                          std::uint64_t N, const BigNat& a) {
  return correlate_expansion(f, wintner_coefficients(g), N, a);
}

Value truncation_difference(const TabulatedFunction& f, const TabulatedFunction& g_source,
                            std::uint64_t N, std::uint64_t a) {
  require_length(f, N);
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  if (g_source.limit() < N + a) {
    throw std::invalid_argument("g tabulated to " + std::to_string(g_source.limit()) +
                                ", truncation difference needs " + std::to_string(N + a));
  }
  const TabulatedFunction gp = eratosthenes_transform(g_source, N + a);
  const bool exact = f.kind() == Kind::ExactInt && gp.kind() == Kind::ExactInt;
  std::int64_t si = 0;
  double sr = 0.0;
  for (std::uint64_t d = N + 1; d <= N + a; ++d) {
    if (!gp.nonzero_at(d)) continue;
    // n <= N with n = -a (mod d)
    std::uint64_t n = (d - a % d) % d;
    if (n == 0) n = d;
    std::int64_t inner_i = 0;
    double inner_r = 0.0;
    for (; n <= N; n += d) {
      if (exact) {
        inner_i += f.exact_at(n);
      } else {
        inner_r += f.real_at(n);
      }
    }
    if (exact) {
      si += gp.exact_at(d) * inner_i;
    } else {
      sr += gp.real_at(d) * inner_r;
    }
  }
  if (exact) return si;
  return sr;
}

Value small_shift_difference(const TabulatedFunction& f, const TabulatedFunction& g_source,
                             std::uint64_t N, std::uint64_t a) {
  require_length(f, N);
  if (a == 0 || a > N) {
    throw std::invalid_argument("small-shift formula needs 1 <= a <= N");
  }
  if (g_source.limit() < N + a) {
    throw std::invalid_argument("g tabulated to " + std::to_string(g_source.limit()) +
                                ", small-shift difference needs " + std::to_string(N + a));
  }
  const TabulatedFunction gp = eratosthenes_transform(g_source, N + a);
  if (f.kind() == Kind::ExactInt && gp.kind() == Kind::ExactInt) {
    std::int64_t s = 0;
    for (std::uint64_t d = N + 1; d <= N + a; ++d) s += gp.exact_at(d) * f.exact_at(d - a);
    return s;
  }
  double s = 0.0;
  for (std::uint64_t d = N + 1; d <= N + a; ++d) {
    if (gp.nonzero_at(d)) s += gp.real_at(d) * f.real_at(d - a);
  }
  return s;
}

bool verify_periodicity(const TabulatedFunction& f, const TruncatedDivisorSum& g, std::uint64_t N,
                        const BigNat& period, std::span<const BigNat> shifts, double tol) {
  if (g.is_zero()) throw UndefinedPeriodError("periodicity of the zero TDS is not meaningful");
  if (period <= 0) throw std::invalid_argument("period must be >= 1");
  const double scaled = correlation_tolerance(tol, N);
  for (const BigNat& a : shifts) {
    const Value lhs = correlate_direct(f, g, N, a);
    const Value rhs = correlate_direct(f, g, N, a + period);
    if (!values_equal(lhs, rhs, scaled)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

CorrelationProfile::CorrelationProfile(std::uint64_t length, std::string f_id, std::string g_id)
    : length_(length), f_id_(std::move(f_id)), g_id_(std::move(g_id)) {}

void CorrelationProfile::add(BigNat shift, Value value) {
  if (shift <= 0) throw std::invalid_argument("shifts start at 1");
  if (!entries_.empty() && shift <= entries_.back().shift) {
    throw std::invalid_argument("profile shifts must be strictly increasing");
  }
  if (!std::isfinite(to_double(value))) throw std::invalid_argument("profile value not finite");
  entries_.push_back({std::move(shift), value});
}

CorrelationProfile correlation_profile(const TabulatedFunction& f, const TruncatedDivisorSum& g,
                                       std::uint64_t N, std::vector<BigNat> shifts,
                                       std::string f_id, std::string g_id) {
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  CorrelationProfile profile(N, std::move(f_id), std::move(g_id));
  for (BigNat& a : shifts) {
    Value v = correlate_direct(f, g, N, a);
    profile.add(std::move(a), v);
  }
  return profile;
}

}  // namespace ramcorr
