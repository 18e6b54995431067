#include "ramcorr/ramanujan.hpp"

#include <algorithm>
#include <cmath>

#include "ramcorr/errors.hpp"

namespace ramcorr {

namespace {

// Only the divisors d = q / s with s | kappa(q) carry mu(q/d) != 0:
// enumerate subsets of the distinct primes of q.
std::vector<std::pair<std::uint64_t, std::int64_t>> kernel_terms(
    std::uint64_t q, const std::vector<std::pair<std::uint64_t, int>>& factors) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
  const std::size_t k = factors.size();
  terms.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t s = 1;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        s *= factors[i].first;
        sign = -sign;
      }
    }
    const std::uint64_t d = q / s;
    terms.emplace_back(d, sign * static_cast<std::int64_t>(d));
  }
  return terms;
}

std::uint64_t reduce(const BigNat& a, std::uint64_t q) {
  BigNat r = a % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------

RamanujanKernel::RamanujanKernel(std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("Ramanujan sum modulus must be >= 1");
  q_ = q;
  terms_ = kernel_terms(q, trial_factorize(q));
}

RamanujanKernel::RamanujanKernel(std::uint64_t q,
                                 std::vector<std::pair<std::uint64_t, std::int64_t>> terms)
    : q_(q), terms_(std::move(terms)) {
  if (q == 0) throw std::invalid_argument("Ramanujan sum modulus must be >= 1");
}

std::int64_t RamanujanKernel::at_residue(std::uint64_t r) const {
  std::int64_t s = 0;
  for (auto [d, w] : terms_) {
    if (r % d == 0) s += w;
  }
  return s;
}

std::int64_t RamanujanKernel::operator()(const BigNat& a) const { return at_residue(reduce(a, q_)); }

std::int64_t ramanujan_sum(std::uint64_t q, const BigNat& a) {
  return RamanujanKernel(q)(a);
}

std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t a) {
  if (q == 0) throw std::invalid_argument("Ramanujan sum modulus must be >= 1");
  const std::int64_t qs = static_cast<std::int64_t>(q);
  const std::int64_t r = ((a % qs) + qs) % qs;
  return RamanujanKernel(q).at_residue(static_cast<std::uint64_t>(r));
}

std::int64_t ramanujan_sum(const PrimeTable& primes, std::uint64_t q, std::uint64_t a) {
  if (q == 0) throw std::invalid_argument("Ramanujan sum modulus must be >= 1");
  const auto factors = primes.factorize(q);
  const std::uint64_t r = a % q;
  std::int64_t s = 0;
  for (auto [d, w] : kernel_terms(q, factors)) {
    if (r % d == 0) s += w;
  }
  return s;
}

std::int64_t ramanujan_orthogonality(std::uint64_t d, std::uint64_t a) {
  if (d == 0 || a == 0) throw std::invalid_argument("naturals start at 1");
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : trial_factorize(d)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::int64_t s = 0;
  for (std::uint64_t q : divs) s += ramanujan_sum(q, static_cast<std::int64_t>(a));
  return s;
}

// ---------------------------------------------------------------------------

RamanujanCoefficients RamanujanCoefficients::from_exact(std::vector<Rational> coeffs) {
  RamanujanCoefficients c;
  c.kind_ = Kind::ExactInt;
  c.cutoff_ = coeffs.size();
  c.exact_ = std::move(coeffs);
  c.finish();
  return c;
}

RamanujanCoefficients RamanujanCoefficients::from_real(std::vector<double> coeffs) {
  RamanujanCoefficients c;
  c.kind_ = Kind::Real;
  c.cutoff_ = coeffs.size();
  for (double v : coeffs) {
    if (!std::isfinite(v)) throw std::invalid_argument("Real coefficients must be finite");
  }
  c.real_ = std::move(coeffs);
  c.finish();
  return c;
}

void RamanujanCoefficients::finish() {
  support_.clear();
  for (std::uint64_t q = 1; q <= cutoff_; ++q) {
    if (nonzero_at(q)) support_.push_back(q);
  }

  // Kernels for every support modulus from one Mobius table: O(D log D).
  const std::vector<int> mu = mobius_table(cutoff_);
  std::vector<std::size_t> slot(cutoff_ + 1, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < support_.size(); ++i) slot[support_[i]] = i;
  std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>> terms(support_.size());
  for (std::uint64_t d = 1; d <= cutoff_; ++d) {
    for (std::uint64_t q = d, k = 1; q <= cutoff_; q += d, ++k) {
      if (slot[q] == static_cast<std::size_t>(-1) || mu[k] == 0) continue;
      terms[slot[q]].emplace_back(d, mu[k] * static_cast<std::int64_t>(d));
    }
  }
  kernels_.clear();
  kernels_.reserve(support_.size());
  for (std::size_t i = 0; i < support_.size(); ++i) {
    kernels_.emplace_back(support_[i], std::move(terms[i]));
  }

  denominator_ = 1;
  scaled_.clear();
  if (kind_ == Kind::ExactInt) {
    for (std::uint64_t q : support_) {
      denominator_ = boost::multiprecision::lcm(
          denominator_, BigNat(boost::multiprecision::denominator(exact_[q - 1])));
    }
    for (std::uint64_t q : support_) {
      const Rational& c = exact_[q - 1];
      scaled_.push_back(BigNat(boost::multiprecision::numerator(c)) *
                        (denominator_ / BigNat(boost::multiprecision::denominator(c))));
    }
  }
}

Rational RamanujanCoefficients::exact_at(std::uint64_t q) const {
  if (kind_ != Kind::ExactInt) throw std::logic_error("exact coefficient from Real table");
  if (q == 0) throw std::invalid_argument("naturals start at 1");
  return q <= cutoff_ ? exact_[q - 1] : Rational(0);
}

double RamanujanCoefficients::real_at(std::uint64_t q) const {
  if (q == 0) throw std::invalid_argument("naturals start at 1");
  if (q > cutoff_) return 0.0;
  return kind_ == Kind::Real ? real_[q - 1] : exact_[q - 1].convert_to<double>();
}

bool RamanujanCoefficients::nonzero_at(std::uint64_t q) const {
  if (q == 0 || q > cutoff_) return false;
  return kind_ == Kind::ExactInt ? exact_[q - 1] != 0 : std::abs(real_[q - 1]) > kZeroThreshold;
}

RamanujanCoefficients wintner_coefficients(const TruncatedDivisorSum& g) {
  const std::uint64_t D = g.cutoff();
  if (g.kind() == Kind::ExactInt) {
    std::vector<Rational> c(D, Rational(0));
    for (std::uint64_t d : g.support()) {
      const Rational term(g.exact_et()[d - 1], static_cast<std::int64_t>(d));
      // every q | d receives g'(d)/d
      for (std::uint64_t q = 1; q * q <= d; ++q) {
        if (d % q != 0) continue;
        c[q - 1] += term;
        if (q * q != d) c[d / q - 1] += term;
      }
    }
    return RamanujanCoefficients::from_exact(std::move(c));
  }
  std::vector<double> c(D, 0.0);
  for (std::uint64_t q = 1; q <= D; ++q) {
    double s = 0.0;
    for (std::uint64_t d = q; d <= D; d += q) s += g.real_et()[d - 1] / static_cast<double>(d);
    c[q - 1] = s;
  }
  return RamanujanCoefficients::from_real(std::move(c));
}

Value ramanujan_expand(const RamanujanCoefficients& coeffs, const BigNat& a) {
  if (a <= 0) throw std::invalid_argument("expansion argument must be >= 1");
  const auto& support = coeffs.support();
  const auto& kernels = coeffs.kernels();
  if (coeffs.kind() == Kind::ExactInt) {
    BigNat acc = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const std::int64_t c = kernels[i](a);
      if (c != 0) acc += coeffs.scaled_numerators()[i] * c;
    }
    BigNat rem;
    BigNat quot;
    boost::multiprecision::divide_qr(acc, coeffs.common_denominator(), quot, rem);
    if (rem != 0) throw std::domain_error("expansion of ExactInt coefficients is not an integer");
    return quot.convert_to<std::int64_t>();
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    acc += coeffs.real_values()[support[i] - 1] * static_cast<double>(kernels[i](a));
  }
  return acc;
}

TruncatedDivisorSum lucht_invert(const RamanujanCoefficients& coeffs) {
  const std::uint64_t D = coeffs.cutoff();
  const std::vector<int> mu = mobius_table(D);
  if (coeffs.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> et(D, 0);
    for (std::uint64_t d = 1; d <= D; ++d) {
      Rational s = 0;
      for (std::uint64_t K = 1; d * K <= D; ++K) {
        if (mu[K] == 0 || !coeffs.nonzero_at(d * K)) continue;
        s += mu[K] * coeffs.exact_values()[d * K - 1];
      }
      s *= static_cast<std::int64_t>(d);
      if (boost::multiprecision::denominator(s) != 1) {
        throw std::domain_error("coefficients are not those of an integer-valued TDS (d = " +
                                std::to_string(d) + ")");
      }
      et[d - 1] = BigNat(boost::multiprecision::numerator(s)).convert_to<std::int64_t>();
    }
    return TruncatedDivisorSum::exact(std::move(et));
  }
  std::vector<double> et(D, 0.0);
  for (std::uint64_t d = 1; d <= D; ++d) {
    double s = 0.0;
    for (std::uint64_t K = 1; d * K <= D; ++K) {
      if (mu[K] == 0 || !coeffs.nonzero_at(d * K)) continue;
      s += mu[K] * coeffs.real_values()[d * K - 1];
    }
    et[d - 1] = static_cast<double>(d) * s;
  }
  return TruncatedDivisorSum::real(std::move(et));
}

SupportInclusion support_closure_check(const TruncatedDivisorSum& g,
                                       const std::function<bool(std::uint64_t)>& member) {
  const std::uint64_t D = g.cutoff();
  std::vector<bool> in(D + 1, false);
  for (std::uint64_t n = 1; n <= D; ++n) in[n] = member(n);
  for (std::uint64_t d = 1; d <= D; ++d) {
    if (in[d]) continue;
    for (std::uint64_t m = 2 * d; m <= D; m += d) {
      if (in[m]) {
        throw std::invalid_argument("set is not divisor-closed: contains " + std::to_string(m) +
                                    " but not its divisor " + std::to_string(d));
      }
    }
  }
  const RamanujanCoefficients coeffs = wintner_coefficients(g);
  SupportInclusion out{true, true};
  for (std::uint64_t d : g.support()) out.et_in_set = out.et_in_set && in[d];
  for (std::uint64_t q : coeffs.support()) out.coeffs_in_set = out.coeffs_in_set && in[q];
  return out;
}

Period wintner_period(const RamanujanCoefficients& coeffs, std::uint64_t Q) {
  if (coeffs.is_zero()) throw UndefinedPeriodError("Wintner's period of the zero TDS is undefined");
  if (Q == 0) throw std::invalid_argument("period range Q must be >= 1");
  BigNat w = 1;
  for (std::uint64_t q : coeffs.support()) {
    if (q > Q) break;
    w = boost::multiprecision::lcm(w, BigNat(q));
  }
  return {w, PeriodKind::WintnerPeriod};
}

Period wintner_period(const TruncatedDivisorSum& g, std::uint64_t Q) {
  if (g.is_zero()) throw UndefinedPeriodError("Wintner's period of the zero TDS is undefined");
  return wintner_period(wintner_coefficients(g), Q);
}

Period universal_period(std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("universal period needs N >= 2");
  BigNat u = 1;
  std::vector<bool> composite(N + 1, false);
  for (std::uint64_t p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= N; m += p) composite[m] = true;
    if (p > 2) u *= p;
  }
  return {u, PeriodKind::UniversalPeriod};
}

bool half_range_identity_check(const TabulatedFunction& g_source, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("half-range identity needs N >= 2");
  const TruncatedDivisorSum g = truncate(g_source, N);
  const RamanujanCoefficients c = wintner_coefficients(g);
  for (std::uint64_t q = N / 2 + 1; q <= N; ++q) {
    if (g.kind() == Kind::ExactInt) {
      if (c.exact_at(q) != Rational(g.exact_et()[q - 1], static_cast<std::int64_t>(q))) return false;
    } else {
      const double lhs = c.real_at(q);
      const double rhs = g.real_et()[q - 1] / static_cast<double>(q);
      if (std::abs(lhs - rhs) > 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1e-300})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ramcorr
