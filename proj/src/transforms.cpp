#include "ramcorr/transforms.hpp"

#include <cmath>
#include <limits>

namespace ramcorr {

namespace {

template <typename T>
std::vector<T> eratosthenes_sweep(std::vector<T> values) {
  // values[i] holds F(i+1); afterwards it holds F'(i+1).
  const std::size_t M = values.size();
  for (std::size_t d = 1; d <= M; ++d) {
    const T v = values[d - 1];
    if (v == T{}) continue;
    for (std::size_t m = 2 * d; m <= M; m += d) values[m - 1] -= v;
  }
  return values;
}

template <typename T>
std::vector<T> zeta_sweep(const std::vector<T>& prime_values) {
  const std::size_t M = prime_values.size();
  std::vector<T> out(M, T{});
  for (std::size_t d = 1; d <= M; ++d) {
    const T v = prime_values[d - 1];
    if (v == T{}) continue;
    for (std::size_t m = d; m <= M; m += d) out[m - 1] += v;
  }
  return out;
}

void require_tabulated(const TabulatedFunction& F, std::uint64_t M) {
  if (F.limit() < M) {
    throw std::invalid_argument("function tabulated to " + std::to_string(F.limit()) +
                                ", needed " + std::to_string(M));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

TruncatedDivisorSum TruncatedDivisorSum::exact(std::vector<std::int64_t> et_values) {
  TruncatedDivisorSum g;
  g.kind_ = Kind::ExactInt;
  g.cutoff_ = et_values.size();
  g.ints_ = std::move(et_values);
  g.rebuild_support();
  return g;
}

TruncatedDivisorSum TruncatedDivisorSum::real(std::vector<double> et_values) {
  TruncatedDivisorSum g;
  g.kind_ = Kind::Real;
  g.cutoff_ = et_values.size();
  for (double& v : et_values) {
    if (!std::isfinite(v)) throw std::invalid_argument("Real values must be finite");
    if (std::abs(v) <= kZeroThreshold) v = 0.0;
  }
  g.reals_ = std::move(et_values);
  g.rebuild_support();
  return g;
}

TruncatedDivisorSum TruncatedDivisorSum::zero(std::uint64_t cutoff, Kind kind) {
  return kind == Kind::ExactInt ? exact(std::vector<std::int64_t>(cutoff, 0))
                                : real(std::vector<double>(cutoff, 0.0));
}

void TruncatedDivisorSum::rebuild_support() {
  support_.clear();
  for (std::uint64_t d = 1; d <= cutoff_; ++d) {
    const bool nz = kind_ == Kind::ExactInt ? ints_[d - 1] != 0 : reals_[d - 1] != 0.0;
    if (nz) support_.push_back(d);
  }
}

Value TruncatedDivisorSum::et(std::uint64_t d) const {
  if (d == 0) throw std::invalid_argument("naturals start at 1");
  if (kind_ == Kind::ExactInt) return d <= cutoff_ ? ints_[d - 1] : std::int64_t{0};
  return d <= cutoff_ ? reals_[d - 1] : 0.0;
}

double TruncatedDivisorSum::et_real(std::uint64_t d) const { return to_double(et(d)); }

Value TruncatedDivisorSum::operator()(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("TDS evaluated at 0");
  if (kind_ == Kind::ExactInt) {
    std::int64_t s = 0;
    for (std::uint64_t d : support_) {
      if (d > m) break;
      if (m % d == 0) s += ints_[d - 1];
    }
    return s;
  }
  double s = 0.0;
  for (std::uint64_t d : support_) {
    if (d > m) break;
    if (m % d == 0) s += reals_[d - 1];
  }
  return s;
}

Value TruncatedDivisorSum::operator()(const BigNat& m) const {
  if (m <= 0) throw std::invalid_argument("TDS evaluated at a non-positive argument");
  if (m <= std::numeric_limits<std::uint64_t>::max()) {
    return (*this)(static_cast<std::uint64_t>(m));
  }
  std::int64_t si = 0;
  double sr = 0.0;
  for (std::uint64_t d : support_) {
    if (static_cast<std::uint64_t>(m % d) != 0) continue;
    if (kind_ == Kind::ExactInt) {
      si += ints_[d - 1];
    } else {
      sr += reals_[d - 1];
    }
  }
  if (kind_ == Kind::ExactInt) return si;
  return sr;
}

Value TruncatedDivisorSum::evaluate_via_divisors(const PrimeTable& primes,
                                                 std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("TDS evaluated at 0");
  std::int64_t si = 0;
  double sr = 0.0;
  for (std::uint64_t d : primes.divisors(m)) {
    if (d > cutoff_) continue;
    if (kind_ == Kind::ExactInt) {
      si += ints_[d - 1];
    } else {
      sr += reals_[d - 1];
    }
  }
  if (kind_ == Kind::ExactInt) return si;
  return sr;
}

TruncatedDivisorSum TruncatedDivisorSum::as_real() const {
  if (kind_ == Kind::Real) return *this;
  return real(std::vector<double>(ints_.begin(), ints_.end()));
}

// ---------------------------------------------------------------------------

ShiftedEvaluator::ShiftedEvaluator(const TruncatedDivisorSum& g, const BigNat& shift) : g_(&g) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  residues_.reserve(g.support().size());
  for (std::uint64_t d : g.support()) residues_.push_back(static_cast<std::uint64_t>(shift % d));
}

Value ShiftedEvaluator::operator()(std::uint64_t n) const {
  const auto& support = g_->support();
  if (g_->kind() == Kind::ExactInt) {
    const auto& et = g_->exact_et();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const std::uint64_t d = support[i];
      if ((residues_[i] + n % d) % d == 0) s += et[d - 1];
    }
    return s;
  }
  const auto& et = g_->real_et();
  double s = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::uint64_t d = support[i];
    if ((residues_[i] + n % d) % d == 0) s += et[d - 1];
  }
  return s;
}

// ---------------------------------------------------------------------------

TabulatedFunction dirichlet_convolve(const TabulatedFunction& F, const TabulatedFunction& G,
                                     std::uint64_t M) {
  require_tabulated(F, M);
  require_tabulated(G, M);
  if (F.kind() == Kind::ExactInt && G.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> h(M, 0);
    for (std::uint64_t d = 1; d <= M; ++d) {
      const std::int64_t fd = F.exact_at(d);
      if (fd == 0) continue;
      for (std::uint64_t k = 1; d * k <= M; ++k) h[d * k - 1] += fd * G.exact_at(k);
    }
    return TabulatedFunction::exact(std::move(h));
  }
  std::vector<double> h(M, 0.0);
  for (std::uint64_t d = 1; d <= M; ++d) {
    const double fd = F.real_at(d);
    if (fd == 0.0) continue;
    for (std::uint64_t k = 1; d * k <= M; ++k) h[d * k - 1] += fd * G.real_at(k);
  }
  return TabulatedFunction::real(std::move(h));
}

TabulatedFunction eratosthenes_transform(const TabulatedFunction& F, std::uint64_t M) {
  require_tabulated(F, M);
  const TabulatedFunction head = F.restricted(M);
  if (head.kind() == Kind::ExactInt) {
    return TabulatedFunction::exact(eratosthenes_sweep(head.exact_values()));
  }
  return TabulatedFunction::real(eratosthenes_sweep(head.real_values()));
}

TabulatedFunction divisor_sum(const TabulatedFunction& Fprime, std::uint64_t M) {
  require_tabulated(Fprime, M);
  const TabulatedFunction head = Fprime.restricted(M);
  if (head.kind() == Kind::ExactInt) {
    return TabulatedFunction::exact(zeta_sweep(head.exact_values()));
  }
  return TabulatedFunction::real(zeta_sweep(head.real_values()));
}

TruncatedDivisorSum truncate(const TabulatedFunction& F, std::uint64_t N) {
  const TabulatedFunction et = eratosthenes_transform(F, N);
  if (et.kind() == Kind::ExactInt) return TruncatedDivisorSum::exact(et.exact_values());
  return TruncatedDivisorSum::real(et.real_values());
}

TruncatedDivisorSum truncate(const TruncatedDivisorSum& g, std::uint64_t N) {
  if (g.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> v(N, 0);
    for (std::uint64_t d = 1; d <= N && d <= g.cutoff(); ++d) v[d - 1] = g.exact_et()[d - 1];
    return TruncatedDivisorSum::exact(std::move(v));
  }
  std::vector<double> v(N, 0.0);
  for (std::uint64_t d = 1; d <= N && d <= g.cutoff(); ++d) v[d - 1] = g.real_et()[d - 1];
  return TruncatedDivisorSum::real(std::move(v));
}

Value evaluate_tds(const TruncatedDivisorSum& g, const BigNat& m) { return g(m); }

TabulatedFunction odd_lift(const TabulatedFunction& F) {
  const std::uint64_t M = F.limit();
  const TabulatedFunction et = eratosthenes_transform(F, M);
  if (et.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> v = et.exact_values();
    for (std::uint64_t d = 2; d <= M; d += 2) v[d - 1] = 0;
    return divisor_sum(TabulatedFunction::exact(std::move(v)), M);
  }
  std::vector<double> v = et.real_values();
  for (std::uint64_t d = 2; d <= M; d += 2) v[d - 1] = 0.0;
  return divisor_sum(TabulatedFunction::real(std::move(v)), M);
}

TabulatedFunction odd_lift_direct(const TabulatedFunction& F) {
  const std::uint64_t M = F.limit();
  if (F.kind() == Kind::ExactInt) {
    return TabulatedFunction::exact_from(M, [&](std::uint64_t n) { return F.exact_at(odd_part(n)); });
  }
  return TabulatedFunction::real_from(M, [&](std::uint64_t n) { return F.real_at(odd_part(n)); });
}

TruncatedDivisorSum odd_lift(const TruncatedDivisorSum& g) {
  if (g.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> v = g.exact_et();
    for (std::uint64_t d = 2; d <= g.cutoff(); d += 2) v[d - 1] = 0;
    return TruncatedDivisorSum::exact(std::move(v));
  }
  std::vector<double> v = g.real_et();
  for (std::uint64_t d = 2; d <= g.cutoff(); d += 2) v[d - 1] = 0.0;
  return TruncatedDivisorSum::real(std::move(v));
}

TabulatedFunction tabulate(const TruncatedDivisorSum& g, std::uint64_t M) {
  if (g.kind() == Kind::ExactInt) {
    std::vector<std::int64_t> out(M, 0);
    for (std::uint64_t d : g.support()) {
      for (std::uint64_t m = d; m <= M; m += d) out[m - 1] += g.exact_et()[d - 1];
    }
    return TabulatedFunction::exact(std::move(out));
  }
  std::vector<double> out(M, 0.0);
  for (std::uint64_t d : g.support()) {
    for (std::uint64_t m = d; m <= M; m += d) out[m - 1] += g.real_et()[d - 1];
  }
  return TabulatedFunction::real(std::move(out));
}

}  // namespace ramcorr
