#include "ramcorr/arith_core.hpp"

#include <algorithm>
#include <cmath>

namespace ramcorr {

std::string to_string(Kind kind) { return kind == Kind::ExactInt ? "ExactInt" : "Real"; }

Kind parse_kind(std::string_view text) {
  if (text == "ExactInt") return Kind::ExactInt;
  if (text == "Real") return Kind::Real;
  throw std::invalid_argument("unknown value kind: " + std::string(text));
}

bool is_nonzero(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i != 0;
  return std::abs(std::get<double>(v)) > kZeroThreshold;
}

bool values_equal(const Value& lhs, const Value& rhs, double tol) {
  if (kind_of(lhs) == Kind::ExactInt && kind_of(rhs) == Kind::ExactInt) {
    return std::get<std::int64_t>(lhs) == std::get<std::int64_t>(rhs);
  }
  return std::abs(to_double(lhs) - to_double(rhs)) <= tol;
}

// ---------------------------------------------------------------------------

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("sieve limit exceeds 32 bits");
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t m = i * p;
      if (p > spf_[i] || m > limit) break;
      spf_[m] = p;
    }
  }
  spf_[1] = 1;
}

void PrimeTable::check_range(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("naturals start at 1");
  if (n > limit_) {
    throw std::invalid_argument("argument " + std::to_string(n) + " exceeds sieve limit " +
                                std::to_string(limit_));
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

std::uint64_t PrimeTable::smallest_prime_factor(std::uint64_t n) const {
  check_range(n);
  if (n < 2) throw std::invalid_argument("1 has no prime factor");
  return spf_[n];
}

std::size_t PrimeTable::prime_count(std::uint64_t n) const {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), std::min(n, limit_)) - primes_.begin());
}

std::vector<std::pair<std::uint64_t, int>> PrimeTable::factorize(std::uint64_t n) const {
  check_range(n);
  std::vector<std::pair<std::uint64_t, int>> out;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint64_t> PrimeTable::divisors(std::uint64_t n) const {
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

int PrimeTable::mobius(std::uint64_t n) const {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t PrimeTable::euler_phi(std::uint64_t n) const {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

double PrimeTable::von_mangoldt(std::uint64_t n) const {
  check_range(n);
  if (n < 2) return 0.0;
  const std::uint64_t p = spf_[n];
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::uint64_t PrimeTable::kappa(std::uint64_t n) const {
  std::uint64_t k = 1;
  for (auto [p, e] : factorize(n)) k *= p;
  return k;
}

std::pair<std::uint64_t, std::uint64_t> PrimeTable::smooth_sifted_split(std::uint64_t n,
                                                                        std::uint64_t P) const {
  if (P < 2 || P > limit_ || spf_[P] != P) {
    throw std::invalid_argument("smooth/sifted split needs a prime P within the sieve");
  }
  std::uint64_t smooth = 1;
  for (auto [p, e] : factorize(n)) {
    if (p > P) break;
    for (int k = 0; k < e; ++k) smooth *= p;
  }
  return {smooth, n / smooth};
}

PrimeTable sieve_primes(std::uint64_t M) { return PrimeTable(M); }

std::vector<int> mobius_table(std::uint64_t M) {
  std::vector<int> mu(M + 1, 1);
  std::vector<bool> composite(M + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= M; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > M) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  mu[0] = 0;
  return mu;
}

unsigned v2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("v2 of zero is undefined");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

std::uint64_t odd_part(std::uint64_t n) { return n >> v2(n); }

unsigned v2(const BigNat& n) {
  if (n <= 0) throw std::invalid_argument("v2 needs a positive argument");
  return static_cast<unsigned>(boost::multiprecision::lsb(n));
}

BigNat odd_part(const BigNat& n) { return n >> v2(n); }

std::vector<std::pair<std::uint64_t, int>> trial_factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------

TabulatedFunction TabulatedFunction::exact(std::vector<std::int64_t> values) {
  TabulatedFunction f;
  f.kind_ = Kind::ExactInt;
  f.ints_ = std::move(values);
  return f;
}

TabulatedFunction TabulatedFunction::real(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("Real values must be finite");
  }
  TabulatedFunction f;
  f.kind_ = Kind::Real;
  f.reals_ = std::move(values);
  return f;
}

TabulatedFunction TabulatedFunction::exact_from(
    std::uint64_t M, const std::function<std::int64_t(std::uint64_t)>& fn) {
  std::vector<std::int64_t> v(M);
  for (std::uint64_t n = 1; n <= M; ++n) v[n - 1] = fn(n);
  return exact(std::move(v));
}

TabulatedFunction TabulatedFunction::real_from(std::uint64_t M,
                                               const std::function<double(std::uint64_t)>& fn) {
  std::vector<double> v(M);
  for (std::uint64_t n = 1; n <= M; ++n) v[n - 1] = fn(n);
  return real(std::move(v));
}

std::uint64_t TabulatedFunction::limit() const {
  return kind_ == Kind::ExactInt ? ints_.size() : reals_.size();
}

void TabulatedFunction::check_index(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw std::invalid_argument("index " + std::to_string(n) + " outside tabulation [1.." +
                                std::to_string(limit()) + "]");
  }
}

Value TabulatedFunction::operator()(std::uint64_t n) const {
  check_index(n);
  if (kind_ == Kind::ExactInt) return ints_[n - 1];
  return reals_[n - 1];
}

double TabulatedFunction::real_at(std::uint64_t n) const {
  check_index(n);
  return kind_ == Kind::ExactInt ? static_cast<double>(ints_[n - 1]) : reals_[n - 1];
}

std::int64_t TabulatedFunction::exact_at(std::uint64_t n) const {
  check_index(n);
  if (kind_ != Kind::ExactInt) throw std::logic_error("exact value requested from Real table");
  return ints_[n - 1];
}

bool TabulatedFunction::nonzero_at(std::uint64_t n) const {
  check_index(n);
  return kind_ == Kind::ExactInt ? ints_[n - 1] != 0 : std::abs(reals_[n - 1]) > kZeroThreshold;
}

TabulatedFunction TabulatedFunction::as_real() const {
  if (kind_ == Kind::Real) return *this;
  std::vector<double> v(ints_.begin(), ints_.end());
  return real(std::move(v));
}

TabulatedFunction TabulatedFunction::restricted(std::uint64_t M) const {
  if (M > limit()) throw std::invalid_argument("restriction beyond tabulation");
  if (kind_ == Kind::ExactInt) return exact({ints_.begin(), ints_.begin() + M});
  return real({reals_.begin(), reals_.begin() + M});
}

// ---------------------------------------------------------------------------

namespace fn {

TabulatedFunction unit(std::uint64_t M) { return TabulatedFunction::exact(std::vector<std::int64_t>(M, 1)); }

TabulatedFunction delta_one(std::uint64_t M) {
  std::vector<std::int64_t> v(M, 0);
  if (M > 0) v[0] = 1;
  return TabulatedFunction::exact(std::move(v));
}

TabulatedFunction identity(std::uint64_t M) {
  return TabulatedFunction::exact_from(M, [](std::uint64_t n) { return static_cast<std::int64_t>(n); });
}

TabulatedFunction mobius(const PrimeTable& primes, std::uint64_t M) {
  return TabulatedFunction::exact_from(M, [&](std::uint64_t n) { return primes.mobius(n); });
}

TabulatedFunction mobius_squared(const PrimeTable& primes, std::uint64_t M) {
  return TabulatedFunction::exact_from(M, [&](std::uint64_t n) {
    return static_cast<std::int64_t>(primes.mobius(n) != 0);
  });
}

TabulatedFunction euler_phi(const PrimeTable& primes, std::uint64_t M) {
  return TabulatedFunction::exact_from(
      M, [&](std::uint64_t n) { return static_cast<std::int64_t>(primes.euler_phi(n)); });
}

TabulatedFunction von_mangoldt(const PrimeTable& primes, std::uint64_t M) {
  return TabulatedFunction::real_from(M, [&](std::uint64_t n) { return primes.von_mangoldt(n); });
}

TabulatedFunction indicator(std::uint64_t M, const std::function<bool(std::uint64_t)>& member) {
  return TabulatedFunction::exact_from(
      M, [&](std::uint64_t n) { return static_cast<std::int64_t>(member(n)); });
}

TabulatedFunction odd_prime_log(const PrimeTable& primes, std::uint64_t M) {
  return TabulatedFunction::real_from(M, [&](std::uint64_t n) {
    return (n > 2 && primes.is_prime(n)) ? std::log(static_cast<double>(n)) : 0.0;
  });
}

TabulatedFunction multiply(const TabulatedFunction& lhs, const TabulatedFunction& rhs) {
  const std::uint64_t M = std::min(lhs.limit(), rhs.limit());
  if (lhs.kind() == Kind::ExactInt && rhs.kind() == Kind::ExactInt) {
    return TabulatedFunction::exact_from(
        M, [&](std::uint64_t n) { return lhs.exact_at(n) * rhs.exact_at(n); });
  }
  return TabulatedFunction::real_from(
      M, [&](std::uint64_t n) { return lhs.real_at(n) * rhs.real_at(n); });
}

}  // namespace fn

}  // namespace ramcorr
