#include "ramcorr/hlmodels.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ramcorr/correlations.hpp"
#include "ramcorr/ramanujan.hpp"

namespace ramcorr {

namespace {

void require_sieve(const PrimeTable& primes, std::uint64_t top, const char* what) {
  if (primes.limit() < top) {
    throw std::invalid_argument(std::string(what) + " needs a sieve up to " + std::to_string(top) +
                                ", have " + std::to_string(primes.limit()));
  }
}

std::vector<double> lambda_et(const PrimeTable& primes, std::uint64_t N, bool odd_only) {
  require_sieve(primes, N, "truncated von Mangoldt");
  std::vector<double> et(N, 0.0);
  for (std::uint64_t d = 2; d <= N; ++d) {
    if (odd_only && d % 2 == 0) continue;
    const int mu = primes.mobius(d);
    if (mu != 0) et[d - 1] = -mu * std::log(static_cast<double>(d));
  }
  return et;
}

}  // namespace

TruncatedDivisorSum lambda_truncated(const PrimeTable& primes, std::uint64_t N) {
  return TruncatedDivisorSum::real(lambda_et(primes, N, false));
}

TruncatedDivisorSum lambda_truncated_odd(const PrimeTable& primes, std::uint64_t N) {
  return TruncatedDivisorSum::real(lambda_et(primes, N, true));
}

double hl_correlation(const PrimeTable& primes, std::uint64_t N, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  require_sieve(primes, N + a, "H-L correlation");
  double s = 0.0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const double ln = primes.von_mangoldt(n);
    if (ln == 0.0) continue;
    const double rn = primes.von_mangoldt(n + a);
    if (rn != 0.0) s += ln * rn;
  }
  return s;
}

double artifact(const PrimeTable& primes, std::uint64_t N, const BigNat& a) {
  if (N < 3) throw std::invalid_argument("the Artifact needs N >= 3");
  if (a <= 0) throw std::invalid_argument("shifts start at 1");
  require_sieve(primes, N, "Artifact");
  const TruncatedDivisorSum g = lambda_truncated_odd(primes, N);
  const bool fits = a <= BigNat(primes.limit() - N);
  if (!fits) {
    const ShiftedEvaluator shifted(g, a);
    double s = 0.0;
    for (std::uint32_t p : primes.primes()) {
      if (p > N) break;
      if (p > 2) s += std::log(static_cast<double>(p)) * to_double(shifted(p));
    }
    return s;
  }
  const auto small = a.convert_to<std::uint64_t>();
  double s = 0.0;
  for (std::uint32_t p : primes.primes()) {
    if (p > N) break;
    if (p > 2) s += std::log(static_cast<double>(p)) * to_double(g.evaluate_via_divisors(primes, p + small));
  }
  return s;
}

bool artifact_identity_check(const PrimeTable& primes, std::uint64_t N, std::uint64_t a,
                             double tol) {
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  require_sieve(primes, N + a, "Artifact identity");
  const TabulatedFunction f = fn::odd_prime_log(primes, N);
  const TabulatedFunction g_full = odd_lift(fn::von_mangoldt(primes, N + a));
  const double lhs = artifact(primes, N, BigNat(a)) + to_double(truncation_difference(f, g_full, N, a));

  double closed = 0.0;
  if (a % 2 == 0) {
    for (std::uint32_t p : primes.primes()) {
      if (p > N) break;
      if (p > 2) closed += std::log(static_cast<double>(p)) * primes.von_mangoldt(p + a);
    }
  } else {
    const auto jmax = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(N + a))));
    for (unsigned j = 1; j <= jmax; ++j) {
      const std::uint64_t pow2 = std::uint64_t{1} << j;
      for (std::uint32_t p : primes.primes()) {
        if (p > N) break;
        if (p == 2) continue;
        const std::uint64_t m = p + a;
        if (m % pow2 == 0 && (m / pow2) % 2 == 1) {
          closed += std::log(static_cast<double>(p)) * primes.von_mangoldt(m / pow2);
        }
      }
    }
  }
  return std::abs(lhs - closed) <= correlation_tolerance(tol, N);
}

// ---------------------------------------------------------------------------

ResidualDecomposition ModelRow::decomposition() const {
  return {hl - cut, cut - cut_odd, cut_odd - odd_n_cut_odd, odd_n_cut_odd - artifact};
}

double normalized_residual(double residual, std::uint64_t N, std::uint64_t a) {
  if (N < 2) throw std::invalid_argument("normalization needs N >= 2");
  const double n = static_cast<double>(N);
  const double scale = (std::sqrt(n) + static_cast<double>(a)) * std::log(n) *
                       std::log(n + static_cast<double>(a));
  return std::abs(residual) / scale;
}

ModelContext::ModelContext(const PrimeTable& primes, std::uint64_t N, std::uint64_t max_shift)
    : primes_(&primes), N_(N), max_shift_(max_shift) {
  if (N < 3) throw std::invalid_argument("model chain needs N >= 3");
  if (max_shift == 0) throw std::invalid_argument("shifts start at 1");
  const std::uint64_t M = N + max_shift;
  require_sieve(primes, M, "model chain");
  lambda_ = fn::von_mangoldt(primes, M).real_values();
  lambda_N_ = tabulate(lambda_truncated(primes, N), M).real_values();
  lambda_N_odd_ = tabulate(lambda_truncated_odd(primes, N), M).real_values();
  for (std::uint64_t n = 2; n <= N; ++n) {
    if (lambda_[n - 1] != 0.0) prime_powers_.push_back(n);
  }
}

void ModelContext::check_shift(std::uint64_t a) const {
  if (a == 0 || a > max_shift_) {
    throw std::invalid_argument("shift " + std::to_string(a) + " outside [1.." +
                                std::to_string(max_shift_) + "]");
  }
}

double ModelContext::sum_lambda(const std::vector<double>& g, std::uint64_t a, bool odd_n_only,
                                bool primes_only) const {
  check_shift(a);
  double s = 0.0;
  for (std::uint64_t n : prime_powers_) {
    if (odd_n_only && n % 2 == 0) continue;
    if (primes_only && !primes_->is_prime(n)) continue;
    s += lambda_[n - 1] * g[n + a - 1];
  }
  return s;
}

double ModelContext::hl(std::uint64_t a) const { return sum_lambda(lambda_, a, false, false); }
double ModelContext::cut(std::uint64_t a) const { return sum_lambda(lambda_N_, a, false, false); }
double ModelContext::cut_odd(std::uint64_t a) const {
  return sum_lambda(lambda_N_odd_, a, false, false);
}
double ModelContext::odd_n_cut_odd(std::uint64_t a) const { return sum_lambda(lambda_N_odd_, a, true, false); }
double ModelContext::odd_n_cut(std::uint64_t a) const { return sum_lambda(lambda_N_, a, true, false); }
double ModelContext::artifact(std::uint64_t a) const {
  return sum_lambda(lambda_N_odd_, a, true, true);
}

ModelRow ModelContext::row(std::uint64_t a) const {
  ModelRow r;
  r.a = a;
  r.hl = hl(a);
  r.cut = cut(a);
  r.cut_odd = cut_odd(a);
  r.odd_n_cut_odd = odd_n_cut_odd(a);
  r.odd_n_cut = odd_n_cut(a);
  r.artifact = artifact(a);
  r.residual = r.hl - r.artifact;
  if (a % 2 == 0) {
    // n odd and a even make n + a odd, where the ODD-lift changes nothing.
    if (r.odd_n_cut_odd != r.odd_n_cut) throw std::logic_error("odd-n models differ for even shift");
    r.normalized = normalized_residual(r.residual, N_, a);
  }
  return r;
}

ModelComparison model_chain(const PrimeTable& primes, std::uint64_t N,
                            const std::vector<std::uint64_t>& shifts) {
  ModelComparison out;
  out.N = N;
  if (shifts.empty()) return out;
  std::uint64_t top = 0;
  for (std::uint64_t a : shifts) top = std::max(top, a);
  const ModelContext ctx(primes, N, top);
  std::vector<std::future<ModelRow>> rows;
  rows.reserve(shifts.size());
  for (std::uint64_t a : shifts) {
    rows.push_back(std::async(std::launch::async, [&ctx, a] { return ctx.row(a); }));
  }
  for (auto& r : rows) out.rows.push_back(r.get());
  return out;
}

ModelRow model_chain(const PrimeTable& primes, std::uint64_t N, std::uint64_t a) {
  return ModelContext(primes, N, a).row(a);
}

// ---------------------------------------------------------------------------

SingularSeriesValue singular_series(const PrimeTable& primes, std::uint64_t a, std::uint64_t Q) {
  if (a == 0) throw std::invalid_argument("singular series needs a >= 1");
  if (Q < 2) throw std::invalid_argument("singular series needs Q >= 2");
  require_sieve(primes, Q, "singular series");
  SingularSeriesValue out;
  out.a = a;
  out.truncation_Q = Q;
  double sum = 0.0;
  for (std::uint64_t q = 1; q <= Q; ++q) {
    if (primes.mobius(q) == 0) continue;
    const auto phi = static_cast<double>(primes.euler_phi(q));
    sum += static_cast<double>(ramanujan_sum(primes, q, a)) / (phi * phi);
  }
  out.truncated_sum = sum;
  double prod = 1.0;
  for (std::uint32_t p : primes.primes()) {
    if (p > Q) break;
    const double pm1 = static_cast<double>(p) - 1.0;
    const double cp = a % p == 0 ? pm1 : -1.0;
    prod *= 1.0 + cp / (pm1 * pm1);
  }
  out.euler_product = prod;
  return out;
}

ErrorBoundTable error_bound_check(const PrimeTable& primes, const std::vector<std::uint64_t>& Ns,
                                  const std::vector<std::uint64_t>& even_shifts) {
  for (std::uint64_t a : even_shifts) {
    if (a == 0 || a % 2 != 0) {
      throw std::invalid_argument("error bound is stated for even shifts only, got " +
                                  std::to_string(a));
    }
  }
  ErrorBoundTable table;
  if (even_shifts.empty()) return table;
  std::uint64_t top = 0;
  for (std::uint64_t a : even_shifts) top = std::max(top, a);
  for (std::uint64_t N : Ns) {
    const ModelContext ctx(primes, N, top);
    for (std::uint64_t a : even_shifts) {
      const double residual = std::abs(ctx.hl(a) - ctx.artifact(a));
      const double norm = normalized_residual(residual, N, a);
      table.entries.push_back({N, a, residual, norm});
      table.max_normalized = std::max(table.max_normalized, norm);
    }
  }
  return table;
}

double chebyshev_theta(const PrimeTable& primes, std::uint64_t N) {
  require_sieve(primes, N, "theta");
  double s = 0.0;
  for (std::uint32_t p : primes.primes()) {
    if (p > N) break;
    s += std::log(static_cast<double>(p));
  }
  return s;
}

double log_big(const BigNat& x) {
  if (x <= 0) throw std::invalid_argument("log of a non-positive integer");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 53) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 52;
  const BigNat top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

bool pnt_sanity(const PrimeTable& primes, std::uint64_t N) {
  const BigNat twice_u = 2 * universal_period(N).value;
  return std::abs(log_big(twice_u) - chebyshev_theta(primes, N)) <= 1e-6;
}

void write_model_csv(std::ostream& out, const ModelComparison& table, bool header) {
  if (header) out << "N,a,hl,cut,cut_odd,odd_n_cut_odd,odd_n_cut,artifact,residual,normalized\n";
  out << std::setprecision(12);
  for (const ModelRow& r : table.rows) {
    out << table.N << ',' << r.a << ',' << r.hl << ',' << r.cut << ',' << r.cut_odd << ',' << r.odd_n_cut_odd
        << ',' << r.odd_n_cut << ',' << r.artifact << ',' << r.residual << ',';
    if (r.normalized) out << *r.normalized;
    out << '\n';
  }
}

}  // namespace ramcorr
