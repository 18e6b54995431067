#include "ramcorr/twoseasons.hpp"

#include <cmath>
#include <sstream>

#include "ramcorr/correlations.hpp"
#include "ramcorr/errors.hpp"
#include "ramcorr/ramanujan.hpp"

namespace ramcorr {

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json out;
  out["overall"] = overall;
  out["axioms"] = nlohmann::json::array();
  for (const AxiomResult& a : axioms) {
    out["axioms"].push_back({{"id", a.id}, {"pass", a.pass}, {"evidence", a.evidence}});
  }
  return out;
}

AxiomReport check_axioms(const PrimeTable& primes, const TabulatedFunction& f,
                         const TruncatedDivisorSum& g, std::uint64_t N, std::uint64_t Q) {
  if (f.limit() < N) throw std::invalid_argument("f must be tabulated to N");
  if (primes.limit() < N) throw std::invalid_argument("sieve must cover N");
  AxiomReport report;
  const auto& support = g.support();

  {
    AxiomResult& r = report.axioms[0];
    r.id = 0;
    const std::uint64_t top = support.empty() ? 0 : support.back();
    r.pass = top <= Q && Q <= N;
    std::ostringstream ev;
    ev << "max supp(g') = " << top << ", Q = " << Q << ", N = " << N
       << "; Fair: factors are fixed tables, shift enters only through c_q(n+a)";
    r.evidence = ev.str();
  }
  {
    AxiomResult& r = report.axioms[1];
    r.id = 1;
    const std::vector<int> mu = mobius_table(g.cutoff());
    r.pass = true;
    r.evidence = "g' supported on square-free d";
    for (std::uint64_t d : support) {
      if (mu[d] == 0) {
        r.pass = false;
        r.evidence = "g'(" + std::to_string(d) + ") != 0 with " + std::to_string(d) +
                     " not square-free";
        break;
      }
    }
  }
  {
    AxiomResult& r = report.axioms[2];
    r.id = 2;
    r.pass = true;
    r.evidence = "f supported on primes in [1.." + std::to_string(N) + "]";
    for (std::uint64_t n = 1; n <= N; ++n) {
      if (f.nonzero_at(n) && !primes.is_prime(n)) {
        r.pass = false;
        r.evidence = "f(" + std::to_string(n) + ") != 0 with " + std::to_string(n) + " not prime";
        break;
      }
    }
  }
  {
    AxiomResult& r = report.axioms[3];
    r.id = 3;
    r.pass = true;
    r.evidence = "g' and f odd-supported";
    for (std::uint64_t d : support) {
      if (d % 2 == 0) {
        r.pass = false;
        r.evidence = "g'(" + std::to_string(d) + ") != 0 at even d";
        break;
      }
    }
    if (r.pass) {
      for (std::uint64_t n = 2; n <= N; n += 2) {
        if (f.nonzero_at(n)) {
          r.pass = false;
          r.evidence = "f(" + std::to_string(n) + ") != 0 at even n";
          break;
        }
      }
    }
  }
  {
    AxiomResult& r = report.axioms[4];
    r.id = 4;
    const bool n_prime = N >= 2 && primes.is_prime(N);
    const bool nm1_prime = N >= 3 && primes.is_prime(N - 1);
    r.pass = Q == N && N >= 9 && !n_prime && !nm1_prime;
    std::ostringstream ev;
    ev << "Q = " << Q << ", N = " << N << (n_prime ? " (prime)" : " (not prime)") << ", N-1 = "
       << N - 1 << (nm1_prime ? " (prime)" : " (not prime)");
    r.evidence = ev.str();
  }
  report.overall = true;
  for (const AxiomResult& r : report.axioms) report.overall = report.overall && r.pass;
  return report;
}

AxiomReport check_axioms(const PrimeTable& primes, const TabulatedFunction& f,
                         const TabulatedFunction& g_source, std::uint64_t N, std::uint64_t Q) {
  return check_axioms(primes, f, truncate(g_source, g_source.limit()), N, Q);
}

EntangledValue entangled_correlation(const PrimeTable& primes, const TabulatedFunction& f,
                                     const TruncatedDivisorSum& g, std::uint64_t N,
                                     std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  const AxiomReport report = check_axioms(primes, f, g, N, N);
  if (!report.overall) {
    for (const AxiomResult& r : report.axioms) {
      if (!r.pass) {
        throw PreconditionError("not a Two-Seasons correlation: axiom (" + std::to_string(r.id) +
                                ") fails: " + r.evidence);
      }
    }
  }
  const bool exact = f.kind() == Kind::ExactInt && g.kind() == Kind::ExactInt;
  std::int64_t si = 0;
  double sr = 0.0;
  auto add = [&](std::uint64_t p, std::uint64_t m) {
    const Value gv = g(m);
    if (exact) {
      si += f.exact_at(p) * std::get<std::int64_t>(gv);
    } else {
      sr += f.real_at(p) * to_double(gv);
    }
  };

  const auto& ps = primes.primes();
  if (a % 2 == 0) {
    for (std::uint32_t p : ps) {
      if (p > N) break;
      if (p > 2 && f.nonzero_at(p)) add(p, p + a);
    }
    return {exact ? Value{si} : Value{sr}, Parity::Even};
  }

  const auto jmax = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(N + a))));
  for (unsigned j = 1; j <= jmax; ++j) {
    const std::uint64_t pow2 = std::uint64_t{1} << j;
    for (std::uint32_t p : ps) {
      if (p > N) break;
      if (p == 2 || !f.nonzero_at(p)) continue;
      const std::uint64_t m = p + a;
      if (m % pow2 == 0 && ((m / pow2) & 1U) == 1U) add(p, m / pow2);
    }
  }
  return {exact ? Value{si} : Value{sr}, Parity::Odd};
}

// ---------------------------------------------------------------------------

MembershipSet MembershipSet::from_predicate(std::uint64_t limit,
                                            const std::function<bool(std::uint64_t)>& member) {
  std::vector<bool> bits(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) bits[n - 1] = member(n);
  return MembershipSet(std::move(bits));
}

MembershipSet MembershipSet::named(const std::string& name, std::uint64_t limit) {
  if (name == "all") return from_predicate(limit, [](std::uint64_t) { return true; });
  if (name == "empty") return from_predicate(limit, [](std::uint64_t) { return false; });
  if (name == "odd") return from_predicate(limit, [](std::uint64_t n) { return n % 2 == 1; });
  if (name == "squares") {
    return from_predicate(limit, [](std::uint64_t n) {
      const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
      return r * r == n;
    });
  }
  if (name == "primes" || name == "odd_primes") {
    const PrimeTable primes(std::max<std::uint64_t>(limit, 2));
    const bool odd_only = name == "odd_primes";
    return from_predicate(limit, [&](std::uint64_t n) {
      return primes.is_prime(n) && (!odd_only || n != 2);
    });
  }
  throw std::invalid_argument("unknown set: " + name);
}

bool MembershipSet::contains(std::uint64_t n) const {
  if (n == 0 || n > bits_.size()) {
    throw std::invalid_argument("membership of " + std::to_string(n) + " undecided (set known on [1.." +
                                std::to_string(bits_.size()) + "])");
  }
  return bits_[n - 1];
}

std::uint64_t diophantine_count_even(const MembershipSet& F, const MembershipSet& G,
                                     std::uint64_t N, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("shifts start at 1");
  if (a % 2 != 0) throw WrongBranchError("even-shift count called with odd a");
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= N; n += 2) {
    if (F.contains(n) && G.contains(n + a)) ++count;
  }
  return count;
}

std::uint64_t diophantine_count_odd(const MembershipSet& F, const MembershipSet& G,
                                    std::uint64_t N, std::uint64_t a) {
  if (a % 2 == 0) throw WrongBranchError("odd-shift count called with even a");
  const auto jmax = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(N + a))));
  std::uint64_t count = 0;
  for (unsigned j = 1; j <= jmax; ++j) {
    const std::uint64_t pow2 = std::uint64_t{1} << j;
    for (std::uint64_t n = 1; n <= N; n += 2) {
      if (!F.contains(n)) continue;
      const std::uint64_t m = n + a;
      if (m % pow2 != 0) continue;
      const std::uint64_t k = m / pow2;
      if (k % 2 == 1 && G.contains(k)) ++count;
    }
  }
  return count;
}

std::pair<TabulatedFunction, TabulatedFunction> entanglement_factors(const MembershipSet& F,
                                                                     const MembershipSet& G,
                                                                     std::uint64_t M) {
  TabulatedFunction f = fn::indicator(M, [&](std::uint64_t n) {
    return n % 2 == 1 && n <= F.limit() && F.contains(n);
  });
  TabulatedFunction g = odd_lift(fn::indicator(M, [&](std::uint64_t n) { return G.contains(n); }));
  return {std::move(f), std::move(g)};
}

// ---------------------------------------------------------------------------

namespace {

CombinatorialIdentity finish_identity(Value s1, Value h1, Value s2, Value h2, std::uint64_t N,
                                      double tol) {
  const double scaled = correlation_tolerance(tol, N);
  CombinatorialIdentity out{s1, h1, s2, h2, false, false};
  out.first = values_equal(s1, h1, scaled);
  out.second = values_equal(s2, h2, scaled);
  return out;
}

}  // namespace

CombinatorialIdentity combinatorial_identity_check(const TabulatedFunction& f,
                                                   const TabulatedFunction& g_source,
                                                   std::uint64_t N, double tol) {
  if (N < 3) throw std::invalid_argument("combinatorial identities need N >= 3");
  if (g_source.limit() < N + 2) throw std::invalid_argument("g must be tabulated to N + 2");
  const TruncatedDivisorSum gN = truncate(g_source, N);
  if (gN.is_zero()) throw UndefinedPeriodError("combinatorial identities need g_N != 0");
  const BigNat U = universal_period(N).value;
  return finish_identity(correlate_direct(f, g_source, N, 1), correlate_direct(f, gN, N, U + 1),
                         correlate_direct(f, g_source, N, 2), correlate_direct(f, gN, N, U + 2),
                         N, tol);
}

CombinatorialIdentity combinatorial_identity_check(const TabulatedFunction& f,
                                                   const TruncatedDivisorSum& g,
                                                   std::uint64_t N, double tol) {
  if (N < 3) throw std::invalid_argument("combinatorial identities need N >= 3");
  if (g.is_zero()) throw UndefinedPeriodError("combinatorial identities need g != 0");
  const BigNat U = universal_period(N).value;
  return finish_identity(correlate_direct(f, g, N, 1), correlate_direct(f, g, N, U + 1),
                         correlate_direct(f, g, N, 2), correlate_direct(f, g, N, U + 2), N,
                         tol);
}

}  // namespace ramcorr
