// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ramcorr/correlations.hpp"
#include "ramcorr/generators.hpp"
#include "ramcorr/hlmodels.hpp"
#include "ramcorr/ramanujan.hpp"
#include "ramcorr/twoseasons.hpp"
#include "support/oracles.hpp"

using namespace ramcorr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first counterexample and a check count.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& where) {
    ++checks_;
    if (!ok && first_.empty()) first_ = where();
    if (!ok) ++failures_;
  }
  Outcome done(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!extra.empty()) s << ", " << extra;
    if (failures_ > 0) s << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

const PrimeTable& primes() {
  static const PrimeTable t(1'000'200);
  return t;
}

bool near(const Value& x, const Value& y, double tol) {
  if (std::holds_alternative<std::int64_t>(x) && std::holds_alternative<std::int64_t>(y)) return x == y;
  return std::fabs(to_double(x) - to_double(y)) <= tol;
}

std::string show(const Value& v) {
  std::ostringstream s;
  s.precision(15);
  if (std::holds_alternative<std::int64_t>(v)) {
    s << std::get<std::int64_t>(v);
  } else {
    s << std::get<double>(v);
  }
  return s.str();
}

// Shared corpus for expansion and inversion: random exact TDS and Lambda_N.
struct Corpus {
  std::vector<TruncatedDivisorSum> exact;
  std::vector<TruncatedDivisorSum> lambda;
  std::vector<BigNat> big_shifts;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    gen::Rng rng(1001);
    for (int i = 0; i < 100; ++i) out.exact.push_back(gen::exact_tds(rng, gen::uniform(rng, 1, 100)));
    for (std::uint64_t N = 2; N <= 100; ++N) out.lambda.push_back(lambda_truncated(primes(), N));
    const BigNat max = BigNat(10) * BigNat("100000000000000000000000000000");  // 1e30
    for (int i = 0; i < 20; ++i) out.big_shifts.push_back(gen::bignat(rng, max));
    return out;
  }();
  return c;
}

Outcome orthogonality() {
  Tally t;
  for (std::uint64_t d = 1; d <= 200; ++d) {
    for (std::uint64_t a = 1; a <= 1000; ++a) {
      const std::int64_t got = ramanujan_orthogonality(d, a);
      const std::int64_t want = a % d == 0 ? static_cast<std::int64_t>(d) : 0;
      t.check(got == want, [&] { return "d=" + std::to_string(d) + " a=" + std::to_string(a); });
    }
  }
  return t.done();
}

Outcome expansion() {
  Tally t;
  const auto run = [&](const TruncatedDivisorSum& g, double tol) {
    const auto c = wintner_coefficients(g);
    const auto table = tabulate(g, 10000);
    for (std::uint64_t a = 1; a <= 10000; ++a) {
      const Value got = ramanujan_expand(c, BigNat(a));
      const Value want = table.kind() == Kind::ExactInt ? Value{table.exact_at(a)} : Value{table.real_at(a)};
      t.check(near(got, want, tol), [&] {
        return "D=" + std::to_string(g.cutoff()) + " a=" + std::to_string(a) + " " + show(got) + " vs " + show(want);
      });
    }
    for (const BigNat& a : corpus().big_shifts) {
      const Value got = ramanujan_expand(c, a);
      const Value want = evaluate_tds(g, a);
      t.check(near(got, want, tol), [&] { return "D=" + std::to_string(g.cutoff()) + " a=" + a.str(); });
    }
  };
  for (const auto& g : corpus().exact) run(g, 0.0);
  for (const auto& g : corpus().lambda) run(g, 1e-9);
  return t.done("100 random TDS, Lambda_N for N=2..100");
}

Outcome lucht() {
  Tally t;
  for (const auto& g : corpus().exact) {
    const auto back = lucht_invert(wintner_coefficients(g));
    t.check(back.kind() == Kind::ExactInt && back.exact_et() == g.exact_et(),
            [&] { return "exact D=" + std::to_string(g.cutoff()); });
  }
  for (const auto& g : corpus().lambda) {
    const auto back = lucht_invert(wintner_coefficients(g));
    for (std::uint64_t d = 1; d <= g.cutoff(); ++d) {
      t.check(std::fabs(back.et_real(d) - g.et_real(d)) <= 1e-12,
              [&] { return "Lambda_" + std::to_string(g.cutoff()) + " d=" + std::to_string(d); });
    }
  }
  return t.done();
}

Outcome closure() {
  Tally t;
  gen::Rng rng(1004);
  std::uint64_t held = 0;
  for (int i = 0; i < 100; ++i) {
    gen::TdsShape shape;
    shape.odd_only = i % 4 == 0;
    shape.squarefree_only = i % 4 == 1;
    const std::uint64_t D = gen::uniform(rng, 1, 100);
    const auto g = gen::exact_tds(rng, D, shape);
    const std::uint64_t N = i % 4 == 2 ? g.support().back() : gen::uniform(rng, 1, D);
    const auto mu = mobius_table(D);
    const std::vector<std::pair<std::string, std::function<bool(std::uint64_t)>>> sets = {
        {"d<=N", [N](std::uint64_t d) { return d <= N; }},
        {"squarefree", [&mu](std::uint64_t d) { return mu[d] != 0; }},
        {"odd", [](std::uint64_t d) { return d % 2 == 1; }}};
    for (const auto& [name, member] : sets) {
      const SupportInclusion inc = support_closure_check(g, member);
      if (inc.et_in_set) ++held;
      t.check(inc.et_in_set == inc.coeffs_in_set, [&, name = name] {
        return name + " D=" + std::to_string(D) + " et_in=" + std::to_string(inc.et_in_set);
      });
    }
  }
  return t.done(std::to_string(held) + " inclusions held");
}

Outcome half_range() {
  Tally t;
  gen::Rng rng(1005);
  const auto lambda = fn::von_mangoldt(primes(), 200);
  for (std::uint64_t N = 10; N <= 200; ++N) {
    t.check(half_range_identity_check(lambda, N), [&] { return "Lambda N=" + std::to_string(N); });
    const auto g = gen::exact_tds(rng, gen::uniform(rng, 1, 300));
    t.check(half_range_identity_check(tabulate(g, N), N), [&] { return "random TDS N=" + std::to_string(N); });
    t.check(half_range_identity_check(gen::exact_function(rng, N, -9, 9), N),
            [&] { return "random F N=" + std::to_string(N); });
  }
  return t.done();
}

Outcome truncation_differences() {
  Tally t;
  gen::Rng rng(1006);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t N = gen::uniform(rng, 2, 200);
    const std::uint64_t a = gen::uniform(rng, 1, 300);
    const std::uint64_t M = N + std::max<std::uint64_t>(a, 2);
    const auto f = gen::exact_function(rng, N, -9, 9);
    const auto g = gen::exact_function(rng, M, -9, 9);
    const auto gN = truncate(g, N);
    const auto brute = [&](std::uint64_t s) {
      std::int64_t full = 0;
      for (std::uint64_t n = 1; n <= N; ++n) full += f.exact_at(n) * g.exact_at(n + s);
      return full - std::get<std::int64_t>(correlate_direct(f, gN, N, BigNat(s)));
    };
    // g' by enumeration, independent of the library transform.
    const auto gp = [&](std::uint64_t n) {
      std::int64_t s = 0;
      for (auto d : oracle::divisors(n)) s += oracle::mobius(n / d) * g.exact_at(d);
      return s;
    };
    const std::string where = "N=" + std::to_string(N) + " a=" + std::to_string(a);
    t.check(truncation_difference(f, g, N, a) == Value{brute(a)}, [&] { return "tail " + where; });
    t.check(truncation_difference(f, g, N, 1) == Value{gp(N + 1) * f.exact_at(N)} && brute(1) == gp(N + 1) * f.exact_at(N),
            [&] { return "a=1 " + where; });
    const std::int64_t two = gp(N + 1) * f.exact_at(N - 1) + gp(N + 2) * f.exact_at(N);
    t.check(truncation_difference(f, g, N, 2) == Value{two} && brute(2) == two, [&] { return "a=2 " + where; });
  }
  return t.done("200 instances");
}

Outcome combinatorial_identities() {
  Tally t;
  t.check(universal_period(9).value == 105, [] { return "U_9=" + universal_period(9).value.str(); });
  gen::Rng rng(1007);
  for (std::uint64_t N : {9, 10, 15, 16, 21, 22}) {
    const auto id = combinatorial_identity_check(fn::odd_prime_log(primes(), N), lambda_truncated_odd(primes(), N), N, 1e-9);
    t.check(id.first && id.second, [&] { return "Artifact N=" + std::to_string(N); });
    for (int i = 0; i < 20; ++i) {
      const auto ts = gen::two_seasons(rng, primes(), N);
      const auto r = combinatorial_identity_check(ts.f, ts.g, N, 0.0);
      t.check(r.first && r.second && r.shift1 == r.huge1 && r.shift2 == r.huge2, [&] {
        return "random N=" + std::to_string(N) + " C1=" + show(r.shift1) + " CU1=" + show(r.huge1);
      });
    }
  }
  return t.done();
}

Outcome entanglement() {
  Tally t;
  gen::Rng rng(1008);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t N = gen::uniform(rng, 1, 1000);
    const std::uint64_t a = gen::uniform(rng, 1, 50);
    const auto F = gen::random_set(rng, N + a, 0.05 + 0.9 * (i % 10) / 10.0);
    const auto G = gen::random_set(rng, N + a, 0.05 + 0.9 * (i % 7) / 7.0);
    const auto [f, g] = entanglement_factors(F, G, N + a);
    const std::uint64_t count = a % 2 == 0 ? diophantine_count_even(F, G, N, a) : diophantine_count_odd(F, G, N, a);
    const Value direct = correlate_direct(f, g, N, a);
    t.check(direct == Value{static_cast<std::int64_t>(count)},
            [&] { return "N=" + std::to_string(N) + " a=" + std::to_string(a); });
  }
  for (std::uint64_t N = 3; N <= 1000; ++N) {
    for (std::uint64_t a = 1; a <= 100; ++a) {
      t.check(artifact_identity_check(primes(), N, a),
              [&] { return "artifact identity N=" + std::to_string(N) + " a=" + std::to_string(a); });
    }
  }
  return t.done("300 random set pairs, identity on N=3..1000 x a=1..100");
}

Outcome growth() {
  std::vector<std::uint64_t> shifts;
  for (std::uint64_t a = 2; a <= 100; a += 2) shifts.push_back(a);
  const ErrorBoundTable table = error_bound_check(primes(), {1000, 10000, 100000}, shifts);
  Tally t;
  for (const auto& e : table.entries) {
    t.check(e.normalized <= 3.0, [&] {
      return "N=" + std::to_string(e.N) + " a=" + std::to_string(e.a) + " normalized=" + std::to_string(e.normalized);
    });
  }
  return t.done("max normalized " + std::to_string(table.max_normalized));
}

Outcome singular() {
  Tally t;
  double worst = 0.0;
  for (std::uint64_t a : {2, 4, 6, 12, 30}) {
    const auto s = singular_series(primes(), a, 100000);
    worst = std::max(worst, std::fabs(s.truncated_sum - s.euler_product));
    t.check(std::fabs(s.truncated_sum - s.euler_product) <= 0.01, [&] {
      return "a=" + std::to_string(a) + " sum=" + std::to_string(s.truncated_sum) + " product=" + std::to_string(s.euler_product);
    });
  }
  for (std::uint64_t a = 1; a <= 100; ++a) {
    const auto s = singular_series(primes(), a, 100000);
    const auto k = singular_series(primes(), primes().kappa(a), 100000);
    t.check(std::fabs(s.truncated_sum - k.truncated_sum) <= 1e-12 && s.euler_product == k.euler_product,
            [&] { return "kappa a=" + std::to_string(a); });
    if (a % 2 == 1) {
      t.check(std::fabs(s.truncated_sum) <= 0.01 && std::fabs(s.euler_product) <= 0.01,
              [&] { return "odd a=" + std::to_string(a) + " sum=" + std::to_string(s.truncated_sum); });
    }
  }
  return t.done("worst even gap " + std::to_string(worst));
}

Outcome hl_ratio() {
  Tally t;
  std::ostringstream ratios;
  for (std::uint64_t a : {2, 4, 6}) {
    const double c = hl_correlation(primes(), 1'000'000, a);
    const double s = singular_series(primes(), a, 100000).euler_product;
    const double r = c / (s * 1e6);
    ratios << (a == 2 ? "" : " ") << "a=" << a << ":" << r;
    t.check(r >= 0.9 && r <= 1.1, [&] { return "a=" + std::to_string(a) + " ratio=" + std::to_string(r); });
  }
  return t.done("ratios " + ratios.str());
}

Outcome periodicity() {
  Tally t;
  gen::Rng rng(1012);
  gen::TdsShape shape;
  shape.odd_only = true;
  shape.squarefree_only = true;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t N = gen::uniform(rng, 3, 40);
    const auto g = gen::exact_tds(rng, N, shape);
    const auto f = gen::exact_function(rng, N, -9, 9);
    const BigNat U = universal_period(N).value;
    const BigNat W = wintner_period(g, N).value;
    std::vector<BigNat> shifts;
    for (int k = 0; k < 20; ++k) shifts.emplace_back(gen::uniform(rng, 1, 1'000'000));
    shifts.push_back(gen::bignat(rng, BigNat(1) << 100));
    t.check(verify_periodicity(f, g, N, U, shifts), [&] { return "C period U N=" + std::to_string(N); });
    t.check(verify_periodicity(f, g, N, W, shifts), [&] { return "C period W N=" + std::to_string(N); });
    for (const BigNat& m : shifts) {
      t.check(evaluate_tds(g, m) == evaluate_tds(g, m + W), [&] { return "g_N period N=" + std::to_string(N) + " m=" + m.str(); });
    }
  }
  return t.done("50 instances");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ramanujan orthogonality", orthogonality},
      {"fixed-length expansion", expansion},
      {"lucht round trip", lucht},
      {"support closure", closure},
      {"half-range identity", half_range},
      {"exact truncation differences", truncation_differences},
      {"combinatorial identities", combinatorial_identities},
      {"entanglement and artifact identities", entanglement},
      {"residual growth", growth},
      {"singular series", singular},
      {"hardy-littlewood ratio", hl_ratio},
      {"periodicity", periodicity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s [%2zu] %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
