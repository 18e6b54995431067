#pragma once

// Two-Seasons axiom checks, the parity-entangled evaluators, the Diophantine
// counts they encode, and the huge-shift combinatorial identities.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

struct AxiomResult {
  int id = 0;
  bool pass = false;
  std::string evidence;
};

struct AxiomReport {
  std::array<AxiomResult, 5> axioms;
  bool overall = false;

  nlohmann::json to_json() const;
};

/// Axioms (0)-(4) for the correlation of f with the shift-carrying TDS g.
/// Fairness holds structurally: both factors are fixed, shift-independent tables.
AxiomReport check_axioms(const PrimeTable& primes, const TabulatedFunction& f,
                         const TruncatedDivisorSum& g, std::uint64_t N, std::uint64_t Q);
/// g given by its values; g' is taken over the whole tabulation of g_source.
AxiomReport check_axioms(const PrimeTable& primes, const TabulatedFunction& f,
                         const TabulatedFunction& g_source, std::uint64_t N, std::uint64_t Q);

enum class Parity { Even, Odd };

struct EntangledValue {
  Value value;
  Parity branch;
};

/// a even: sum_{2<p<=N} f(p) g(p+a).
/// a odd:  sum_j sum_{2<p<=N, 2^j || p+a} f(p) g((p+a)/2^j).
/// Throws PreconditionError unless (f, g, N, Q = N) passes check_axioms.
EntangledValue entangled_correlation(const PrimeTable& primes, const TabulatedFunction& f,
                                     const TruncatedDivisorSum& g, std::uint64_t N,
                                     std::uint64_t a);

/// Explicit membership bitset over [1..limit].
class MembershipSet {
 public:
  MembershipSet() = default;
  explicit MembershipSet(std::vector<bool> bits) : bits_(std::move(bits)) {}
  static MembershipSet from_predicate(std::uint64_t limit,
                                      const std::function<bool(std::uint64_t)>& member);
  /// primes, odd_primes, squares, odd, all, empty.
  static MembershipSet named(const std::string& name, std::uint64_t limit);

  std::uint64_t limit() const { return bits_.size(); }
  bool contains(std::uint64_t n) const;

 private:
  std::vector<bool> bits_;  // bits_[n-1]
};

/// #{n <= N odd : n in F, n + a in G}, a even.
std::uint64_t diophantine_count_even(const MembershipSet& F, const MembershipSet& G,
                                     std::uint64_t N, std::uint64_t a);
/// sum_{1 <= j <= log2(N+a)} #{n <= N odd : n in F, (n+a)/2^j odd and in G}, a odd.
std::uint64_t diophantine_count_odd(const MembershipSet& F, const MembershipSet& G,
                                    std::uint64_t N, std::uint64_t a);

/// The two "easy" factors f = 1_F . 1_ODD and g = 1_G^ODD, tabulated on [1..M].
std::pair<TabulatedFunction, TabulatedFunction> entanglement_factors(const MembershipSet& F,
                                                                     const MembershipSet& G,
                                                                     std::uint64_t M);

struct CombinatorialIdentity {
  Value shift1;     // C(N, 1)
  Value huge1;      // C(N, U_N + 1)
  Value shift2;     // C(N, 2)
  Value huge2;      // C(N, U_N + 2)
  bool first = false;
  bool second = false;
};

/// C_{f,g}(N,1) = C_{f,g_N}(N,U_N+1) and C_{f,g}(N,2) = C_{f,g_N}(N,U_N+2); the small
/// shifts use g itself (tabulated to N + 2), the huge ones its N-truncation.
CombinatorialIdentity combinatorial_identity_check(const TabulatedFunction& f,
                                                   const TabulatedFunction& g_source,
                                                   std::uint64_t N, double tol = 1e-9);
/// g already a truncated divisor sum: both sides use g.
CombinatorialIdentity combinatorial_identity_check(const TabulatedFunction& f,
                                                   const TruncatedDivisorSum& g,
                                                   std::uint64_t N, double tol = 1e-9);

}  // namespace ramcorr
