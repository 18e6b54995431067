// ramcorr: truncated divisor sums, shifted correlations, invariant suites and
// Hardy-Littlewood model tables from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramcorr/arith_core.hpp"
#include "ramcorr/config.hpp"
#include "ramcorr/correlations.hpp"
#include "ramcorr/errors.hpp"
#include "ramcorr/hlmodels.hpp"
#include "ramcorr/io.hpp"
#include "ramcorr/ramanujan.hpp"
#include "ramcorr/transforms.hpp"
#include "ramcorr/twoseasons.hpp"
#include "ramcorr/verify.hpp"

namespace {

using namespace ramcorr;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

BigNat parse_big(const std::string& text, const std::string& what) {
  try {
    return parse_bignat(text);
  } catch (const ParseError&) {
    throw UsageError(what + ": expected a natural number, got '" + text + "'");
  }
}

std::uint64_t parse_natural(const std::string& text, const std::string& what) {
  const BigNat v = parse_big(text, what);
  if (v > BigNat(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw UsageError(what + ": " + text + " is too large");
  }
  return v.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_natural(tok, what));
  return out;
}

/// Comma-separated tokens: k, lo:hi, U+k (U the universal period of N).
std::vector<BigNat> parse_shifts(const std::string& text, std::uint64_t N) {
  if (text.empty()) throw UsageError("--shifts: empty list");
  std::vector<BigNat> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok.rfind("U+", 0) == 0) {
      if (N < 2) throw UsageError("--shifts: U+k needs N >= 2");
      out.push_back(universal_period(N).value + parse_big(tok.substr(2), "--shifts"));
    } else if (const auto colon = tok.find(':'); colon != std::string::npos) {
      const std::uint64_t lo = parse_natural(tok.substr(0, colon), "--shifts");
      const std::uint64_t hi = parse_natural(tok.substr(colon + 1), "--shifts");
      if (hi < lo) throw UsageError("--shifts: empty range " + tok);
      if (hi - lo >= 1'000'000) throw UsageError("--shifts: range " + tok + " too long");
      for (std::uint64_t a = lo; a <= hi; ++a) out.emplace_back(a);
    } else {
      out.push_back(parse_big(tok, "--shifts"));
    }
  }
  for (const BigNat& a : out) {
    if (a == 0) throw UsageError("--shifts: shifts start at 1, got 0");
  }
  return out;
}

/// Named functions tabulated on [1..M].
TabulatedFunction named_function(const std::string& name, const PrimeTable& primes,
                                 std::uint64_t M) {
  if (name == "lambda") return fn::von_mangoldt(primes, M);
  if (name == "mobius") return fn::mobius(primes, M);
  if (name == "mobius_squared") return fn::mobius_squared(primes, M);
  if (name == "phi") return fn::euler_phi(primes, M);
  if (name == "unit") return fn::unit(M);
  if (name == "identity") return fn::identity(M);
  if (name == "odd_primes_log") return fn::odd_prime_log(primes, M);
  if (name.rfind("indicator:", 0) == 0) {
    const std::string set = name.substr(10);
    try {
      const MembershipSet S = MembershipSet::named(set, M);
      return fn::indicator(M, [&S](std::uint64_t n) { return S.contains(n); });
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown set '" + set + "' (primes, odd_primes, squares, odd, all, empty)");
    }
  }
  throw UsageError("unknown function '" + name +
                   "' (lambda, mobius, mobius_squared, phi, unit, identity, odd_primes_log, "
                   "indicator:<set>)");
}

/// A TDS file path, lambdaN (the ODD-lifted truncation of Lambda), lambdaN_plain
/// (the plain truncation), or any named function truncated at N.
TruncatedDivisorSum resolve_tds(const std::string& spec, const PrimeTable& primes,
                                std::uint64_t N) {
  if (std::filesystem::is_regular_file(spec)) return read_tds_file(spec);
  if (spec == "lambdaN") return lambda_truncated_odd(primes, N);
  if (spec == "lambdaN_plain") return lambda_truncated(primes, N);
  return truncate(named_function(spec, primes, N), N);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double rounded(double x) { return std::stod(format_real(x)); }

// ---------------------------------------------------------------------------

struct TransformArgs {
  std::string fn;
  std::string tds;
  std::uint64_t N = 0;
};

int cmd_transform(const RunConfig& cfg, const TransformArgs& args) {
  if (args.fn.empty() == args.tds.empty()) throw UsageError("give exactly one of --fn, --tds");
  TruncatedDivisorSum g;
  if (!args.tds.empty()) {
    g = read_tds_file(args.tds);
    if (args.N != 0) g = truncate(g, args.N);
  } else {
    if (args.N == 0) throw UsageError("--N must be >= 1");
    cfg.require_sieve(args.N);
    const PrimeTable primes(std::max<std::uint64_t>(args.N, 2));
    g = truncate(named_function(args.fn, primes, args.N), args.N);
  }
  Output out(cfg.output_path);
  write_tds(out.stream(), g);
  return kOk;
}

struct CorrelateArgs {
  std::string f;
  std::string g;
  std::uint64_t N = 0;
  std::string shifts;
  std::string method = "direct";
};

int cmd_correlate(const RunConfig& cfg, const CorrelateArgs& args) {
  if (args.N == 0) throw UsageError("--N must be >= 1");
  std::vector<BigNat> shifts = parse_shifts(args.shifts, args.N);
  cfg.require_sieve(args.N);
  const PrimeTable primes(std::max<std::uint64_t>(args.N, 2));
  const TabulatedFunction f = named_function(args.f, primes, args.N);
  const TruncatedDivisorSum g = resolve_tds(args.g, primes, args.N);

  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  CorrelationProfile profile(args.N, args.f, args.g);
  if (args.method == "direct") {
    profile = correlation_profile(f, g, args.N, shifts, args.f, args.g);
  } else if (args.method == "expansion") {
    const RamanujanCoefficients coeffs = wintner_coefficients(g);
    for (const BigNat& a : shifts) profile.add(a, correlate_expansion(f, coeffs, args.N, a));
  } else {
    throw UsageError("--method must be direct or expansion");
  }

  Output out(cfg.output_path);
  if (cfg.output_format == OutputFormat::Json) {
    out.stream() << profile_to_json(profile).dump(2) << '\n';
  } else {
    write_profile_csv(out.stream(), profile);
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::string tds;
  std::string coeffs;
  std::uint64_t seed = VerifyOptions{}.seed;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& args) {
  const auto& names = verify_suite_names();
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = names;
  } else if (std::find(names.begin(), names.end(), args.suite) != names.end()) {
    suites.push_back(args.suite);
  } else {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown suite '" + args.suite + "' (" + known + ", all)");
  }
  VerifyOptions options;
  options.seed = args.seed;
  options.tolerance = cfg.tolerance_real;
  if (!args.tds.empty()) options.tds = read_tds_file(args.tds);
  if (!args.coeffs.empty()) {
    if (args.tds.empty()) throw UsageError("--coeffs needs --tds");
    options.coeffs = read_coefficients_file(args.coeffs);
  }

  nlohmann::json verdict;
  verdict["pass"] = true;
  verdict["suites"] = nlohmann::json::array();
  for (const std::string& s : suites) {
    const VerifyReport report = run_verify_suite(s, options);
    verdict["suites"].push_back(report.to_json());
    verdict["pass"] = verdict["pass"].get<bool>() && report.pass;
  }
  Output out(cfg.output_path);
  out.stream() << verdict.dump(2) << '\n';
  return verdict["pass"].get<bool>() ? kOk : kVerifyFailed;
}

struct HlArgs {
  std::string N_list;
  std::string a_list;
  std::uint64_t Q = 100000;
};

int cmd_hl(const RunConfig& cfg, const HlArgs& args) {
  const std::vector<std::uint64_t> Ns = parse_list(args.N_list, "--N-list");
  const std::vector<std::uint64_t> as = parse_list(args.a_list, "--a-list");
  if (Ns.empty() || as.empty()) throw UsageError("--N-list and --a-list must be non-empty");
  for (std::uint64_t N : Ns) {
    if (N < 3) throw UsageError("--N-list: N must be >= 3");
  }
  for (std::uint64_t a : as) {
    if (a == 0) throw UsageError("--a-list: shifts start at 1, got 0");
  }
  if (args.Q < 2) throw UsageError("--Q must be >= 2");
  const std::uint64_t top = std::max(*std::max_element(Ns.begin(), Ns.end()) +
                                         *std::max_element(as.begin(), as.end()),
                                     args.Q);
  cfg.require_sieve(top);
  const PrimeTable primes(top);

  std::vector<ModelComparison> tables;
  for (std::uint64_t N : Ns) tables.push_back(model_chain(primes, N, as));
  std::vector<SingularSeriesValue> series;
  for (std::uint64_t a : as) series.push_back(singular_series(primes, a, args.Q));

  Output out(cfg.output_path);
  std::ostream& os = out.stream();
  if (cfg.output_format == OutputFormat::Json) {
    nlohmann::json doc;
    doc["models"] = nlohmann::json::array();
    for (const ModelComparison& t : tables) {
      for (const ModelRow& r : t.rows) {
        doc["models"].push_back({{"N", t.N},
                                 {"a", r.a},
                                 {"hl", rounded(r.hl)},
                                 {"cut", rounded(r.cut)},
                                 {"cut_odd", rounded(r.cut_odd)},
                                 {"odd_n_cut_odd", rounded(r.odd_n_cut_odd)},
                                 {"odd_n_cut", rounded(r.odd_n_cut)},
                                 {"artifact", rounded(r.artifact)},
                                 {"residual", rounded(r.residual)},
                                 {"normalized", r.normalized ? nlohmann::json(rounded(*r.normalized))
                                                             : nlohmann::json(nullptr)}});
      }
    }
    doc["singular_series"] = nlohmann::json::array();
    for (const SingularSeriesValue& s : series) {
      doc["singular_series"].push_back({{"a", s.a},
                                        {"truncated_sum", rounded(s.truncated_sum)},
                                        {"euler_product", rounded(s.euler_product)},
                                        {"Q", s.truncation_Q}});
    }
    os << doc.dump(2) << '\n';
    return kOk;
  }
  bool header = true;
  for (const ModelComparison& t : tables) {
    write_model_csv(os, t, header);
    header = false;
  }
  // Second gnuplot data block.
  os << "\n\na,truncated_sum,euler_product,Q\n";
  for (const SingularSeriesValue& s : series) {
    os << s.a << ',' << format_real(s.truncated_sum) << ',' << format_real(s.euler_product) << ','
       << s.truncation_Q << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan expansions, truncated divisor sums and shifted correlations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string sieve_flag;
  std::string tolerance_flag;
  std::string format_flag;
  std::string out_flag;
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--sieve-limit", sieve_flag, "largest N + a the run may sieve");
  app.add_option("--tolerance", tolerance_flag, "absolute tolerance per summand for Real values");
  app.add_option("--format", format_flag, "csv or json");
  app.add_option("--out", out_flag, "output file (default stdout)");

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "write the truncated divisor sum of a function");
  transform->add_option("--fn", targs.fn, "lambda, mobius, mobius_squared, phi, unit, identity, "
                                          "odd_primes_log, indicator:<set>");
  transform->add_option("--tds", targs.tds, "TDS file to re-truncate");
  transform->add_option("--N", targs.N, "truncation point");

  CorrelateArgs cargs;
  auto* correlate = app.add_subcommand("correlate", "shift profile of sum_{n<=N} f(n) g(n+a)");
  correlate->add_option("--f", cargs.f, "named function")->required();
  correlate->add_option("--g", cargs.g, "TDS file, lambdaN, lambdaN_plain or named function")
      ->required();
  correlate->add_option("--N", cargs.N, "correlation length")->required();
  correlate->add_option("--shifts", cargs.shifts, "list of k, lo:hi, U+k")->required();
  correlate->add_option("--method", cargs.method, "direct or expansion");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "run an invariant suite, JSON verdict");
  verify->add_option("suite", vargs.suite, "suite name or all")->required();
  verify->add_option("--tds", vargs.tds, "extra TDS fixture");
  verify->add_option("--coeffs", vargs.coeffs, "claimed coefficients of the fixture");
  verify->add_option("--seed", vargs.seed, "random seed");

  HlArgs hargs;
  auto* hl = app.add_subcommand("hl", "model comparison table and singular series");
  hl->add_option("--N-list", hargs.N_list, "comma-separated lengths")->required();
  hl->add_option("--a-list", hargs.a_list, "comma-separated shifts")->required();
  hl->add_option("--Q", hargs.Q, "singular series truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    apply_environment(cfg);
    if (!sieve_flag.empty()) cfg.set("sieve_limit", sieve_flag);
    if (!tolerance_flag.empty()) cfg.set("tolerance_real", tolerance_flag);
    if (!format_flag.empty()) cfg.set("output_format", format_flag);
    if (!out_flag.empty()) cfg.set("output_path", out_flag);
    cfg.validate();

    if (*transform) return cmd_transform(cfg, targs);
    if (*correlate) return cmd_correlate(cfg, cargs);
    if (*verify) return cmd_verify(cfg, vargs);
    if (*hl) return cmd_hl(cfg, hargs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
