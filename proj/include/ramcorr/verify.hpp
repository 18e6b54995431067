#pragma once

// Named invariant suites with a machine-readable verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramcorr/ramanujan.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

struct VerifyOptions {
  /// Extra TDS checked by the expansion, lucht, closure and periods suites.
  std::optional<TruncatedDivisorSum> tds;
  /// Claimed Wintner coefficients of `tds`; replaces the computed ones when given.
  std::optional<RamanujanCoefficients> coeffs;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-9;
};

struct VerifyReport {
  std::string suite;
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<nlohmann::json> failures;  // first few counterexamples, located

  nlohmann::json to_json() const;
};

/// orthogonality, expansion, lucht, closure, periods, identities, entanglement, models.
const std::vector<std::string>& verify_suite_names();

/// Throws invalid_argument for an unknown suite name.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace ramcorr
