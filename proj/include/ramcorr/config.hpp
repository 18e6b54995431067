#pragma once

// Run configuration: key=value file, RAMCORR_* environment, then flags.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace ramcorr {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::uint64_t sieve_limit = 2'000'000;
  double tolerance_real = 1e-9;
  OutputFormat output_format = OutputFormat::Csv;
  std::string output_path;  // empty: stdout

  /// Applies one key (sieve_limit, tolerance_real, output_format, output_path).
  /// Throws invalid_argument for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  /// sieve_limit >= 2, tolerance_real > 0.
  void validate() const;
  /// Throws invalid_argument naming the needed limit when top exceeds the sieve.
  void require_sieve(std::uint64_t top) const;
};

/// Lines "key = value"; '#' starts a comment.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// RAMCORR_SIEVE_LIMIT, RAMCORR_TOLERANCE_REAL, RAMCORR_OUTPUT_FORMAT, RAMCORR_OUTPUT_PATH.
/// The lookup is injectable for tests.
void apply_environment(RunConfig& cfg,
                       const std::function<std::optional<std::string>(const std::string&)>& getenv);
void apply_environment(RunConfig& cfg);

OutputFormat parse_output_format(const std::string& text);

}  // namespace ramcorr
