#include "ramcorr/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace ramcorr {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

constexpr const char* kKeys[] = {"sieve_limit", "tolerance_real", "output_format", "output_path"};

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("output_format must be csv or json, got '" + text + "'");
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "sieve_limit") {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || value[0] == '-') {
      throw std::invalid_argument("sieve_limit must be a natural number, got '" + value + "'");
    }
    sieve_limit = v;
  } else if (key == "tolerance_real") {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw std::invalid_argument("tolerance_real must be a real number, got '" + value + "'");
    }
    tolerance_real = v;
  } else if (key == "output_format") {
    output_format = parse_output_format(value);
  } else if (key == "output_path") {
    output_path = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (sieve_limit < 2) throw std::invalid_argument("sieve_limit must be >= 2");
  if (sieve_limit > (std::uint64_t{1} << 32)) throw std::invalid_argument("sieve_limit too large");
  if (!(tolerance_real > 0.0) || !std::isfinite(tolerance_real)) {
    throw std::invalid_argument("tolerance_real must be > 0");
  }
}

void RunConfig::require_sieve(std::uint64_t top) const {
  if (top > sieve_limit) {
    throw std::invalid_argument("sieve_limit " + std::to_string(sieve_limit) +
                                " too small: required limit " + std::to_string(top));
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void apply_environment(RunConfig& cfg,
                       const std::function<std::optional<std::string>(const std::string&)>& getenv) {
  for (const char* key : kKeys) {
    std::string var = "RAMCORR_";
    for (const char* c = key; *c != '\0'; ++c) var += static_cast<char>(std::toupper(*c));
    if (auto v = getenv(var)) cfg.set(key, *v);
  }
}

void apply_environment(RunConfig& cfg) {
  apply_environment(cfg, [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  });
}

}  // namespace ramcorr
