#pragma once

// Text formats: truncated divisor sums, Wintner coefficients and correlation
// profiles. Reals go out with 12 significant digits except inside TDS and
// coefficient files, which keep 17 so that a reload is lossless.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ramcorr/correlations.hpp"
#include "ramcorr/ramanujan.hpp"
#include "ramcorr/transforms.hpp"

namespace ramcorr {

/// 12 significant digits, shortest of fixed/scientific.
std::string format_real(double x);
/// Integers in full decimal, reals via format_real.
std::string format_value(const Value& v);

/// Header "cutoff=D kind=ExactInt|Real", then "d<TAB>g'(d)" for every nonzero entry.
void write_tds(std::ostream& out, const TruncatedDivisorSum& g);
/// Throws ParseError with a line number on malformed input.
TruncatedDivisorSum read_tds(std::istream& in);
TruncatedDivisorSum read_tds_file(const std::string& path);

/// Same layout, values are p/q rationals for ExactInt.
void write_coefficients(std::ostream& out, const RamanujanCoefficients& coeffs);
RamanujanCoefficients read_coefficients(std::istream& in);
RamanujanCoefficients read_coefficients_file(const std::string& path);

/// "a,value" rows after a header line.
void write_profile_csv(std::ostream& out, const CorrelationProfile& profile);
/// Shifts as decimal strings (they may exceed 64 bits).
nlohmann::json profile_to_json(const CorrelationProfile& profile);

/// Decimal big natural; ParseError on anything else.
BigNat parse_bignat(const std::string& text);

}  // namespace ramcorr
