#include "ramcorr/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ramcorr/errors.hpp"

namespace ramcorr {

std::string format_real(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string format_value(const Value& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
  return format_real(std::get<double>(v));
}

namespace {

std::string full_precision(double x) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return s.str();
}

struct Header {
  std::uint64_t cutoff = 0;
  Kind kind = Kind::ExactInt;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_u64(const std::string& text, std::size_t line) {
  if (text.empty() || text.size() > 19 ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(line, "expected a natural number, got '" + text + "'");
  }
  return std::stoull(text);
}

std::int64_t parse_i64(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + text + "'");
  }
  if (used != text.size()) fail(line, "expected an integer, got '" + text + "'");
  return v;
}

double parse_double(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(line, "expected a real, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) fail(line, "expected a finite real, got '" + text + "'");
  return v;
}

BigNat parse_bigint(const std::string& text, std::size_t line) {
  const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
  if (text.size() == start ||
      !std::all_of(text.begin() + start, text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(line, "expected an integer, got '" + text + "'");
  }
  return BigNat(text);
}

Rational parse_rational(const std::string& text, std::size_t line) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text, line));
  const BigNat num = parse_bigint(text.substr(0, slash), line);
  const BigNat den = parse_bigint(text.substr(slash + 1), line);
  if (den <= 0) fail(line, "denominator must be positive");
  return Rational(num, den);
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

Header read_header(std::istream& in, std::size_t& lineno) {
  std::string line;
  if (!next_content_line(in, line, lineno)) fail(lineno, "missing header");
  std::istringstream fields(line);
  std::string tok;
  Header h;
  bool have_cutoff = false;
  bool have_kind = false;
  while (fields >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) fail(lineno, "header token '" + tok + "' is not key=value");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "cutoff") {
      h.cutoff = parse_u64(val, lineno);
      have_cutoff = true;
    } else if (key == "kind") {
      try {
        h.kind = parse_kind(val);
      } catch (const std::exception&) {
        fail(lineno, "unknown kind '" + val + "'");
      }
      have_kind = true;
    } else {
      fail(lineno, "unknown header key '" + key + "'");
    }
  }
  if (!have_cutoff || !have_kind) fail(lineno, "header needs cutoff= and kind=");
  if (h.cutoff == 0) fail(lineno, "cutoff must be >= 1");
  if (h.cutoff > (std::uint64_t{1} << 28)) fail(lineno, "cutoff too large");
  return h;
}

// Reads "index<ws>value" rows; calls store(index, value_text, lineno).
template <typename Store>
void read_rows(std::istream& in, std::size_t& lineno, std::uint64_t cutoff, Store store) {
  std::string line;
  std::uint64_t last = 0;
  while (next_content_line(in, line, lineno)) {
    std::istringstream fields(line);
    std::string idx;
    std::string val;
    std::string extra;
    if (!(fields >> idx >> val) || (fields >> extra)) fail(lineno, "expected 'index value'");
    const std::uint64_t d = parse_u64(idx, lineno);
    if (d == 0 || d > cutoff) fail(lineno, "index " + idx + " outside [1.." + std::to_string(cutoff) + "]");
    if (d <= last) fail(lineno, "indices must be strictly increasing");
    last = d;
    store(d, val, lineno);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

void write_tds(std::ostream& out, const TruncatedDivisorSum& g) {
  out << "cutoff=" << g.cutoff() << " kind=" << to_string(g.kind()) << '\n';
  for (std::uint64_t d : g.support()) {
    out << d << '\t';
    if (g.kind() == Kind::ExactInt) {
      out << g.exact_et()[d - 1];
    } else {
      out << full_precision(g.real_et()[d - 1]);
    }
    out << '\n';
  }
}

TruncatedDivisorSum read_tds(std::istream& in) {
  std::size_t lineno = 0;
  const Header h = read_header(in, lineno);
  if (h.kind == Kind::ExactInt) {
    std::vector<std::int64_t> et(h.cutoff, 0);
    read_rows(in, lineno, h.cutoff, [&](std::uint64_t d, const std::string& v, std::size_t l) {
      et[d - 1] = parse_i64(v, l);
    });
    return TruncatedDivisorSum::exact(std::move(et));
  }
  std::vector<double> et(h.cutoff, 0.0);
  read_rows(in, lineno, h.cutoff, [&](std::uint64_t d, const std::string& v, std::size_t l) {
    et[d - 1] = parse_double(v, l);
  });
  return TruncatedDivisorSum::real(std::move(et));
}

TruncatedDivisorSum read_tds_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_tds(in);
}

void write_coefficients(std::ostream& out, const RamanujanCoefficients& coeffs) {
  out << "cutoff=" << coeffs.cutoff() << " kind=" << to_string(coeffs.kind()) << '\n';
  for (std::uint64_t q : coeffs.support()) {
    out << q << '\t';
    if (coeffs.kind() == Kind::ExactInt) {
      const Rational& r = coeffs.exact_values()[q - 1];
      out << boost::multiprecision::numerator(r);
      if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
    } else {
      out << full_precision(coeffs.real_values()[q - 1]);
    }
    out << '\n';
  }
}

RamanujanCoefficients read_coefficients(std::istream& in) {
  std::size_t lineno = 0;
  const Header h = read_header(in, lineno);
  if (h.kind == Kind::ExactInt) {
    std::vector<Rational> c(h.cutoff, Rational(0));
    read_rows(in, lineno, h.cutoff, [&](std::uint64_t q, const std::string& v, std::size_t l) {
      c[q - 1] = parse_rational(v, l);
    });
    return RamanujanCoefficients::from_exact(std::move(c));
  }
  std::vector<double> c(h.cutoff, 0.0);
  read_rows(in, lineno, h.cutoff, [&](std::uint64_t q, const std::string& v, std::size_t l) {
    c[q - 1] = parse_double(v, l);
  });
  return RamanujanCoefficients::from_real(std::move(c));
}

RamanujanCoefficients read_coefficients_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_coefficients(in);
}

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile) {
  out << "a,value\n";
  for (const ProfileEntry& e : profile.entries()) {
    out << e.shift << ',' << format_value(e.value) << '\n';
  }
}

nlohmann::json profile_to_json(const CorrelationProfile& profile) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ProfileEntry& e : profile.entries()) {
    nlohmann::json row;
    row["a"] = e.shift.str();
    if (std::holds_alternative<std::int64_t>(e.value)) {
      row["value"] = std::get<std::int64_t>(e.value);
    } else {
      // Round through the 12-digit text form so JSON and CSV agree.
      row["value"] = std::stod(format_real(std::get<double>(e.value)));
    }
    rows.push_back(std::move(row));
  }
  return {{"N", profile.length()}, {"f", profile.f_id()}, {"g", profile.g_id()}, {"rows", rows}};
}

BigNat parse_bignat(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected a natural number, got '" + text + "'");
  }
  return BigNat(text);
}

}  // namespace ramcorr
