#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "latdec/error.hpp"

namespace latdec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. All arithmetic in the library is exact; nothing is
/// ever rounded unless explicitly asked for via to_decimal_string.
using Rat = boost::multiprecision::cpp_rational;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal ("0.89" becomes 89/100
/// exactly). An optional leading sign is allowed.
inline Rat parse_rational(std::string_view text) {
  using detail::all_digits;
  std::string_view s = detail::trim(text);
  if (s.empty()) fail(Errc::invalid_rational, "empty rational literal");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Errc::invalid_rational, "bad fraction '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) fail(Errc::invalid_rational, "zero denominator in '" + std::string(text) + "'");
    value = Rat(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      fail(Errc::invalid_rational, "bad decimal '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt f = frac.empty() ? BigInt(0) : BigInt{std::string(frac)};
    BigInt scaled = w * scale + f;
    value = Rat(scaled, scale);
  } else {
    if (!all_digits(s)) fail(Errc::invalid_rational, "bad integer '" + std::string(text) + "'");
    BigInt n{std::string(s)};
    value = Rat(n);
  }
  return negative ? Rat(-value) : value;
}

/// "p/q" in lowest terms, or a plain integer when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.str(); }

/// Rounded decimal expansion with the given number of fraction digits
/// (round half away from zero). Only for display; never fed back into
/// computations.
inline std::string to_decimal_string(const Rat& r, unsigned digits) {
  BigInt num = boost::multiprecision::abs(numerator(r));
  BigInt den = denominator(r);
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;
  std::string body = q.str();
  std::string out;
  if (r < 0 && q != 0) out += '-';
  if (digits == 0) {
    out += body;
    return out;
  }
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  out += body.substr(0, body.size() - digits);
  out += '.';
  out += body.substr(body.size() - digits);
  return out;
}

}  // namespace latdec
