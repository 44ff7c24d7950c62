#ifndef RAAG_RATIONAL_HPP_
#define RAAG_RATIONAL_HPP_

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "error.hpp"

namespace raag {

// Compare with Rational operands only: under C++20 rewritten comparisons,
// boost's mixed `rational == int` recurses without end.
using Rational = boost::rational<std::int64_t>;

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  auto read = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(read(text));
  }
  std::int64_t den = read(text.substr(slash + 1));
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(read(text.substr(0, slash)), den);
}

inline std::string to_string(Rational const& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Smallest integer >= r.
inline std::int64_t ceil(Rational const& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (q * r.denominator() < r.numerator()) {
    ++q;
  }
  return q;
}

// Largest integer <= r.
inline std::int64_t floor(Rational const& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (q * r.denominator() > r.numerator()) {
    --q;
  }
  return q;
}

}  // namespace raag

#endif  // RAAG_RATIONAL_HPP_
