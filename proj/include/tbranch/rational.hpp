#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace tbranch {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "num/den" or a plain integer.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace tbranch
