#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace skeinalt {

// Exact rational arithmetic. Rotation numbers of whole smoothings always land
// in (1/2)Z; per-strand values have denominator dividing 2k.
using Rational = boost::rational<std::int64_t>;

inline bool is_half_integer(const Rational& r) {
  return r.denominator() == 1 || r.denominator() == 2;
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace skeinalt
