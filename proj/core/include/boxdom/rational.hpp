#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "boxdom/error.hpp"

namespace boxdom {

// Exact rational arithmetic for every bound decision; no floating point is
// allowed anywhere near a comparison.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_ceil(const Rat& r) {
  Int num = numerator(r), den = denominator(r);  // den > 0 by normalization
  Int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

inline Int rat_floor(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// "p/q" with the "/q" dropped for integers; the fixed formatting used in CSV
// and JSON reports.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Accepts "p", "p/q", with optional sign on p.
inline Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw ArgumentError("zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ArgumentError("not a rational: " + text);
  }
}

}  // namespace boxdom
