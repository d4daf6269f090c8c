#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kempf {

// All arithmetic in this library is exact. Semistability and stratum
// assignment are sign decisions; no floating point appears anywhere in a
// decision path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

/// The integer value of an integral rational; throws otherwise.
inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::domain_error("expected an integral value, got " + q.str());
    return numerator(q);
}

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

inline std::string rat_str(const Rat& q) { return q.str(); }

}  // namespace kempf
