#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sperner {

/// Exact rational number. All geometry in this library (box endpoints,
/// dyadic cube extents, arrangement candidates, volumes) is done in exact
/// arithmetic; endpoint openness decisions are never approximated.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" or "p/q", denominator positive.
std::string rat_to_string(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

}  // namespace sperner
