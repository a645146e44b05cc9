#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pricing {

/// Exact rational number. All money and value arithmetic in this project is
/// exact; ties (price equal to value) are semantically load-bearing, so no
/// floating point is allowed anywhere near a comparison.
///
/// GMP's mpq_class already provides canonical reduced form and exact
/// comparisons; we alias it and add the parsing/formatting conventions used
/// by the file formats ("num/den" or decimal strings, never binary floats).
using Rat = mpq_class;

/// Parses "17", "-3", "3/2" or a decimal string like "1.5" into an exact
/// rational. Throws Error(parse_error) on malformed input.
Rat rat_parse(std::string_view text);

/// Canonical string form: "num" when the denominator is 1, else "num/den".
std::string rat_str(const Rat& value);

/// Decimal approximation for CSV convenience columns. Never used in logic.
double rat_approx(const Rat& value);

inline Rat rat_int(long v) { return Rat(v); }

/// Exact harmonic number H_n = sum_{i=1..n} 1/i.
Rat harmonic_number(int n);

}  // namespace pricing
