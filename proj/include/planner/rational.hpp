#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace planner {

// All decision arithmetic in this library is exact. Rat is GMP's canonical
// rational; helpers below cover the text formats the tools read and write.
using Rat = mpq_class;

// Accepts "p/q", plain integers and decimal strings ("8", "-3/2", "0.01").
// Decimals are converted exactly (0.01 -> 1/100). Throws Error(parse).
Rat parse_rat(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& v);

// Fixed-point decimal with the given number of fractional digits,
// rounded half away from zero. Used only for CSV output.
std::string rat_decimal(const Rat& v, int digits = 12);

Rat rat_pow(const Rat& base, unsigned long exp);

std::optional<long long> to_i64(const mpz_class& z);

}  // namespace planner
