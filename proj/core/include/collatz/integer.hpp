// integer.hpp — arbitrary-precision integer/rational aliases and small helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace collatz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_even(const Int& v) { return (v & 1) == 0; }
inline bool is_odd(const Int& v) { return (v & 1) != 0; }

// Mathematical residue in [0, m), m > 0, for either sign of v.
Int floor_mod(const Int& v, const Int& m);

// num/den in lowest terms with a positive denominator; throws on den == 0.
Rat make_rational(const Int& num, const Int& den);

// 3^threes / 2^twos, already in lowest terms.
Rat pow3_over_pow2(std::uint64_t threes, std::uint64_t twos);

// "p/q" with q > 0, e.g. "9/4", "0/1", "-5/4".
std::string rational_str(const Rat& r);

// Parses an optionally signed decimal integer; throws std::invalid_argument.
Int parse_int(const std::string& text);

// Parses "p", "p/q", or "-p/q"; throws std::invalid_argument.
Rat parse_rational(const std::string& text);

}  // namespace collatz
