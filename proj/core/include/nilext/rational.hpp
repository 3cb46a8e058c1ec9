#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nilext {

// Exact rational scalar. gmpxx keeps every arithmetic result canonical
// (lowest terms, positive denominator); values built from strings go through
// parse_rat, which canonicalizes.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rat parse_rat(std::string_view text);

/// Always "p/q" with q >= 1, lowest terms.
std::string to_fraction_string(const Rat& r);

/// "p" for integers, "p/q" otherwise. Used for human-facing output.
std::string to_display_string(const Rat& r);

/// Bits in numerator plus bits in denominator; pivot selection heuristic.
std::size_t bit_size(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
Rat dot(const Vec& a, const Vec& b);

}  // namespace nilext
