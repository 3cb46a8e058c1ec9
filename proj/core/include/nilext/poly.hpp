#pragma once

#include "nilext/matrix.hpp"
#include "nilext/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

namespace nilext {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// Trailing zeros are stripped so the leading coefficient is nonzero
/// (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly x();
  /// x - root
  static Poly linear(const Rat& root);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  const Vec& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rat operator()(const Rat& at) const;
  /// Horner evaluation at a square matrix.
  Mat operator()(const Mat& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  Vec c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& p);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m. Throws std::domain_error when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// outer(inner(x)) mod m.
Poly compose_mod(const Poly& outer, const Poly& inner, const Poly& m);

/// Monic product of the distinct irreducible factors: p / gcd(p, p').
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace nilext
