#include "nilext/poly.hpp"

#include "nilext/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace nilext {

Poly::Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(Vec{c}); }
Poly Poly::x() { return Poly(Vec{Rat(0), Rat(1)}); }
Poly Poly::linear(const Rat& root) { return Poly(Vec{-root, Rat(1)}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return inv * *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Rat Poly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Mat Poly::operator()(const Mat& at) const {
  if (!at.is_square()) throw DimensionError("polynomial evaluated at non-square matrix");
  const std::size_t n = at.rows();
  Mat acc(n, n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * at;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec r(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) { return Poly(s * p.coeffs()); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Vec rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  Vec quo(rem.size() - db, Rat(0));
  const Rat inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    Rat f = rem[k] * inv_lead;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // extended Euclid tracking the coefficient of a
  Poly r0 = m, r1 = a % m;
  Poly s0{}, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return ((1 / r0.leading()) * s0) % m;
}

Poly compose_mod(const Poly& outer, const Poly& inner, const Poly& m) {
  Poly acc{};
  const Poly in = inner % m;
  for (auto it = outer.coeffs().rbegin(); it != outer.coeffs().rend(); ++it)
    acc = (acc * in + Poly::constant(*it)) % m;
  return acc;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  Poly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

bool is_squarefree(const Poly& p) { return gcd(p, p.derivative()).is_constant(); }

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    Rat c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rat a = abs(c);
    if (k == 0 || a != 1) os << to_display_string(a) << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace nilext
