#include "behavioral/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace behavioral {

void Poly::trim() {
  while (!coeffs_.empty() && behavioral::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::monomial(const Rational& coeff, int power) {
  if (behavioral::is_zero(coeff)) return Poly();
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Poly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly scale(const Poly& p, const Rational& factor) {
  if (behavioral::is_zero(factor)) return Poly();
  std::vector<Rational> c = p.coeffs();
  for (auto& x : c) x *= factor;
  return Poly(std::move(c));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return scale(p, Rational(1) / p.leading());
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly r = a;
  std::vector<Rational> q(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
      Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rational factor = r.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    r -= Poly::monomial(factor, shift) * b;
  }
  return {Poly(std::move(q)), r};
}

bool divides(const Poly& b, const Poly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return divrem(a, b).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).second;
    x = y;
    y = r;
  }
  return monic(x);
}

Bezout extended_gcd(const Poly& a, const Poly& b) {
  // Iterative extended Euclid, then a final monic normalization.
  Poly r0 = a, r1 = b;
  Poly u0(1), u1(0), v0(0), v1(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    r0 = r1;
    r1 = r2;
    Poly u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
    Poly v2 = v0 - q * v1;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rational lc = r0.leading();
  const Rational inv = Rational(1) / lc;
  return {scale(r0, inv), scale(u0, inv), scale(v0, inv)};
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(d);
    if (behavioral::is_zero(c)) continue;
    const bool first = out.empty();
    if (sgn(c) < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    const bool unit = (c == Rational(1));
    if (d == 0 || !unit) out += behavioral::to_string(c);
    if (d > 0) {
      out += "xi";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace behavioral
