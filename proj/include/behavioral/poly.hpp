#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "behavioral/rational.hpp"

namespace behavioral {

/// Univariate polynomial in the indeterminate xi with exact rational
/// coefficients. Coefficients are stored ascending by power and kept
/// normalized: the leading coefficient is nonzero, the zero polynomial has
/// no coefficients at all. Values are immutable in spirit; every operation
/// returns a fresh polynomial.
class Poly {
 public:
  Poly() = default;
  Poly(int value) : Poly(Rational(value)) {}          // NOLINT: Eigen needs Scalar(0)
  Poly(const Rational& value) {                       // NOLINT
    if (!behavioral::is_zero(value)) coeffs_.push_back(value);
  }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  /// xi^power, scaled.
  static Poly monomial(const Rational& coeff, int power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return degree() <= 0; }

  const Rational& leading() const;
  /// Coefficient of xi^power (zero outside the stored range).
  Rational coeff(int power) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly scale(const Poly& p, const Rational& factor);

/// Leading coefficient forced to one. The zero polynomial stays zero.
Poly monic(const Poly& p);

/// Euclidean division: a = q*b + r with deg r < deg b.
/// Throws std::invalid_argument when b is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// True when b divides a exactly.
bool divides(const Poly& b, const Poly& a);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly g;  // monic gcd
  Poly u;  // u*a + v*b = g
  Poly v;
};

Bezout extended_gcd(const Poly& a, const Poly& b);

/// Canonical text form, descending powers: "2xi^2+xi+3", "-1/2xi", "0".
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace behavioral

namespace Eigen {

template <>
struct NumTraits<behavioral::Poly> {
  using Real = behavioral::Poly;
  using NonInteger = behavioral::Poly;
  using Literal = behavioral::Poly;
  using Nested = behavioral::Poly;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 400,
  };
};

}  // namespace Eigen
