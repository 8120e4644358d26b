#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <string>

namespace behavioral {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator), which the whole library relies on: behavior comparisons
/// are exact algebraic tests with zero tolerance.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Prints "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace behavioral

namespace Eigen {

template <>
struct NumTraits<behavioral::Rational> : GenericNumTraits<behavioral::Rational> {
  using Real = behavioral::Rational;
  using NonInteger = behavioral::Rational;
  using Nested = behavioral::Rational;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100,
  };
};

}  // namespace Eigen
