#pragma once

#include <vector>

#include "behavioral/network.hpp"

namespace testsupport {

using behavioral::Behavior;
using behavioral::Poly;
using behavioral::PolyMat;
using behavioral::Rational;
using behavioral::Signature;
using behavioral::VarGroup;

/// Polynomial from integer coefficients, ascending by power.
inline Poly poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

inline PolyMat mat(std::initializer_list<std::initializer_list<Poly>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  PolyMat m = behavioral::poly_zero(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& entry : row) m(i, j++) = entry;
    ++i;
  }
  return m;
}

// Two-mass spring benchmark: unit masses and springs, w_i = (x_i, d_i),
// c_i = (x_i, f_i), s = k = (x_1, x_2).

inline Behavior plant1() {
  return Behavior(Signature({{"w1", 2}, {"s", 2}, {"c1", 2}}),
                  mat({{poly({2, 0, 1}), poly({-1}), poly({}), poly({-1}), poly({}), poly({-1})},
                       {poly({-1}), poly({}), poly({1}), poly({}), poly({}), poly({})},
                       {poly({-1}), poly({}), poly({}), poly({}), poly({1}), poly({})}}));
}

inline Behavior plant2() {
  return Behavior(Signature({{"w2", 2}, {"s", 2}, {"c2", 2}}),
                  mat({{poly({2, 0, 1}), poly({-1}), poly({-1}), poly({}), poly({}), poly({-1})},
                       {poly({-1}), poly({}), poly({}), poly({1}), poly({}), poly({})},
                       {poly({-1}), poly({}), poly({}), poly({}), poly({1}), poly({})}}));
}

inline Behavior desired1() {
  return Behavior(Signature({{"w1", 2}, {"k", 2}}),
                  mat({{poly({3, 1, 2}), poly({-1}), poly({}), poly({-2})},
                       {poly({-1}), poly({}), poly({1}), poly({})}}));
}

inline Behavior desired2() {
  return Behavior(Signature({{"w2", 2}, {"k", 2}}),
                  mat({{poly({3, 1, 2}), poly({-1}), poly({-2}), poly({})},
                       {poly({-1}), poly({}), poly({}), poly({1})}}));
}

/// Reference local canonical controllers over (c_i, s, k).
inline Behavior controller1() {
  return Behavior(Signature({{"c1", 2}, {"s", 2}, {"k", 2}}),
                  mat({{poly({1, 1, 1}), poly({1}), poly({}), poly({1}), poly({}), poly({-2})},
                       {poly({}), poly({}), poly({-1}), poly({}), poly({1}), poly({})},
                       {poly({1}), poly({}), poly({-1}), poly({}), poly({}), poly({})}}));
}

inline Behavior controller2() {
  return Behavior(Signature({{"c2", 2}, {"s", 2}, {"k", 2}}),
                  mat({{poly({1, 1, 1}), poly({1}), poly({1}), poly({}), poly({-2}), poly({})},
                       {poly({}), poly({}), poly({}), poly({-1}), poly({}), poly({1})},
                       {poly({1}), poly({}), poly({}), poly({-1}), poly({}), poly({})}}));
}

inline behavioral::Network two_mass_network() {
  behavioral::Network net;
  net.subsystems.push_back({plant1(), desired1()});
  net.subsystems.push_back({plant2(), desired2()});
  net.edges.push_back({1, 2, 2, 2});
  return net;
}

/// Variant with the desired inter-mass stiffness lowered to the plant's
/// value: the x_j coupling coefficient drops from 2 to 1 and the diagonal
/// polynomial becomes 2xi^2+xi+2.
inline Behavior desired1_equal_stiffness() {
  return Behavior(Signature({{"w1", 2}, {"k", 2}}),
                  mat({{poly({2, 1, 2}), poly({-1}), poly({}), poly({-1})},
                       {poly({-1}), poly({}), poly({1}), poly({})}}));
}

inline Behavior desired2_equal_stiffness() {
  return Behavior(Signature({{"w2", 2}, {"k", 2}}),
                  mat({{poly({2, 1, 2}), poly({-1}), poly({-1}), poly({})},
                       {poly({-1}), poly({}), poly({}), poly({1})}}));
}

inline behavioral::Network two_mass_equal_stiffness_network() {
  behavioral::Network net;
  net.subsystems.push_back({plant1(), desired1_equal_stiffness()});
  net.subsystems.push_back({plant2(), desired2_equal_stiffness()});
  net.edges.push_back({1, 2, 2, 2});
  return net;
}

}  // namespace testsupport
