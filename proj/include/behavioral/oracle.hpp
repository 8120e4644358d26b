#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "behavioral/behavior.hpp"

namespace behavioral {

/// Basis of the exact null space of a rational matrix, one column per basis
/// vector.
RationalMatrix nullspace_basis(const RationalMatrix& a);

/// Exponential trajectories v*e^(rate*t) contained in the behavior: the null
/// space of the kernel evaluated at the rate.
RationalMatrix exp_solutions(const Behavior& b, const Rational& rate);

/// count distinct small rationals: integers spiraling out from zero, then
/// half-integers.
std::vector<Rational> sample_points(std::size_t count);

/// Default sample count for a behavior: total kernel degree plus five.
std::size_t default_sample_count(const Behavior& b);

struct RefutedInclusion {
  Rational rate;
  RationalVector trajectory;
};

struct InclusionCrossCheck {
  bool consistent = true;
  std::optional<RefutedInclusion> refutation;
};

/// Necessary condition for b1 inside b2 checked on exponential solutions at
/// the sample rates. A refutation is definitive; consistency is only
/// evidence. Never overrides the algebraic test.
InclusionCrossCheck randomized_inclusion(const Behavior& b1, const Behavior& b2,
                                         const std::vector<Rational>& samples);

struct RandomBehaviorSpec {
  std::vector<VarGroup> groups;
  Eigen::Index max_rows = 3;
  int max_deg = 2;
  long coeff_bound = 3;
};

/// Deterministic pseudo-random kernel within the bounds; a fixed seed always
/// reproduces the same behavior.
Behavior random_behavior(const RandomBehaviorSpec& spec, std::uint64_t seed);

/// Deterministic random polynomial matrix (shared engine for tests).
PolyMat random_poly_mat(Eigen::Index rows, Eigen::Index cols, int max_deg, long coeff_bound,
                        std::uint64_t seed);

}  // namespace behavioral
