#pragma once

#include <vector>

#include "behavioral/network.hpp"

namespace behavioral {

/// Regular interconnection: the output cardinality of the interconnection
/// equals the sum of the operands' output cardinalities.
bool is_regular(const Behavior& b1, const Behavior& b2, const std::vector<SharedPair>& shared);

/// Regularity of the plant-controller interconnection with respect to the
/// control variable: p((P_I)_(w,c)) + p((C)_c) = p((P_I)_(w,c) wedge_c (C)_c).
bool plant_controller_regular(const Network& net, const Behavior& controller);

/// Sufficient condition: when the manifest plant behavior with respect to c
/// is everything, every implementing distributed controller is regular with
/// respect to c.
bool free_control_sufficient(const Network& net);

/// Row blocks of the stacked two-subsystem kernel, split into the columns of
/// the projected variables (c_1, c_2, s, k) and the latent columns (w_1, w_2).
/// Assembled from minimal kernels of P_i over (w_i, s, c_i) and K_i over
/// (w_i, k), matched positionally against that template.
struct BlockLN {
  PolyMat l1, n1, l2, n2;

  PolyMat l1n1() const;
  PolyMat l2n2() const;
  PolyMat stacked() const;  // [l1 n1; l2 n2]
  PolyMat n_stack() const;  // [n1; n2]
};

BlockLN assemble_block_ln(const Behavior& plant1, const Behavior& desired1,
                          const Behavior& plant2, const Behavior& desired2);

/// Rank test for regularity of the interconnection of the two local
/// canonical controllers: rank[L1 N1] + rank[L2 N2] = rank of the stack.
bool pairwise_canonical_regular(const Behavior& plant1, const Behavior& desired1,
                                const Behavior& plant2, const Behavior& desired2);

/// Output cardinality of the interconnected local canonical controllers,
/// read off the latent-variable representation.
Eigen::Index pairwise_canonical_output_cardinality(const Behavior& plant1,
                                                   const Behavior& desired1,
                                                   const Behavior& plant2,
                                                   const Behavior& desired2);

struct RegularEquivalence {
  bool controllers = false;
  bool plants = false;
  bool desireds = false;
};

/// Controller-side regularity next to the plant-side and desired-side
/// regularity of the same pair.
RegularEquivalence regular_equiv(const Behavior& plant1, const Behavior& desired1,
                                 const Behavior& plant2, const Behavior& desired2);

}  // namespace behavioral
