#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "behavioral/behavior.hpp"

namespace behavioral {

/// Symmetric shared-variable link between subsystems i and j (1-based,
/// i < j). s_dim is the plant-side width, k_dim the desired-behavior-side
/// width; sharing nothing on the plant side forbids sharing on the desired
/// side.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  Eigen::Index s_dim = 0;
  Eigen::Index k_dim = 0;
};

/// Local plant over (w_i, shared plant variables, c_i) and local desired
/// behavior over (w_i, shared desired variables). Groups are matched by
/// name: w<i> and c<i> for the private blocks, and per edge (i,j) a group
/// named s<i><j>, s<j><i>, or plain "s" (resp. k...) for the shared blocks.
struct Subsystem {
  Behavior plant;
  Behavior desired;
};

struct Network {
  std::vector<Subsystem> subsystems;
  std::vector<Edge> edges;
};

/// One broken invariant, as data.
struct Violation {
  std::string where;
  std::string rule;
};

std::string to_string(const Violation& v);

/// Empty iff every edge and subsystem invariant holds.
std::vector<Violation> validate(const Network& net);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Network& net);

/// Resolved group names for one edge endpoint.
std::string plant_edge_group(const Network& net, std::size_t subsystem, std::size_t edge);
std::string desired_edge_group(const Network& net, std::size_t subsystem, std::size_t edge);

/// Conjunction of all local plants over (w_1..w_L, shared s blocks in edge
/// order, c_1..c_L).
Behavior plant_interconnection(const Network& net);

/// Conjunction of all local desired behaviors over (w_1..w_L, shared k
/// blocks in edge order).
Behavior desired_interconnection(const Network& net);

Behavior manifest_plant_wc(const Network& net);
Behavior manifest_plant_w(const Network& net);
Behavior manifest_plant_c(const Network& net);

/// Desired behavior projected onto the to-be-controlled variables.
Behavior manifest_desired_w(const Network& net);

/// Trajectories of w compatible with all control variables pinned to zero.
Behavior hidden(const Network& net);

/// Names w_1..w_L (resp. c_1..c_L) in subsystem order.
std::vector<std::string> w_group_names(const Network& net);
std::vector<std::string> c_group_names(const Network& net);

}  // namespace behavioral
