#pragma once

#include <optional>
#include <string>
#include <vector>

#include "behavioral/network.hpp"

namespace behavioral {

/// Structural naming of one subsystem's variable groups: the coupling
/// variable w shared by plant and desired behavior, the control variable c
/// (empty when the plant has none), the plant-side shared blocks s and the
/// desired-side shared blocks k.
struct LocalNames {
  std::string w;
  std::string c;
  std::vector<std::string> s;
  std::vector<std::string> k;
};

/// The local controller obtained by coupling the plant to the local desired
/// behavior through w and projecting onto (c, s, k), minimized. Only local
/// data enters; no other subsystem is consulted.
Behavior local_canonical(const Behavior& plant, const Behavior& desired,
                         const LocalNames& names);

/// Positional convenience: plant over (w, s..., c), desired over (w, k...),
/// with matching first group.
Behavior local_canonical(const Behavior& plant, const Behavior& desired);

/// Local canonical controller for one subsystem of a validated network.
Behavior local_canonical(const Network& net, std::size_t subsystem);

/// All local canonical controllers interconnected through their shared
/// (s, k) blocks; signature (c_1..c_L, s blocks, k blocks).
Behavior distributed_canonical(const Network& net);

enum class Implementability { implementable, fails_lower, fails_upper };

std::string to_string(Implementability v);

/// Diagnostic for a failed inclusion: the first equation of the would-be
/// enclosing behavior that the candidate subset does not imply.
struct InclusionWitness {
  std::string inclusion;
  Eigen::Index row = -1;
  std::string equation;
};

struct ImplementabilityReport {
  Implementability verdict = Implementability::implementable;
  std::optional<InclusionWitness> witness;

  bool ok() const { return verdict == Implementability::implementable; }
};

/// Sandwich test: hidden behavior inside the desired manifest behavior
/// inside the manifest plant behavior. By construction of the canonical
/// distributed controller this simultaneously decides implementability via
/// any distributed controller.
ImplementabilityReport check_implementability(const Network& net);

/// True when interconnecting the plant with the controller through the
/// control variables reproduces the desired manifest behavior exactly. The
/// controller may carry arbitrary private groups besides c_1..c_L; they are
/// treated as controller-internal and eliminated jointly.
bool verify_implementation(const Network& net, const Behavior& controller);

/// The controlled manifest behavior ((P_I wedge_c C)_w) itself.
Behavior controlled_behavior(const Network& net, const Behavior& controller);

}  // namespace behavioral
