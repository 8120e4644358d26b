#pragma once

#include <string>
#include <utility>
#include <vector>

#include "behavioral/polymat.hpp"

namespace behavioral {

/// One named block of system variables.
struct VarGroup {
  std::string name;
  Eigen::Index dim = 0;

  friend bool operator==(const VarGroup& a, const VarGroup& b) {
    return a.name == b.name && a.dim == b.dim;
  }
};

/// Ordered list of variable groups; fixes the column layout of every kernel
/// matrix attached to it. Group names are unique.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<VarGroup> groups);

  const std::vector<VarGroup>& groups() const { return groups_; }
  Eigen::Index total_dim() const;
  bool has_group(const std::string& name) const;
  const VarGroup& group(const std::string& name) const;
  /// First column of the group's block.
  Eigen::Index column_of(const std::string& name) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.groups_ == b.groups_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  std::vector<VarGroup> groups_;
};

/// Linear differential behavior { w in C-infinity | R(d/dt) w = 0 } given by
/// a kernel matrix R whose columns follow the signature. Immutable value;
/// all operations below are pure functions.
struct Behavior {
  Signature sig;
  PolyMat kernel;

  Behavior() = default;
  /// Throws when the kernel column count does not match the signature.
  Behavior(Signature s, PolyMat r);

  Eigen::Index variable_count() const { return sig.total_dim(); }
  Eigen::Index row_count() const { return kernel.rows(); }
};

/// Behavior with no equations on the given groups.
Behavior full_behavior(Signature sig);

/// Same behavior, full-row-rank kernel (one row compression).
Behavior minimize(const Behavior& b);

bool is_minimal(const Behavior& b);

/// Input and output cardinality: p = rank of the kernel, m = variables - p.
struct Cardinalities {
  Eigen::Index m = 0;
  Eigen::Index p = 0;
};

Cardinalities cardinalities(const Behavior& b);

/// A shared variable: one group name in each operand, equal dimensions.
struct SharedPair {
  std::string first;
  std::string second;

  SharedPair(std::string a, std::string b) : first(std::move(a)), second(std::move(b)) {}
  explicit SharedPair(const std::string& both) : first(both), second(both) {}
};

/// Variable-sharing interconnection: both kernels stacked over the merged
/// signature (groups of b1 in order, then the non-shared groups of b2).
/// Shared groups keep b1's name.
Behavior interconnect(const Behavior& b1, const Behavior& b2,
                      const std::vector<SharedPair>& shared);

/// Manifest behavior on the kept groups (latent variables eliminated by row
/// compression of their columns). Result columns follow the keep list and
/// the result is minimized.
Behavior eliminate(const Behavior& b, const std::vector<std::string>& keep);

/// b1 as subset of b2, decided by the left-factor criterion on the minimized
/// kernel of b1. Signatures must be identical.
bool includes(const Behavior& b1, const Behavior& b2);

bool equals(const Behavior& b1, const Behavior& b2);

/// Pins one group to zero: its columns are deleted, rows kept as-is.
Behavior zero_restrict(const Behavior& b, const std::string& group);

/// Same behavior with columns permuted to the requested group order.
Behavior reorder_groups(const Behavior& b, const std::vector<std::string>& order);

/// Same behavior with one group renamed.
Behavior rename_group(const Behavior& b, const std::string& from, const std::string& to);

}  // namespace behavioral
