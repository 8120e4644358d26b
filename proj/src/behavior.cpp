#include "behavioral/behavior.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace behavioral {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Signature::Signature(std::vector<VarGroup> groups) : groups_(std::move(groups)) {
  std::set<std::string> seen;
  for (const auto& g : groups_) {
    if (g.dim < 0) fail("variable group '" + g.name + "' has negative dimension");
    if (!seen.insert(g.name).second) fail("duplicate variable group '" + g.name + "'");
  }
}

Eigen::Index Signature::total_dim() const {
  Eigen::Index n = 0;
  for (const auto& g : groups_) n += g.dim;
  return n;
}

bool Signature::has_group(const std::string& name) const {
  return std::any_of(groups_.begin(), groups_.end(),
                     [&](const VarGroup& g) { return g.name == name; });
}

const VarGroup& Signature::group(const std::string& name) const {
  for (const auto& g : groups_)
    if (g.name == name) return g;
  fail("unknown variable group '" + name + "'");
}

Eigen::Index Signature::column_of(const std::string& name) const {
  Eigen::Index col = 0;
  for (const auto& g : groups_) {
    if (g.name == name) return col;
    col += g.dim;
  }
  fail("unknown variable group '" + name + "'");
}

Behavior::Behavior(Signature s, PolyMat r) : sig(std::move(s)), kernel(std::move(r)) {
  if (kernel.cols() != sig.total_dim())
    fail("kernel has " + std::to_string(kernel.cols()) + " columns, signature needs " +
         std::to_string(sig.total_dim()));
}

Behavior full_behavior(Signature sig) {
  const Eigen::Index n = sig.total_dim();
  return Behavior(std::move(sig), poly_zero(0, n));
}

Behavior minimize(const Behavior& b) {
  return Behavior(b.sig, row_compress(b.kernel).full_rows);
}

bool is_minimal(const Behavior& b) { return rank(b.kernel) == b.kernel.rows(); }

Cardinalities cardinalities(const Behavior& b) {
  const Eigen::Index p = rank(b.kernel);
  return {b.variable_count() - p, p};
}

Behavior interconnect(const Behavior& b1, const Behavior& b2,
                      const std::vector<SharedPair>& shared) {
  std::set<std::string> shared_in_b2;
  for (const auto& pair : shared) {
    const VarGroup& g1 = b1.sig.group(pair.first);
    const VarGroup& g2 = b2.sig.group(pair.second);
    if (g1.dim != g2.dim)
      fail("shared groups '" + pair.first + "' and '" + pair.second +
           "' have different dimensions");
    if (!shared_in_b2.insert(pair.second).second)
      fail("group '" + pair.second + "' shared twice");
  }

  // Merged signature: b1 in order, then the new groups of b2.
  std::vector<VarGroup> merged = b1.sig.groups();
  for (const auto& g : b2.sig.groups()) {
    if (shared_in_b2.count(g.name)) continue;
    if (b1.sig.has_group(g.name))
      fail("group '" + g.name + "' present in both behaviors but not shared");
    merged.push_back(g);
  }
  Signature sig(std::move(merged));

  PolyMat stacked = poly_zero(b1.kernel.rows() + b2.kernel.rows(), sig.total_dim());
  stacked.topLeftCorner(b1.kernel.rows(), b1.kernel.cols()) = b1.kernel;

  // b2's columns map through the shared pairs; everything else lands on its
  // own freshly appended block.
  for (const auto& g : b2.sig.groups()) {
    std::string target = g.name;
    for (const auto& pair : shared)
      if (pair.second == g.name) {
        target = pair.first;
        break;
      }
    stacked.block(b1.kernel.rows(), sig.column_of(target), b2.kernel.rows(), g.dim) =
        b2.kernel.block(0, b2.sig.column_of(g.name), b2.kernel.rows(), g.dim);
  }
  return Behavior(std::move(sig), std::move(stacked));
}

Behavior eliminate(const Behavior& b, const std::vector<std::string>& keep) {
  std::set<std::string> kept;
  std::vector<VarGroup> kept_groups;
  Eigen::Index kept_dim = 0;
  for (const auto& name : keep) {
    const VarGroup& g = b.sig.group(name);
    if (!kept.insert(name).second) fail("group '" + name + "' kept twice");
    kept_groups.push_back(g);
    kept_dim += g.dim;
  }

  const Eigen::Index rows = b.kernel.rows();
  PolyMat keep_block = poly_zero(rows, kept_dim);
  PolyMat elim_block = poly_zero(rows, b.variable_count() - kept_dim);
  Eigen::Index kc = 0;
  for (const auto& name : keep) {
    const VarGroup& g = b.sig.group(name);
    keep_block.block(0, kc, rows, g.dim) = b.kernel.block(0, b.sig.column_of(name), rows, g.dim);
    kc += g.dim;
  }
  Eigen::Index ec = 0;
  for (const auto& g : b.sig.groups()) {
    if (kept.count(g.name)) continue;
    elim_block.block(0, ec, rows, g.dim) = b.kernel.block(0, b.sig.column_of(g.name), rows, g.dim);
    ec += g.dim;
  }

  // Elimination theorem: compress the latent columns; the rows that no
  // longer touch them describe the manifest behavior.
  const RowCompression rc = row_compress(elim_block);
  const Eigen::Index latent_rank = rc.full_rows.rows();
  const PolyMat transformed = rc.transform * keep_block;
  Behavior manifest(Signature(std::move(kept_groups)),
                    transformed.bottomRows(rows - latent_rank));
  return minimize(manifest);
}

bool includes(const Behavior& b1, const Behavior& b2) {
  if (b1.sig != b2.sig)
    fail("behaviors compared across different signatures");
  const PolyMat r1 = row_compress(b1.kernel).full_rows;
  return solve_left_factor(r1, b2.kernel).has_value();
}

bool equals(const Behavior& b1, const Behavior& b2) {
  return includes(b1, b2) && includes(b2, b1);
}

Behavior zero_restrict(const Behavior& b, const std::string& group) {
  b.sig.group(group);  // existence check
  std::vector<VarGroup> rest;
  for (const auto& g : b.sig.groups())
    if (g.name != group) rest.push_back(g);
  Signature sig(std::move(rest));

  PolyMat kernel = poly_zero(b.kernel.rows(), sig.total_dim());
  Eigen::Index col = 0;
  for (const auto& g : b.sig.groups()) {
    if (g.name == group) continue;
    kernel.block(0, col, kernel.rows(), g.dim) =
        b.kernel.block(0, b.sig.column_of(g.name), kernel.rows(), g.dim);
    col += g.dim;
  }
  return Behavior(std::move(sig), std::move(kernel));
}

Behavior reorder_groups(const Behavior& b, const std::vector<std::string>& order) {
  if (order.size() != b.sig.groups().size())
    fail("group order must mention every group exactly once");
  std::vector<VarGroup> groups;
  for (const auto& name : order) groups.push_back(b.sig.group(name));
  Signature sig(groups);

  PolyMat kernel = poly_zero(b.kernel.rows(), b.kernel.cols());
  Eigen::Index col = 0;
  for (const auto& g : groups) {
    kernel.block(0, col, kernel.rows(), g.dim) =
        b.kernel.block(0, b.sig.column_of(g.name), kernel.rows(), g.dim);
    col += g.dim;
  }
  return Behavior(std::move(sig), std::move(kernel));
}

Behavior rename_group(const Behavior& b, const std::string& from, const std::string& to) {
  b.sig.group(from);  // existence check
  std::vector<VarGroup> groups = b.sig.groups();
  for (auto& g : groups)
    if (g.name == from) g.name = to;
  return Behavior(Signature(std::move(groups)), b.kernel);
}

}  // namespace behavioral
