#include "behavioral/synthesis.hpp"

#include <set>
#include <stdexcept>

namespace behavioral {

Behavior local_canonical(const Behavior& plant, const Behavior& desired,
                         const LocalNames& names) {
  if (!plant.sig.has_group(names.w) || !desired.sig.has_group(names.w))
    throw std::invalid_argument("coupling group '" + names.w +
                                "' must exist in plant and desired behavior");
  const Behavior joint = interconnect(plant, desired, {SharedPair(names.w)});
  std::vector<std::string> keep;
  if (!names.c.empty()) keep.push_back(names.c);
  for (const auto& s : names.s) keep.push_back(s);
  for (const auto& k : names.k) keep.push_back(k);
  return eliminate(joint, keep);
}

Behavior local_canonical(const Behavior& plant, const Behavior& desired) {
  if (plant.sig.groups().empty() || desired.sig.groups().empty())
    throw std::invalid_argument("local_canonical needs nonempty signatures");
  LocalNames names;
  names.w = plant.sig.groups().front().name;
  if (desired.sig.groups().front().name != names.w)
    throw std::invalid_argument("plant and desired behavior must lead with the same group");
  const auto& pg = plant.sig.groups();
  if (pg.size() >= 2) {
    names.c = pg.back().name;
    for (std::size_t i = 1; i + 1 < pg.size(); ++i) names.s.push_back(pg[i].name);
  }
  const auto& dg = desired.sig.groups();
  for (std::size_t i = 1; i < dg.size(); ++i) names.k.push_back(dg[i].name);
  return local_canonical(plant, desired, names);
}

namespace {

LocalNames subsystem_names(const Network& net, std::size_t m) {
  LocalNames names;
  names.w = "w" + std::to_string(m);
  const std::string c = "c" + std::to_string(m);
  if (net.subsystems[m - 1].plant.sig.has_group(c)) names.c = c;
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const Edge& e = net.edges[ei];
    if (e.i != m && e.j != m) continue;
    const std::string sg = plant_edge_group(net, m, ei);
    const std::string kg = desired_edge_group(net, m, ei);
    if (!sg.empty()) names.s.push_back(sg);
    if (!kg.empty()) names.k.push_back(kg);
  }
  return names;
}

}  // namespace

Behavior local_canonical(const Network& net, std::size_t subsystem) {
  require_valid(net);
  if (subsystem < 1 || subsystem > net.subsystems.size())
    throw std::invalid_argument("subsystem index out of range");
  const Subsystem& sub = net.subsystems[subsystem - 1];
  return local_canonical(sub.plant, sub.desired, subsystem_names(net, subsystem));
}

Behavior distributed_canonical(const Network& net) {
  require_valid(net);
  const std::size_t count = net.subsystems.size();

  // Local controllers, with each edge block renamed to its merged name so
  // the stacked signature lines up across subsystems.
  std::vector<Behavior> locals;
  for (std::size_t m = 1; m <= count; ++m) {
    Behavior c = local_canonical(net, m);
    for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
      const Edge& e = net.edges[ei];
      if (e.i != m && e.j != m) continue;
      const std::string sg = plant_edge_group(net, m, ei);
      const std::string s_merged = plant_edge_group(net, e.i, ei);
      if (!sg.empty() && sg != s_merged) c = rename_group(c, sg, s_merged);
      const std::string kg = desired_edge_group(net, m, ei);
      const std::string k_merged = desired_edge_group(net, e.i, ei);
      if (!kg.empty() && kg != k_merged) c = rename_group(c, kg, k_merged);
    }
    locals.push_back(std::move(c));
  }

  // Target signature (c_1..c_L, s blocks, k blocks), edge blocks in edge order.
  std::vector<VarGroup> groups;
  for (std::size_t m = 1; m <= count; ++m) {
    const std::string c = "c" + std::to_string(m);
    if (locals[m - 1].sig.has_group(c)) groups.push_back(locals[m - 1].sig.group(c));
  }
  std::vector<std::string> s_merged_names, k_merged_names;
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const std::string s_merged = plant_edge_group(net, net.edges[ei].i, ei);
    if (!s_merged.empty()) {
      groups.push_back({s_merged, net.edges[ei].s_dim});
      s_merged_names.push_back(s_merged);
    }
  }
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const std::string k_merged = desired_edge_group(net, net.edges[ei].i, ei);
    if (!k_merged.empty()) {
      groups.push_back({k_merged, net.edges[ei].k_dim});
      k_merged_names.push_back(k_merged);
    }
  }
  Signature sig(std::move(groups));

  Eigen::Index rows = 0;
  for (const auto& c : locals) rows += c.kernel.rows();
  PolyMat kernel = poly_zero(rows, sig.total_dim());
  Eigen::Index row = 0;
  for (const auto& c : locals) {
    for (const auto& g : c.sig.groups())
      kernel.block(row, sig.column_of(g.name), c.kernel.rows(), g.dim) =
          c.kernel.block(0, c.sig.column_of(g.name), c.kernel.rows(), g.dim);
    row += c.kernel.rows();
  }
  return minimize(Behavior(std::move(sig), std::move(kernel)));
}

std::string to_string(Implementability v) {
  switch (v) {
    case Implementability::implementable: return "implementable";
    case Implementability::fails_lower: return "fails_lower";
    case Implementability::fails_upper: return "fails_upper";
  }
  return "?";
}

namespace {

/// Inclusion test that also extracts the first unprovable equation of the
/// enclosing behavior as a witness.
std::optional<InclusionWitness> inclusion_witness(const Behavior& subset,
                                                  const Behavior& superset,
                                                  const std::string& label) {
  const PolyMat sub_min = row_compress(subset.kernel).full_rows;
  for (Eigen::Index r = 0; r < superset.kernel.rows(); ++r) {
    const PolyMat row = superset.kernel.row(r);
    if (!solve_left_factor(sub_min, row).has_value()) {
      std::string eq = "[";
      for (Eigen::Index c = 0; c < row.cols(); ++c) {
        if (c) eq += ", ";
        eq += to_string(row(0, c));
      }
      eq += "]";
      return InclusionWitness{label, r, eq};
    }
  }
  return std::nullopt;
}

}  // namespace

ImplementabilityReport check_implementability(const Network& net) {
  require_valid(net);
  const Behavior hidden_w = hidden(net);
  const Behavior desired_w = manifest_desired_w(net);
  const Behavior plant_w = manifest_plant_w(net);

  ImplementabilityReport report;
  if (!includes(hidden_w, desired_w)) {
    report.verdict = Implementability::fails_lower;
    report.witness =
        inclusion_witness(hidden_w, desired_w, "hidden behavior within desired behavior");
    return report;
  }
  if (!includes(desired_w, plant_w)) {
    report.verdict = Implementability::fails_upper;
    report.witness =
        inclusion_witness(desired_w, plant_w, "desired behavior within manifest plant behavior");
    return report;
  }
  return report;
}

Behavior controlled_behavior(const Network& net, const Behavior& controller) {
  require_valid(net);
  const std::vector<std::string> c_names = c_group_names(net);
  const Behavior plant_wc = manifest_plant_wc(net);

  // Controller-private groups are latent variables here; rename them away
  // from any plant group before interconnecting through c.
  Behavior ctrl = controller;
  std::vector<SharedPair> shared;
  for (const auto& c : c_names) {
    if (!ctrl.sig.has_group(c))
      throw std::invalid_argument("controller lacks control group '" + c + "'");
    shared.emplace_back(c);
  }
  for (const auto& g : controller.sig.groups()) {
    bool is_control = false;
    for (const auto& c : c_names) is_control = is_control || c == g.name;
    if (is_control) continue;
    if (plant_wc.sig.has_group(g.name)) {
      std::string fresh = g.name + "_ctrl";
      while (plant_wc.sig.has_group(fresh) || ctrl.sig.has_group(fresh)) fresh += "_";
      ctrl = rename_group(ctrl, g.name, fresh);
    }
  }

  // One joint elimination of everything but w.
  const Behavior loop = interconnect(plant_wc, ctrl, shared);
  return eliminate(loop, w_group_names(net));
}

bool verify_implementation(const Network& net, const Behavior& controller) {
  return equals(controlled_behavior(net, controller), manifest_desired_w(net));
}

}  // namespace behavioral
