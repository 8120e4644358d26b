#include "behavioral/network.hpp"

#include <set>
#include <stdexcept>

namespace behavioral {

namespace {

std::string w_name(std::size_t i) { return "w" + std::to_string(i); }
std::string c_name(std::size_t i) { return "c" + std::to_string(i); }

/// Candidate names for the block of edge (i,j) seen from one endpoint, in
/// preference order. Plain "s"/"k" covers the single-edge shorthand.
std::vector<std::string> edge_candidates(char prefix, const Edge& e) {
  const std::string si = std::to_string(e.i);
  const std::string sj = std::to_string(e.j);
  return {prefix + si + sj, prefix + sj + si, std::string(1, prefix)};
}

std::string resolve_edge_group(const Behavior& b, char prefix, const Edge& e,
                               const std::set<std::string>& taken) {
  for (const auto& name : edge_candidates(prefix, e))
    if (b.sig.has_group(name) && !taken.count(name)) return name;
  return {};
}

struct ResolvedSubsystem {
  // Per edge index touching this subsystem: local group names ("" if the
  // edge block is absent, which is fine only for zero-width edges).
  std::vector<std::pair<std::size_t, std::string>> plant_edges;
  std::vector<std::pair<std::size_t, std::string>> desired_edges;
};

/// Maps every edge endpoint to a concrete group; reports what cannot be
/// matched. Used by both validate() and the builders.
std::vector<ResolvedSubsystem> resolve(const Network& net, std::vector<Violation>* out) {
  const std::size_t count = net.subsystems.size();
  std::vector<ResolvedSubsystem> res(count);
  std::vector<std::set<std::string>> plant_taken(count), desired_taken(count);

  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const Edge& e = net.edges[ei];
    if (e.i < 1 || e.j <= e.i || e.j > count) {
      if (out) out->push_back({"edge " + std::to_string(ei + 1), "subsystem indices must satisfy 1 <= i < j <= L"});
      continue;
    }
    for (std::size_t m : {e.i, e.j}) {
      const Subsystem& sub = net.subsystems[m - 1];
      const std::string where = "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                ") in subsystem " + std::to_string(m);

      std::string sg = resolve_edge_group(sub.plant, 's', e, plant_taken[m - 1]);
      if (sg.empty()) {
        if (e.s_dim != 0 && out)
          out->push_back({where, "plant lacks a shared group (expected s" + std::to_string(e.i) +
                                     std::to_string(e.j) + " or s)"});
      } else {
        plant_taken[m - 1].insert(sg);
        if (sub.plant.sig.group(sg).dim != e.s_dim && out)
          out->push_back({where, "plant group '" + sg + "' has dimension " +
                                     std::to_string(sub.plant.sig.group(sg).dim) +
                                     ", edge declares s=" + std::to_string(e.s_dim)});
      }
      res[m - 1].plant_edges.emplace_back(ei, sg);

      std::string kg = resolve_edge_group(sub.desired, 'k', e, desired_taken[m - 1]);
      if (kg.empty()) {
        if (e.k_dim != 0 && out)
          out->push_back({where, "desired behavior lacks a shared group (expected k" +
                                     std::to_string(e.i) + std::to_string(e.j) + " or k)"});
      } else {
        desired_taken[m - 1].insert(kg);
        if (sub.desired.sig.group(kg).dim != e.k_dim && out)
          out->push_back({where, "desired group '" + kg + "' has dimension " +
                                     std::to_string(sub.desired.sig.group(kg).dim) +
                                     ", edge declares k=" + std::to_string(e.k_dim)});
      }
      res[m - 1].desired_edges.emplace_back(ei, kg);
    }
  }

  if (out) {
    for (std::size_t m = 1; m <= count; ++m) {
      const Subsystem& sub = net.subsystems[m - 1];
      const std::string where = "subsystem " + std::to_string(m);
      if (!sub.plant.sig.has_group(w_name(m)))
        out->push_back({where, "plant lacks group '" + w_name(m) + "'"});
      if (!sub.desired.sig.has_group(w_name(m)))
        out->push_back({where, "desired behavior lacks group '" + w_name(m) + "'"});
      if (sub.plant.sig.has_group(w_name(m)) && sub.desired.sig.has_group(w_name(m)) &&
          sub.plant.sig.group(w_name(m)).dim != sub.desired.sig.group(w_name(m)).dim)
        out->push_back({where, "plant and desired behavior disagree on the dimension of '" +
                                   w_name(m) + "'"});
      for (const auto& g : sub.plant.sig.groups()) {
        if (g.name == w_name(m) || g.name == c_name(m) || plant_taken[m - 1].count(g.name))
          continue;
        out->push_back({where, "plant group '" + g.name + "' is not covered by any edge"});
      }
      for (const auto& g : sub.desired.sig.groups()) {
        if (g.name == w_name(m) || desired_taken[m - 1].count(g.name)) continue;
        out->push_back({where, "desired group '" + g.name + "' is not covered by any edge"});
      }
    }
  }
  return res;
}

}  // namespace

std::string to_string(const Violation& v) { return v.where + ": " + v.rule; }

std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> out;
  if (net.subsystems.empty()) {
    out.push_back({"network", "at least one subsystem is required"});
    return out;
  }
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const Edge& e = net.edges[ei];
    const std::string where =
        "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    if (e.s_dim < 0 || e.k_dim < 0) out.push_back({where, "edge dimensions must be nonnegative"});
    if (e.s_dim == 0 && e.k_dim > 0)
      out.push_back({where, "subsystems that do not share a plant variable must not share a "
                            "desired-behavior variable"});
  }
  const auto res = resolve(net, &out);
  // The merged interconnection signature must stay collision-free: every
  // edge block keeps the name used at its lower endpoint.
  for (const bool plant_side : {true, false}) {
    std::set<std::string> merged;
    for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
      const Edge& e = net.edges[ei];
      if (e.i < 1 || e.j <= e.i || e.j > net.subsystems.size()) continue;
      const auto& list = plant_side ? res[e.i - 1].plant_edges : res[e.i - 1].desired_edges;
      for (const auto& [index, name] : list) {
        if (index != ei || name.empty()) continue;
        if (!merged.insert(name).second)
          out.push_back({"edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")",
                         "shared group name '" + name + "' collides with another edge"});
      }
    }
  }
  return out;
}

void require_valid(const Network& net) {
  const auto violations = validate(net);
  if (violations.empty()) return;
  std::string msg = "invalid network:";
  for (const auto& v : violations) msg += "\n  " + to_string(v);
  throw std::invalid_argument(msg);
}

std::string plant_edge_group(const Network& net, std::size_t subsystem, std::size_t edge) {
  const auto res = resolve(net, nullptr);
  for (const auto& [ei, name] : res[subsystem - 1].plant_edges)
    if (ei == edge) return name;
  return {};
}

std::string desired_edge_group(const Network& net, std::size_t subsystem, std::size_t edge) {
  const auto res = resolve(net, nullptr);
  for (const auto& [ei, name] : res[subsystem - 1].desired_edges)
    if (ei == edge) return name;
  return {};
}

std::vector<std::string> w_group_names(const Network& net) {
  std::vector<std::string> names;
  for (std::size_t m = 1; m <= net.subsystems.size(); ++m) names.push_back(w_name(m));
  return names;
}

std::vector<std::string> c_group_names(const Network& net) {
  std::vector<std::string> names;
  for (std::size_t m = 1; m <= net.subsystems.size(); ++m)
    if (net.subsystems[m - 1].plant.sig.has_group(c_name(m))) names.push_back(c_name(m));
  return names;
}

namespace {

/// Canonical name for the merged block of edge ei: the group name used at
/// the lower endpoint.
std::string merged_edge_name(const std::vector<ResolvedSubsystem>& res, const Network& net,
                             std::size_t ei, bool plant_side) {
  const Edge& e = net.edges[ei];
  const auto& list = plant_side ? res[e.i - 1].plant_edges : res[e.i - 1].desired_edges;
  for (const auto& [index, name] : list)
    if (index == ei) return name;
  return {};
}

/// Stacks the local kernels over a shared target signature, mapping each
/// local group to its target column block by name.
Behavior stack_subsystems(const Network& net, bool plant_side) {
  require_valid(net);
  const auto res = resolve(net, nullptr);

  std::vector<VarGroup> groups;
  for (std::size_t m = 1; m <= net.subsystems.size(); ++m) {
    const Behavior& b =
        plant_side ? net.subsystems[m - 1].plant : net.subsystems[m - 1].desired;
    groups.push_back(b.sig.group(w_name(m)));
  }
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const std::string name = merged_edge_name(res, net, ei, plant_side);
    const Eigen::Index dim = plant_side ? net.edges[ei].s_dim : net.edges[ei].k_dim;
    if (name.empty() && dim == 0) continue;
    groups.push_back({name, dim});
  }
  if (plant_side) {
    for (std::size_t m = 1; m <= net.subsystems.size(); ++m) {
      const Behavior& b = net.subsystems[m - 1].plant;
      if (b.sig.has_group(c_name(m))) groups.push_back(b.sig.group(c_name(m)));
    }
  }
  Signature sig(std::move(groups));

  Eigen::Index rows = 0;
  for (const auto& sub : net.subsystems)
    rows += plant_side ? sub.plant.kernel.rows() : sub.desired.kernel.rows();
  PolyMat kernel = poly_zero(rows, sig.total_dim());

  Eigen::Index row = 0;
  for (std::size_t m = 1; m <= net.subsystems.size(); ++m) {
    const Behavior& b =
        plant_side ? net.subsystems[m - 1].plant : net.subsystems[m - 1].desired;
    const auto& local_edges =
        plant_side ? res[m - 1].plant_edges : res[m - 1].desired_edges;
    for (const auto& g : b.sig.groups()) {
      std::string target = g.name;
      for (const auto& [ei, local] : local_edges)
        if (local == g.name) {
          target = merged_edge_name(res, net, ei, plant_side);
          break;
        }
      if (target.empty()) continue;  // zero-width edge block absent at the lower endpoint
      kernel.block(row, sig.column_of(target), b.kernel.rows(), g.dim) =
          b.kernel.block(0, b.sig.column_of(g.name), b.kernel.rows(), g.dim);
    }
    row += b.kernel.rows();
  }
  return Behavior(std::move(sig), std::move(kernel));
}

}  // namespace

Behavior plant_interconnection(const Network& net) { return stack_subsystems(net, true); }

Behavior desired_interconnection(const Network& net) { return stack_subsystems(net, false); }

Behavior manifest_plant_wc(const Network& net) {
  std::vector<std::string> keep = w_group_names(net);
  for (const auto& c : c_group_names(net)) keep.push_back(c);
  return eliminate(plant_interconnection(net), keep);
}

Behavior manifest_plant_w(const Network& net) {
  return eliminate(plant_interconnection(net), w_group_names(net));
}

Behavior manifest_plant_c(const Network& net) {
  return eliminate(plant_interconnection(net), c_group_names(net));
}

Behavior manifest_desired_w(const Network& net) {
  return eliminate(desired_interconnection(net), w_group_names(net));
}

Behavior hidden(const Network& net) {
  Behavior b = manifest_plant_wc(net);
  for (const auto& c : c_group_names(net)) b = zero_restrict(b, c);
  return minimize(b);
}

}  // namespace behavioral
