// behaviorctl: batch front end for the behavior/network toolbox.
//
// Subcommands: info, synth, check, eliminate. All commands are
// file-in/file-out; exit code 0 on success, 1 when a requested check fails,
// 2 on input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "behavioral/oracle.hpp"
#include "behavioral/regularity.hpp"
#include "behavioral/synthesis.hpp"
#include "behavioral/textfmt.hpp"

namespace bh = behavioral;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

bh::Network load_network(const bh::ModelFile& model, const std::string& name) {
  bh::Network net = bh::instantiate(model, name);
  bh::require_valid(net);
  return net;
}

int run_info(const std::string& model_path, const std::string& name) {
  const bh::ModelFile model = bh::parse_model(read_file(model_path));
  if (model.has_behavior(name)) {
    const bh::Behavior& b = model.behavior(name);
    const auto card = bh::cardinalities(b);
    std::cout << "behavior " << name << ": vars " << b.variable_count() << " (";
    const auto& groups = b.sig.groups();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << groups[i].name << ":" << groups[i].dim;
    }
    std::cout << "), rows " << b.row_count() << ", p=" << card.p << ", m=" << card.m << ", "
              << (bh::is_minimal(b) ? "minimal" : "not minimal") << "\n";
    return kExitOk;
  }
  if (model.has_network(name)) {
    const bh::Network net = bh::instantiate(model, name);
    const auto violations = bh::validate(net);
    std::cout << "network " << name << ": " << net.subsystems.size() << " subsystems, "
              << net.edges.size() << " edges, "
              << (violations.empty() ? "valid" : "INVALID") << "\n";
    for (const auto& v : violations) std::cout << "  violation: " << bh::to_string(v) << "\n";
    return violations.empty() ? kExitOk : kExitCheckFailed;
  }
  throw std::invalid_argument("'" + name + "' is not defined in " + model_path);
}

int run_synth(const std::string& model_path, const std::string& network, const std::string& out,
              bool check) {
  const bh::ModelFile model = bh::parse_model(read_file(model_path));
  const bh::Network net = load_network(model, network);

  if (check) {
    const bh::ImplementabilityReport report = bh::check_implementability(net);
    if (!report.ok()) {
      std::cerr << "implementability check failed: " << bh::to_string(report.verdict) << "\n";
      if (report.witness)
        std::cerr << "  inclusion '" << report.witness->inclusion << "' fails at row "
                  << report.witness->row << ": " << report.witness->equation << "\n";
      return kExitCheckFailed;
    }
  }

  std::string text;
  for (std::size_t m = 1; m <= net.subsystems.size(); ++m) {
    const bh::Behavior local = bh::local_canonical(net, m);
    if (!text.empty()) text += "\n";
    text += bh::serialize("C" + std::to_string(m) + "can", local, /*canonical=*/true);
  }
  text += "\n" + bh::serialize("CIcan", bh::distributed_canonical(net), /*canonical=*/true);
  write_file(out, text);
  std::cout << "wrote " << net.subsystems.size() << " local controllers and CIcan to " << out
            << "\n";
  return kExitOk;
}

std::vector<bh::Rational> make_samples(std::size_t count, unsigned long seed) {
  if (seed == 0) return bh::sample_points(count);
  std::mt19937_64 rng(seed);
  std::vector<bh::Rational> samples;
  while (samples.size() < count) {
    const long num = static_cast<long>(rng() % 101) - 50;
    const long den = 1 + static_cast<long>(rng() % 8);
    const bh::Rational q = bh::make_rational(num, den);
    if (std::find(samples.begin(), samples.end(), q) == samples.end()) samples.push_back(q);
  }
  return samples;
}

struct CheckContext {
  bh::Network net;
  bool cross_validate = false;
  unsigned long seed = 0;
  std::size_t samples = 0;
};

json check_impl(const CheckContext& ctx) {
  const bh::ImplementabilityReport report = bh::check_implementability(ctx.net);
  json j;
  j["name"] = "impl";
  j["pass"] = report.ok();
  j["verdict"] = bh::to_string(report.verdict);
  if (report.witness) {
    j["failed_inclusion"] = report.witness->inclusion;
    j["witness_row"] = report.witness->row;
    j["witness_equation"] = report.witness->equation;
  }
  const bh::Behavior hidden_w = bh::hidden(ctx.net);
  const bh::Behavior desired_w = bh::manifest_desired_w(ctx.net);
  const bh::Behavior plant_w = bh::manifest_plant_w(ctx.net);
  j["p_hidden"] = bh::cardinalities(hidden_w).p;
  j["p_desired"] = bh::cardinalities(desired_w).p;
  j["p_plant"] = bh::cardinalities(plant_w).p;

  if (ctx.cross_validate) {
    const std::size_t count =
        ctx.samples ? ctx.samples : bh::default_sample_count(desired_w);
    const auto samples = make_samples(count, ctx.seed);
    json oracle = json::array();
    const auto run = [&](const bh::Behavior& lo, const bh::Behavior& hi, const char* label,
                         bool algebraic) {
      const auto cross = bh::randomized_inclusion(lo, hi, samples);
      json o;
      o["inclusion"] = label;
      o["algebraic"] = algebraic;
      o["oracle_consistent"] = cross.consistent;
      if (algebraic && !cross.consistent) {
        o["internal_error"] =
            "oracle refuted an algebraically established inclusion; this is a bug";
        std::cerr << "INTERNAL ERROR: oracle refuted inclusion '" << label << "' at rate "
                  << bh::to_string(cross.refutation->rate) << "\n";
      }
      oracle.push_back(o);
      return !algebraic || cross.consistent;
    };
    bool sane = true;
    sane &= run(hidden_w, desired_w, "hidden within desired",
                bh::includes(hidden_w, desired_w));
    sane &= run(desired_w, plant_w, "desired within plant",
                bh::includes(desired_w, plant_w));
    j["oracle"] = oracle;
    j["samples"] = samples.size();
    if (!sane) j["pass"] = false;
  }
  return j;
}

json check_reg_pc(const CheckContext& ctx) {
  const bh::Behavior controller = bh::distributed_canonical(ctx.net);
  const bool pass = bh::plant_controller_regular(ctx.net, controller);
  const bh::Behavior plant_wc = bh::manifest_plant_wc(ctx.net);
  const bh::Behavior ctrl_c = bh::eliminate(controller, bh::c_group_names(ctx.net));
  json j;
  j["name"] = "reg-pc";
  j["pass"] = pass;
  j["p_plant_wc"] = bh::cardinalities(plant_wc).p;
  j["p_controller_c"] = bh::cardinalities(ctrl_c).p;
  return j;
}

json check_reg_cc(const CheckContext& ctx) {
  json j;
  j["name"] = "reg-cc";
  json detail = json::array();
  bool pass = true;

  const bool pair_template = ctx.net.subsystems.size() == 2 && ctx.net.edges.size() == 1 &&
                             ctx.net.subsystems[0].plant.sig.groups().size() == 3 &&
                             ctx.net.subsystems[1].plant.sig.groups().size() == 3 &&
                             ctx.net.subsystems[0].desired.sig.groups().size() == 2 &&
                             ctx.net.subsystems[1].desired.sig.groups().size() == 2;
  if (pair_template) {
    const auto& s1 = ctx.net.subsystems[0];
    const auto& s2 = ctx.net.subsystems[1];
    const bool regular = bh::pairwise_canonical_regular(s1.plant, s1.desired, s2.plant, s2.desired);
    const bh::BlockLN blocks = bh::assemble_block_ln(s1.plant, s1.desired, s2.plant, s2.desired);
    json d;
    d["edge"] = {1, 2};
    d["regular"] = regular;
    d["rank_l1n1"] = bh::rank(blocks.l1n1());
    d["rank_l2n2"] = bh::rank(blocks.l2n2());
    d["rank_stack"] = bh::rank(blocks.stacked());
    detail.push_back(d);
    pass = regular;
  } else {
    for (std::size_t ei = 0; ei < ctx.net.edges.size(); ++ei) {
      const bh::Edge& e = ctx.net.edges[ei];
      bh::Behavior ci = bh::local_canonical(ctx.net, e.i);
      bh::Behavior cj = bh::local_canonical(ctx.net, e.j);
      std::vector<bh::SharedPair> shared;
      const std::string si = bh::plant_edge_group(ctx.net, e.i, ei);
      const std::string sj = bh::plant_edge_group(ctx.net, e.j, ei);
      if (!si.empty() && !sj.empty()) shared.emplace_back(si, sj);
      const std::string ki = bh::desired_edge_group(ctx.net, e.i, ei);
      const std::string kj = bh::desired_edge_group(ctx.net, e.j, ei);
      if (!ki.empty() && !kj.empty()) shared.emplace_back(ki, kj);
      const bool regular = bh::is_regular(ci, cj, shared);
      json d;
      d["edge"] = {e.i, e.j};
      d["regular"] = regular;
      detail.push_back(d);
      pass = pass && regular;
    }
  }
  j["pass"] = pass;
  j["pairs"] = detail;
  return j;
}

json check_free_c(const CheckContext& ctx) {
  const bool pass = bh::free_control_sufficient(ctx.net);
  json j;
  j["name"] = "free-c";
  j["pass"] = pass;
  j["manifest_c_rows"] = bh::manifest_plant_c(ctx.net).kernel.rows();
  return j;
}

int run_check(const std::string& model_path, const std::string& network,
              std::vector<std::string> what, bool as_json, bool cross_validate,
              unsigned long seed, std::size_t samples) {
  const bh::ModelFile model = bh::parse_model(read_file(model_path));
  CheckContext ctx{load_network(model, network), cross_validate, seed, samples};

  if (what.empty()) what = {"impl", "reg-pc", "reg-cc", "free-c"};
  json verdicts = json::array();
  for (const auto& name : what) {
    if (name == "impl")
      verdicts.push_back(check_impl(ctx));
    else if (name == "reg-pc")
      verdicts.push_back(check_reg_pc(ctx));
    else if (name == "reg-cc")
      verdicts.push_back(check_reg_cc(ctx));
    else if (name == "free-c")
      verdicts.push_back(check_free_c(ctx));
    else
      throw std::invalid_argument("unknown check '" + name +
                                  "' (expected impl, reg-pc, reg-cc or free-c)");
  }

  bool all_pass = true;
  for (const auto& v : verdicts) all_pass = all_pass && v["pass"].get<bool>();

  if (as_json) {
    json out;
    out["command"] = "check";
    out["model"] = model_path;
    out["network"] = network;
    out["verdicts"] = verdicts;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : verdicts)
      std::cout << (v["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                << v["name"].get<std::string>() << "\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_eliminate(const std::string& model_path, const std::string& name,
                  const std::vector<std::string>& keep, const std::string& out) {
  const bh::ModelFile model = bh::parse_model(read_file(model_path));
  if (!model.has_behavior(name))
    throw std::invalid_argument("behavior '" + name + "' is not defined in " + model_path);
  const bh::Behavior manifest = bh::eliminate(model.behavior(name), keep);
  write_file(out, bh::serialize(name, manifest));
  std::cout << "wrote " << name << " restricted to " << keep.size() << " group(s) to " << out
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-representation toolbox for interconnected linear differential systems"};
  app.require_subcommand(1);

  std::string model_path, network, name, out;
  std::vector<std::string> checks, keep;
  bool check_flag = false, json_flag = false, cross_validate = false;
  unsigned long seed = 0;
  std::size_t samples = 0;

  CLI::App* info = app.add_subcommand("info", "Signature, row count and cardinalities of a name");
  info->add_option("--model", model_path, "model file (.bhv)")->required();
  info->add_option("name", name, "behavior or network name")->required();

  CLI::App* synth = app.add_subcommand(
      "synth", "Write the local canonical controllers and their interconnection");
  synth->add_option("--model", model_path, "model file (.bhv)")->required();
  synth->add_option("--network", network, "network name")->required();
  synth->add_option("--out", out, "output model file")->required();
  synth->add_flag("--check", check_flag, "refuse when the desired behavior is not implementable");

  CLI::App* check = app.add_subcommand("check", "Implementability and regularity verdicts");
  check->add_option("--model", model_path, "model file (.bhv)")->required();
  check->add_option("--network", network, "network name")->required();
  check->add_option("checks", checks, "impl, reg-pc, reg-cc, free-c (default: all)");
  check->add_flag("--json", json_flag, "machine-readable output");
  check->add_flag("--cross-validate", cross_validate,
                  "sample exponential solutions against the algebraic verdicts");
  check->add_option("--seed", seed, "seed for randomized oracle sample points (0: fixed grid)");
  check->add_option("--samples", samples, "number of oracle sample points (0: automatic)");

  CLI::App* elim = app.add_subcommand("eliminate", "Write a manifest behavior");
  elim->add_option("--model", model_path, "model file (.bhv)")->required();
  elim->add_option("name", name, "behavior name")->required();
  elim->add_option("--keep", keep, "variable groups to keep")->required()->delimiter(',');
  elim->add_option("--out", out, "output model file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return run_info(model_path, name);
    if (*synth) return run_synth(model_path, network, out, check_flag);
    if (*check)
      return run_check(model_path, network, checks, json_flag, cross_validate, seed, samples);
    if (*elim) return run_eliminate(model_path, name, keep, out);
  } catch (const bh::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
