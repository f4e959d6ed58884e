// reliacut: two-terminal binary-state network reliability toolkit.
//
// Subcommands: exact, cuts, estimate, sample-size, bench, gen-random.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reliacut/bench.hpp"
#include "reliacut/enumeration.hpp"
#include "reliacut/estimators.hpp"
#include "reliacut/network.hpp"
#include "reliacut/traversal.hpp"

namespace {

using namespace reliacut;

nlohmann::ordered_json estimate_to_json(const Estimate& est) {
  nlohmann::ordered_json j;
  j["method"] = method_name(est.method);
  j["value"] = est.value;
  j["n_sim"] = est.n_sim;
  j["n_pass"] = est.n_pass;
  if (est.method == Method::cbat_mcs) {
    j["gamma"] = est.gamma;
    j["cut"] = est.cut;
    j["exact_allocation"] = est.exact_allocation;
  }
  if (!est.per_stratum.empty()) {
    nlohmann::ordered_json strata = nlohmann::ordered_json::array();
    for (const StratumResult& s : est.per_stratum) {
      nlohmann::ordered_json js;
      nlohmann::ordered_json pa = nlohmann::ordered_json::array();
      for (const AssignedArc& e : s.assignment)
        pa.push_back({{"arc", e.arc}, {"state", e.state}});
      js["assignment"] = pa;
      js["prob"] = s.prob;
      js["n_sim"] = s.n_sim;
      js["n_pass"] = s.n_pass;
      strata.push_back(js);
    }
    j["per_stratum"] = strata;
  }
  j["seed"] = est.seed;
  j["wall_time_s"] = est.wall_time_s;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-terminal binary-state network reliability estimation"};
  app.require_subcommand(1);

  std::string net_file, config_file, out_path;
  std::string method_str = "crude", format_str = "csv";
  std::uint64_t n_sim = 10000, seed = 0;
  int beta = 2;
  int enum_limit = kDefaultEnumerationLimit;
  double rel = 0.9, eps = 0.01, alpha = 0.05, gen_prob = 0.9;
  int gen_nodes = 5, gen_arcs = 6;

  auto* exact_cmd =
      app.add_subcommand("exact", "Exact reliability by exhaustive enumeration");
  exact_cmd->add_option("file", net_file, "network file")->required();
  exact_cmd->add_option("--limit", enum_limit,
                        "max arc count for enumeration (default 30)");

  auto* cuts_cmd = app.add_subcommand("cuts", "Print layer-cuts as JSON");
  cuts_cmd->add_option("file", net_file, "network file")->required();

  auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo estimate");
  est_cmd->add_option("--method", method_str, "crude|batmcs|cbatmcs")
      ->required();
  est_cmd->add_option("--nsim", n_sim, "number of trials")->required();
  est_cmd->add_option("--seed", seed, "random seed")->required();
  est_cmd->add_option("--beta", beta, "supervector width (batmcs)");
  est_cmd->add_option("file", net_file, "network file")->required();

  auto* size_cmd =
      app.add_subcommand("sample-size", "Trials needed for a target error");
  size_cmd->add_option("--reliability", rel, "reliability guess")->required();
  size_cmd->add_option("--epsilon", eps, "relative error")->required();
  size_cmd->add_option("--alpha", alpha, "significance level")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark experiment");
  bench_cmd->add_option("--config", config_file, "experiment config JSON")
      ->required();
  bench_cmd->add_option("--out", out_path, "output path")->required();
  bench_cmd->add_option("--format", format_str, "csv|json");

  auto* gen_cmd =
      app.add_subcommand("gen-random", "Emit a seeded random network file");
  gen_cmd->add_option("--nodes", gen_nodes, "node count")->required();
  gen_cmd->add_option("--arcs", gen_arcs, "arc count")->required();
  gen_cmd->add_option("--prob", gen_prob, "per-arc working probability")
      ->required();
  gen_cmd->add_option("--seed", seed, "random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  if (exact_cmd->parsed()) {
    Network net = load_network(net_file);
    std::printf("%.10g\n", exact_reliability(net, enum_limit));
    return 0;
  }

  if (cuts_cmd->parsed()) {
    Network net = load_network(net_file);
    auto cuts = find_layer_cuts(net);
    nlohmann::ordered_json j;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const LayerCut& c : cuts)
      arr.push_back({{"index", c.index}, {"arcs", c.arcs}});
    j["cuts"] = arr;
    LayerCut super = select_super_cut(net, cuts);
    j["super_cut"] = {{"index", super.index}, {"arcs", super.arcs}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (est_cmd->parsed()) {
    Method method = method_from_name(method_str);
    Network net = load_network(net_file);
    RandomStream stream(seed);
    Estimate est;
    switch (method) {
      case Method::crude: est = crude_mcs(net, n_sim, stream); break;
      case Method::bat_mcs: est = bat_mcs(net, beta, n_sim, stream); break;
      case Method::cbat_mcs: est = cbat_mcs(net, n_sim, stream); break;
    }
    std::cout << estimate_to_json(est).dump(2) << "\n";
    return 0;
  }

  if (size_cmd->parsed()) {
    std::cout << required_sample_size(rel, eps, alpha) << "\n";
    return 0;
  }

  if (bench_cmd->parsed()) {
    if (format_str != "csv" && format_str != "json")
      throw ConfigError("format must be csv or json");
    ExperimentConfig cfg = load_experiment_config(config_file);
    RunReport report = run_experiment(cfg);
    std::string body = emit_report(
        report, format_str == "csv" ? ReportFormat::csv : ReportFormat::json);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << body;
    return 0;
  }

  if (gen_cmd->parsed()) {
    Network net = generate_random_network(gen_nodes, gen_arcs, gen_prob, seed);
    std::cout << net.serialize();
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
