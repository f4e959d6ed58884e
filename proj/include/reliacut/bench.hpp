#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reliacut/estimators.hpp"
#include "reliacut/network.hpp"

namespace reliacut {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::vector<std::string> networks;  // file paths
  std::vector<Method> methods;
  std::vector<std::uint64_t> nsim_tiers;
  int beta = 2;        // bat_mcs only
  int n_run = 30;
  std::uint64_t seed = 0;
  // When false the report carries no wall times, making the emitted
  // bytes a pure function of (config, seed).
  bool record_times = true;
  int enumeration_limit = kDefaultEnumerationLimit;

  void validate() const;
};

/// Parses the config JSON:
///   {"networks": [...], "methods": [...], "nsim": [...],
///    "beta": int, "nrun": int, "seed": int}
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Aggregated statistics for one (network, method, tier) cell; every
/// derived figure is recomputable from the stored per-run estimates.
struct ReportCell {
  std::string network;
  Method method;
  int tier;  // 1-based index into nsim_tiers
  std::uint64_t n_sim;
  int n_run;
  std::vector<double> estimates;
  std::vector<double> times_s;  // empty when timing is disabled
  std::optional<double> exact;  // absent when enumeration is infeasible
  double mean_estimate;
  double variance;
  std::optional<double> mean_abs_error;
  std::optional<double> mean_time_s;
  std::optional<double> min_time_s;
  std::optional<double> max_time_s;
};

struct RunReport {
  std::vector<ReportCell> cells;
};

/// Runs n_run independent estimates per (network, method, tier) with
/// seeds derived from (base seed, network index, method index, tier
/// index, run index). Exact reliability is computed once per network
/// when the arc count permits.
RunReport run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json };

/// CSV: one row per cell. JSON: lossless, canonical key order, floats
/// printed with 10 significant digits; emit -> parse -> emit is
/// byte-identical.
std::string emit_report(const RunReport& report, ReportFormat format);

RunReport parse_report_json(const std::string& json_text);

/// Seeded random network: n nodes, m distinct arcs all with working
/// probability p, regenerated until the sink is structurally reachable.
Network generate_random_network(int nodes, int arcs, double prob,
                                std::uint64_t seed);

/// Formats a double with 10 significant digits (the report float style).
std::string format_double(double x);

}  // namespace reliacut
