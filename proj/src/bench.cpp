#include "reliacut/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "reliacut/enumeration.hpp"
#include "reliacut/random.hpp"
#include "reliacut/stats.hpp"

namespace reliacut {

void ExperimentConfig::validate() const {
  if (networks.empty()) throw ConfigError("config: no networks listed");
  if (methods.empty()) throw ConfigError("config: no methods listed");
  if (nsim_tiers.empty()) throw ConfigError("config: no nsim tiers listed");
  for (std::uint64_t n : nsim_tiers)
    if (n == 0) throw ConfigError("config: nsim values must be positive");
  if (n_run < 2) throw ConfigError("config: nrun must be at least 2");
  if (beta < 1) throw ConfigError("config: beta must be positive");
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.networks = j.at("networks").get<std::vector<std::string>>();
    for (const auto& name : j.at("methods"))
      cfg.methods.push_back(method_from_name(name.get<std::string>()));
    cfg.nsim_tiers = j.at("nsim").get<std::vector<std::uint64_t>>();
    if (j.contains("beta")) cfg.beta = j.at("beta").get<int>();
    if (j.contains("timing")) cfg.record_times = j.at("timing").get<bool>();
    cfg.n_run = j.at("nrun").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InputError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

RunReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  RunReport report;
  for (std::size_t ni = 0; ni < cfg.networks.size(); ++ni) {
    Network net = load_network(cfg.networks[ni]);
    std::optional<double> exact;
    if (net.arc_count() <= cfg.enumeration_limit)
      exact = exact_reliability(net, cfg.enumeration_limit);

    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      Method method = cfg.methods[mi];
      for (std::size_t ti = 0; ti < cfg.nsim_tiers.size(); ++ti) {
        std::uint64_t n_sim = cfg.nsim_tiers[ti];
        ReportCell cell;
        cell.network = cfg.networks[ni];
        cell.method = method;
        cell.tier = static_cast<int>(ti) + 1;
        cell.n_sim = n_sim;
        cell.n_run = cfg.n_run;
        cell.exact = exact;
        for (int ri = 0; ri < cfg.n_run; ++ri) {
          RandomStream stream(mix_seed(cfg.seed, ni, mi, ti,
                                       static_cast<std::uint64_t>(ri)));
          Estimate est;
          switch (method) {
            case Method::crude:
              est = crude_mcs(net, n_sim, stream);
              break;
            case Method::bat_mcs:
              est = bat_mcs(net, cfg.beta, n_sim, stream);
              break;
            case Method::cbat_mcs:
              est = cbat_mcs(net, n_sim, stream);
              break;
          }
          cell.estimates.push_back(est.value);
          if (cfg.record_times) cell.times_s.push_back(est.wall_time_s);
        }
        cell.mean_estimate = mean(cell.estimates);
        cell.variance = sample_variance(cell.estimates);
        if (exact) {
          double mae = 0.0;
          for (double v : cell.estimates) mae += std::fabs(*exact - v);
          cell.mean_abs_error = mae / static_cast<double>(cell.estimates.size());
        }
        if (!cell.times_s.empty()) {
          cell.mean_time_s = mean(cell.times_s);
          cell.min_time_s =
              *std::min_element(cell.times_s.begin(), cell.times_s.end());
          cell.max_time_s =
              *std::max_element(cell.times_s.begin(), cell.times_s.end());
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

void append_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  out += ']';
}

std::string emit_csv(const RunReport& report) {
  std::string out =
      "network,method,tier,n_sim,n_run,mean,variance,mae,mean_time_s\n";
  for (const ReportCell& c : report.cells) {
    out += c.network + ',' + method_name(c.method) + ',' +
           std::to_string(c.tier) + ',' + std::to_string(c.n_sim) + ',' +
           std::to_string(c.n_run) + ',' + format_double(c.mean_estimate) +
           ',' + format_double(c.variance) + ',';
    if (c.mean_abs_error) out += format_double(*c.mean_abs_error);
    out += ',';
    if (c.mean_time_s) out += format_double(*c.mean_time_s);
    out += '\n';
  }
  return out;
}

// Hand-rolled writer so key order and float formatting are fixed.
std::string emit_json(const RunReport& report) {
  std::string out = "{\"cells\":[";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const ReportCell& c = report.cells[i];
    if (i) out += ',';
    out += "{\"network\":\"" + json_escape(c.network) + "\"";
    out += ",\"method\":\"" + method_name(c.method) + "\"";
    out += ",\"tier\":" + std::to_string(c.tier);
    out += ",\"n_sim\":" + std::to_string(c.n_sim);
    out += ",\"n_run\":" + std::to_string(c.n_run);
    if (c.exact) out += ",\"exact\":" + format_double(*c.exact);
    out += ",\"mean\":" + format_double(c.mean_estimate);
    out += ",\"variance\":" + format_double(c.variance);
    if (c.mean_abs_error)
      out += ",\"mae\":" + format_double(*c.mean_abs_error);
    if (c.mean_time_s) {
      out += ",\"mean_time_s\":" + format_double(*c.mean_time_s);
      out += ",\"min_time_s\":" + format_double(*c.min_time_s);
      out += ",\"max_time_s\":" + format_double(*c.max_time_s);
    }
    out += ",\"estimates\":";
    append_array(out, c.estimates);
    if (!c.times_s.empty()) {
      out += ",\"times_s\":";
      append_array(out, c.times_s);
    }
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::csv ? emit_csv(report) : emit_json(report);
}

RunReport parse_report_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  RunReport report;
  for (const auto& jc : j.at("cells")) {
    ReportCell c;
    c.network = jc.at("network").get<std::string>();
    c.method = method_from_name(jc.at("method").get<std::string>());
    c.tier = jc.at("tier").get<int>();
    c.n_sim = jc.at("n_sim").get<std::uint64_t>();
    c.n_run = jc.at("n_run").get<int>();
    if (jc.contains("exact")) c.exact = jc.at("exact").get<double>();
    c.mean_estimate = jc.at("mean").get<double>();
    c.variance = jc.at("variance").get<double>();
    if (jc.contains("mae")) c.mean_abs_error = jc.at("mae").get<double>();
    if (jc.contains("mean_time_s")) {
      c.mean_time_s = jc.at("mean_time_s").get<double>();
      c.min_time_s = jc.at("min_time_s").get<double>();
      c.max_time_s = jc.at("max_time_s").get<double>();
    }
    c.estimates = jc.at("estimates").get<std::vector<double>>();
    if (jc.contains("times_s"))
      c.times_s = jc.at("times_s").get<std::vector<double>>();
    report.cells.push_back(std::move(c));
  }
  return report;
}

Network generate_random_network(int nodes, int arcs, double prob,
                                std::uint64_t seed) {
  if (nodes < 2) throw InputError("random network needs at least 2 nodes");
  const std::uint64_t max_pairs =
      static_cast<std::uint64_t>(nodes) * (nodes - 1) / 2;
  if (arcs < 1 || static_cast<std::uint64_t>(arcs) > max_pairs)
    throw InputError("arc count must be in [1, n(n-1)/2]");
  if (!(prob >= 0.0 && prob <= 1.0))
    throw InputError("arc probability outside [0,1]");

  RandomStream stream(mix_seed(seed, 0x47454e52ULL));
  const int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<std::pair<NodeId, NodeId>> chosen;
    while (chosen.size() < static_cast<std::size_t>(arcs)) {
      NodeId u = static_cast<NodeId>(stream.next_below(nodes)) + 1;
      NodeId v = static_cast<NodeId>(stream.next_below(nodes)) + 1;
      if (u == v) continue;
      chosen.insert(std::minmax(u, v));
    }
    std::vector<Arc> arc_list;
    for (const auto& [u, v] : chosen)
      arc_list.push_back({static_cast<ArcId>(arc_list.size()) + 1, u, v});
    Network net(nodes, std::move(arc_list),
                std::vector<double>(arcs, prob), 1, nodes);
    try {
      compute_layers(net);  // structural reachability check
      return net;
    } catch (const SinkUnreachable&) {
      // resample
    }
  }
  throw InputError("could not generate a connected random network");
}

}  // namespace reliacut
