// Acceptance suite: runs every release criterion and prints one
// PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reliacut/bench.hpp"
#include "reliacut/enumeration.hpp"
#include "reliacut/estimators.hpp"
#include "reliacut/network.hpp"
#include "reliacut/stats.hpp"
#include "reliacut/traversal.hpp"

using namespace reliacut;
namespace tst = reliacut::testing;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(const char* name) : name_(name) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  ~Criterion() {
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
    std::printf("%s %s (%.2fs)\n", ok_ ? "PASS" : "FAIL", name_, secs);
    for (const std::string& d : details_)
      std::printf("       %s\n", d.c_str());
    if (!ok_) ++g_failures;
  }

 private:
  const char* name_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void a1_paper_anchored() {
  Criterion c("A1 deterministic worked-example values");
  Network net = tst::bridge();

  LayerDecomposition d = compute_layers(net);
  c.require(d.layers.size() == 3 && d.layers[0] == std::vector<NodeId>{1} &&
                d.layers[1] == std::vector<NodeId>{2, 3} &&
                d.layers[2] == std::vector<NodeId>{4},
            "layers != {1},{2,3},{4}");

  auto cuts = find_layer_cuts(net);
  c.require(cuts.size() == 2 && cuts[0].arcs == std::vector<ArcId>{1, 2} &&
                cuts[1].arcs == std::vector<ArcId>{4, 5},
            "layer-cuts != {a1,a2},{a4,a5}");

  LayerCut super = select_super_cut(net, cuts);
  c.require(super.arcs == std::vector<ArcId>{4, 5}, "super-cut != {a4,a5}");

  Superfamily fam = superfamily_nonzero(super.arcs);
  c.require(fam.members.size() == 3 &&
                fam.members[0] == PartialAssignment{{4, 1}, {5, 0}} &&
                fam.members[1] == PartialAssignment{{4, 0}, {5, 1}} &&
                fam.members[2] == PartialAssignment{{4, 1}, {5, 1}},
            "nonzero superfamily != {(1,0),(0,1),(1,1)}");

  double gamma = normalization_factor(net, super, 16);
  c.require(gamma == 0.05, "gamma(16) != 0.05 exactly");
  c.require(gamma * 13 == 0.650, "gamma*13 != 0.650 exactly");

  double weighted = stratified_estimate({0.02, 0.18, 0.08, 0.72}, {0, 2, 1, 8},
                                        {1, 3, 2, 10});
  c.require(std::fabs(weighted - 0.7360) <= 1e-12,
            "weighted stratum sum != 0.7360");
}

void a2_decomposition_identity() {
  Criterion c("A2 cut decomposition identity vs exact oracle");
  std::vector<Network> nets = tst::random_networks(25, 90210);
  nets.insert(nets.begin(), tst::bridge());
  for (const Network& net : nets) {
    double exact = exact_reliability(net);
    for (const LayerCut& cut : find_layer_cuts(net)) {
      double total = 0.0;
      for (const PartialAssignment& pa :
           superfamily_nonzero(cut.arcs).members)
        total += assignment_probability(net, pa) *
                 conditional_reliability(net, pa);
      c.require(std::fabs(total - exact) <= 1e-12,
                "identity off by " + std::to_string(total - exact));
    }
  }
}

void a3_bat_enumeration() {
  Criterion c("A3 binary-addition-tree enumeration order");
  for (int m = 1; m <= 12; ++m) {
    BatCursor cursor(m);
    std::uint64_t step = 0;
    bool order_ok = true;
    while (auto x = cursor.next()) {
      if (pack_state(*x) != step) order_ok = false;
      ++step;
    }
    c.require(order_ok && step == (std::uint64_t{1} << m),
              "m=" + std::to_string(m) + " sequence mismatch");
  }

  // Spot-checked rows of the published 5-arc walk (iterations 2, 12,
  // 13, 32 are vectors 1, 11, 12, 31).
  BatCursor cursor(5);
  std::vector<StateVector> all;
  while (auto x = cursor.next()) all.push_back(*x);
  c.require(all[1] == StateVector{1, 0, 0, 0, 0}, "iteration 2 mismatch");
  c.require(all[11] == StateVector{1, 1, 0, 1, 0}, "iteration 12 mismatch");
  c.require(all[12] == StateVector{0, 0, 1, 1, 0}, "iteration 13 mismatch");
  c.require(all[31] == StateVector{1, 1, 1, 1, 1}, "iteration 32 mismatch");

  Network net = tst::bridge();
  double total = 0.0;
  for (const StateVector& x : all) total += state_probability(net, x);
  c.require(std::fabs(total - 1.0) <= 1e-12, "probability mass != 1");
}

void a4_connectivity_oracle() {
  Criterion c("A4 layered connectivity vs union-find oracle");
  for (const Network& net : tst::random_networks(25, 777)) {
    ConnectivityChecker checker(net);
    const std::uint64_t total = std::uint64_t{1} << net.arc_count();
    bool agree = true;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (checker.connected(mask) != tst::union_find_connected(net, mask))
        agree = false;
    c.require(agree, "disagreement on a " + std::to_string(net.arc_count()) +
                         "-arc network");
  }
}

void a5_convergence() {
  Criterion c("A5 convergence and exact expectation");
  Network net = tst::bridge();
  const std::uint64_t n_sim = 1000000;
  const double tol = 0.005;

  auto count_hits = [&](auto&& estimator) {
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
      if (std::fabs(estimator(seed) - tst::kBridgeExact) < tol) ++hits;
    return hits;
  };

  int crude_hits = count_hits([&](std::uint64_t s) {
    return crude_mcs(net, n_sim, RandomStream(s)).value;
  });
  c.require(crude_hits >= 29,
            "crude within tolerance for only " + std::to_string(crude_hits) +
                "/30 seeds");

  int bat_hits = count_hits([&](std::uint64_t s) {
    return bat_mcs(net, 2, n_sim, RandomStream(s)).value;
  });
  c.require(bat_hits >= 29, "bat_mcs within tolerance for only " +
                                std::to_string(bat_hits) + "/30 seeds");

  int cbat_hits = count_hits([&](std::uint64_t s) {
    return cbat_mcs(net, n_sim, RandomStream(s)).value;
  });
  c.require(cbat_hits >= 29, "cbat_mcs within tolerance for only " +
                                 std::to_string(cbat_hits) + "/30 seeds");

  // Exact-expectation checks.
  double exact = exact_reliability(net);
  double bat_expect = 0.0;
  for (const PartialAssignment& pa : superfamily({1, 2}).members)
    bat_expect +=
        assignment_probability(net, pa) * conditional_reliability(net, pa);
  c.require(std::fabs(bat_expect - exact) <= 1e-12,
            "bat_mcs exact expectation off");

  LayerCut cut = select_super_cut(net, find_layer_cuts(net));
  double gamma = normalization_factor(net, cut, 16);
  Superfamily fam = superfamily_nonzero(cut.arcs);
  std::vector<double> probs;
  for (const PartialAssignment& pa : fam.members)
    probs.push_back(assignment_probability(net, pa));
  BudgetAllocation alloc = allocate_budget(probs, 16);
  double cbat_expect = 0.0;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    cbat_expect += gamma * static_cast<double>(alloc.counts[i]) *
                   conditional_reliability(net, fam.members[i]);
  c.require(alloc.exact && std::fabs(cbat_expect - exact) <= 1e-12,
            "cbat_mcs exact expectation off");
}

void a6_variance_reduction() {
  Criterion c("A6 variance reduction and variance scale");
  Network net = tst::bridge();
  std::vector<double> crude_vals, cbat_vals;
  for (std::uint64_t run = 0; run < 100; ++run) {
    crude_vals.push_back(
        crude_mcs(net, 10000, RandomStream(mix_seed(6001, run))).value);
    cbat_vals.push_back(
        cbat_mcs(net, 10000, RandomStream(mix_seed(6002, run))).value);
  }
  double var_crude = sample_variance(crude_vals);
  double var_cbat = sample_variance(cbat_vals);
  c.require(var_cbat <= var_crude,
            "var(cbat)=" + std::to_string(var_cbat) +
                " > var(crude)=" + std::to_string(var_crude));

  LayerCut super = select_super_cut(net, find_layer_cuts(net));
  // (1 - 0.4*0.5)^2 lands one ulp away from the 0.64 literal.
  c.require(std::fabs(variance_scale(net, super) - 0.64) <= 1e-15,
            "variance scale != 0.64");
}

void a7_sample_size() {
  Criterion c("A7 sample-size planning");
  c.require(required_sample_size(0.9, 0.01, 0.05) == 4269,
            "N(0.9, 0.01, 0.05) != 4269");
  c.require(required_sample_size(0.5, 0.1, 0.05) == 385,
            "N(0.5, 0.1, 0.05) != 385");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void a8_reproducible_bench(const char* cli_path) {
  Criterion c("A8 byte-identical bench reruns");
  std::ofstream("accept_bridge.net", std::ios::binary) << tst::kBridgeFile;
  std::ofstream("accept_cfg.json", std::ios::binary)
      << R"({"networks": ["accept_bridge.net"],
             "methods": ["crude", "batmcs", "cbatmcs"],
             "nsim": [2000], "beta": 2, "nrun": 5, "seed": 20260826,
             "timing": false})";

  if (cli_path) {
    std::string base = std::string("\"") + cli_path +
                       "\" bench --config accept_cfg.json --format csv --out ";
    int rc1 = std::system((base + "accept_out1.csv").c_str());
    int rc2 = std::system((base + "accept_out2.csv").c_str());
    c.require(rc1 == 0 && rc2 == 0, "CLI bench invocation failed");
    std::string out1 = read_file("accept_out1.csv");
    c.require(!out1.empty() && out1 == read_file("accept_out2.csv"),
              "CSV outputs differ between invocations");
  } else {
    c.require(false, "CLI path not supplied");
  }

  // Library-level check: per-run estimates identical across reruns.
  ExperimentConfig cfg = load_experiment_config("accept_cfg.json");
  RunReport r1 = run_experiment(cfg);
  RunReport r2 = run_experiment(cfg);
  bool same = r1.cells.size() == r2.cells.size();
  for (std::size_t i = 0; same && i < r1.cells.size(); ++i)
    same = r1.cells[i].estimates == r2.cells[i].estimates;
  c.require(same, "per-run estimates differ between reruns");
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  a1_paper_anchored();
  a2_decomposition_identity();
  a3_bat_enumeration();
  a4_connectivity_oracle();
  a5_convergence();
  a6_variance_reduction();
  a7_sample_size();
  a8_reproducible_bench(cli);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
