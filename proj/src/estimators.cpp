#include "reliacut/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "reliacut/stats.hpp"

namespace reliacut {

std::string method_name(Method m) {
  switch (m) {
    case Method::crude: return "crude";
    case Method::bat_mcs: return "batmcs";
    case Method::cbat_mcs: return "cbatmcs";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "crude") return Method::crude;
  if (name == "batmcs" || name == "bat_mcs") return Method::bat_mcs;
  if (name == "cbatmcs" || name == "cbat_mcs") return Method::cbat_mcs;
  throw InputError("unknown method '" + name + "'");
}

BudgetAllocation allocate_budget(const std::vector<double>& stratum_probs,
                                 std::uint64_t n_sim) {
  const std::size_t k = stratum_probs.size();
  if (k == 0) throw InputError("no strata to allocate");
  if (n_sim < k)
    throw BudgetTooSmall("budget " + std::to_string(n_sim) +
                         " below stratum count " + std::to_string(k));
  double total = 0.0;
  for (double p : stratum_probs) {
    if (!(p > 0.0)) throw InputError("stratum probabilities must be positive");
    total += p;
  }

  std::vector<double> quota(k);
  for (std::size_t i = 0; i < k; ++i)
    quota[i] = static_cast<double>(n_sim) * stratum_probs[i] / total;

  bool integral = true;
  std::uint64_t rounded_sum = 0;
  std::vector<std::uint64_t> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    double r = std::nearbyint(quota[i]);
    if (std::fabs(quota[i] - r) > 1e-9 * std::max(1.0, quota[i])) {
      integral = false;
      break;
    }
    counts[i] = static_cast<std::uint64_t>(r);
    rounded_sum += counts[i];
  }
  if (integral && rounded_sum == n_sim) return {std::move(counts), true};

  std::vector<double> remainder(k);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    counts[i] = static_cast<std::uint64_t>(std::floor(quota[i]));
    remainder[i] = quota[i] - static_cast<double>(counts[i]);
    if (counts[i] == 0) counts[i] = 1;  // every stratum gets sampled
    assigned += counts[i];
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });

  if (assigned < n_sim) {
    std::uint64_t deficit = n_sim - assigned;
    for (std::size_t pos = 0; deficit > 0; pos = (pos + 1) % k) {
      ++counts[order[pos]];
      --deficit;
    }
  } else if (assigned > n_sim) {
    // The min-1 raises overshot the budget; reclaim from the strata
    // with the smallest remainders that can spare a trial.
    std::uint64_t excess = assigned - n_sim;
    for (std::size_t pos = k; excess > 0;) {
      pos = (pos == 0) ? k - 1 : pos - 1;
      std::size_t i = order[pos];
      if (counts[i] > 1) {
        --counts[i];
        --excess;
      }
    }
  }
  return {std::move(counts), false};
}

namespace {

struct FreeArcs {
  std::vector<ArcId> ids;
  std::vector<double> probs;
  std::uint64_t fixed_mask = 0;
};

FreeArcs split_free_arcs(const Network& net, const PartialAssignment& fixed) {
  const int m = net.arc_count();
  std::vector<int> state_of(m + 1, -1);
  for (const AssignedArc& e : fixed) {
    if (e.arc < 1 || e.arc > m)
      throw InputError("unknown arc id " + std::to_string(e.arc));
    if (state_of[e.arc] != -1)
      throw InputError("duplicate arc in fixed assignment");
    state_of[e.arc] = e.state;
  }
  FreeArcs out;
  for (ArcId a = 1; a <= m; ++a) {
    if (state_of[a] == -1) {
      out.ids.push_back(a);
      out.probs.push_back(net.prob(a));
    } else if (state_of[a] == 1) {
      out.fixed_mask |= std::uint64_t{1} << (a - 1);
    }
  }
  return out;
}

std::uint64_t sample_mask(const FreeArcs& free, RandomStream& stream) {
  std::uint64_t mask = free.fixed_mask;
  for (std::size_t i = 0; i < free.ids.size(); ++i) {
    if (stream.next_uniform() <= free.probs[i])
      mask |= std::uint64_t{1} << (free.ids[i] - 1);
  }
  return mask;
}

/// Runs `trials` conditional trials and counts connected outcomes.
std::uint64_t run_trials(const Network& net, const FreeArcs& free,
                         std::uint64_t trials, RandomStream stream,
                         ConnectivityChecker& checker) {
  std::uint64_t passes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (checker.connected(sample_mask(free, stream))) ++passes;
  }
  return passes;
}

class WallClock {
 public:
  double elapsed_s() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

StateVector sample_state(const Network& net, const PartialAssignment& fixed,
                         RandomStream& stream) {
  FreeArcs free = split_free_arcs(net, fixed);
  return unpack_state(sample_mask(free, stream), net.arc_count());
}

Estimate crude_mcs(const Network& net, std::uint64_t n_sim,
                   RandomStream stream) {
  if (n_sim < 1) throw InputError("n_sim must be positive");
  WallClock clock;
  FreeArcs free = split_free_arcs(net, {});
  ConnectivityChecker checker(net);
  RandomStream sub = stream.substream(0);
  std::uint64_t passes = run_trials(net, free, n_sim, sub, checker);

  Estimate est;
  est.method = Method::crude;
  est.n_sim = n_sim;
  est.n_pass = passes;
  est.value = static_cast<double>(passes) / static_cast<double>(n_sim);
  est.seed = stream.seed();
  est.wall_time_s = clock.elapsed_s();
  return est;
}

double stratified_estimate(const std::vector<double>& probs,
                           const std::vector<std::uint64_t>& passes,
                           const std::vector<std::uint64_t>& trials) {
  if (probs.size() != passes.size() || probs.size() != trials.size())
    throw InputError("stratified_estimate: mismatched lengths");
  double value = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (trials[i] == 0) continue;
    value += probs[i] * static_cast<double>(passes[i]) /
             static_cast<double>(trials[i]);
  }
  return value;
}

namespace {

/// Shared core of the stratified estimators: allocates the budget over
/// the positive-probability strata, runs the conditional trials with
/// one sub-stream per stratum, and fills the per-stratum bookkeeping.
Estimate run_stratified(const Network& net,
                        const std::vector<PartialAssignment>& strata,
                        std::uint64_t n_sim, const RandomStream& stream) {
  const std::size_t k = strata.size();
  std::vector<double> probs(k);
  std::vector<std::size_t> active;  // strata that receive trials
  for (std::size_t i = 0; i < k; ++i) {
    probs[i] = assignment_probability(net, strata[i]);
    if (probs[i] > 0.0) active.push_back(i);
  }
  if (active.empty()) throw InputError("all strata have probability zero");

  std::vector<double> active_probs;
  for (std::size_t i : active) active_probs.push_back(probs[i]);
  BudgetAllocation budget = allocate_budget(active_probs, n_sim);

  Estimate est;
  est.n_sim = n_sim;
  est.seed = stream.seed();
  est.exact_allocation = budget.exact;
  est.per_stratum.resize(k);

  ConnectivityChecker checker(net);
  std::vector<std::uint64_t> trial_counts(k, 0), pass_counts(k, 0);
  for (std::size_t j = 0; j < active.size(); ++j)
    trial_counts[active[j]] = budget.counts[j];

  for (std::size_t i = 0; i < k; ++i) {
    if (trial_counts[i] > 0) {
      FreeArcs free = split_free_arcs(net, strata[i]);
      RandomStream sub = stream.substream(i);
      pass_counts[i] = run_trials(net, free, trial_counts[i], sub, checker);
    }
    est.per_stratum[i] = {strata[i], probs[i], trial_counts[i],
                          pass_counts[i]};
    est.n_pass += pass_counts[i];
  }
  est.value = stratified_estimate(probs, pass_counts, trial_counts);
  return est;
}

}  // namespace

Estimate bat_mcs(const Network& net, int beta, std::uint64_t n_sim,
                 RandomStream stream) {
  const int m = net.arc_count();
  if (beta < 1 || beta >= m)
    throw InputError("beta must satisfy 1 <= beta < m");
  if (beta >= 63 || n_sim < (std::uint64_t{1} << beta))
    throw BudgetTooSmall("n_sim must be at least 2^beta");
  WallClock clock;

  std::vector<ArcId> head(beta);
  std::iota(head.begin(), head.end(), 1);
  Superfamily fam = superfamily(head);

  Estimate est = run_stratified(net, fam.members, n_sim, stream);
  est.method = Method::bat_mcs;
  est.wall_time_s = clock.elapsed_s();
  return est;
}

double normalization_factor(const Network& net, const LayerCut& cut,
                            std::uint64_t n_sim) {
  if (n_sim < 1) throw InputError("n_sim must be positive");
  double from_zero = 1.0 - zero_assignment_probability(net, cut.arcs);
  Superfamily fam = superfamily_nonzero(cut.arcs);
  double from_sum = 0.0;
  for (const PartialAssignment& pa : fam.members)
    from_sum += assignment_probability(net, pa);
  if (std::fabs(from_zero - from_sum) > 1e-12)
    throw InputError("normalization factor cross-check failed");
  return from_zero / static_cast<double>(n_sim);
}

double variance_scale(const Network& net, const LayerCut& cut) {
  double mass = 1.0 - zero_assignment_probability(net, cut.arcs);
  return mass * mass;
}

Estimate cbat_mcs(const Network& net, std::uint64_t n_sim,
                  RandomStream stream) {
  WallClock clock;
  LayerCut cut = select_super_cut(net, find_layer_cuts(net));
  const std::size_t b = cut.arcs.size();
  if (b >= 63 || n_sim < (std::uint64_t{1} << b) - 1)
    throw BudgetTooSmall("n_sim must be at least 2^b - 1 for a b-arc cut");

  Superfamily fam = superfamily_nonzero(cut.arcs);
  double gamma = normalization_factor(net, cut, n_sim);

  Estimate est = run_stratified(net, fam.members, n_sim, stream);
  est.method = Method::cbat_mcs;
  est.gamma = gamma;
  est.cut = cut.arcs;
  if (est.exact_allocation) {
    // Exact proportional allocation: the weighted ratio sum collapses
    // to gamma times the pooled pass count.
    est.value = gamma * static_cast<double>(est.n_pass);
    est.used_gamma_formula = true;
  }
  est.wall_time_s = clock.elapsed_s();
  return est;
}

std::uint64_t required_sample_size(double reliability_guess, double epsilon,
                                   double alpha) {
  if (!(reliability_guess > 0.0 && reliability_guess <= 1.0))
    throw InputError("reliability guess must be in (0, 1]");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("alpha must be in (0, 1)");
  if (reliability_guess == 1.0) return 0;
  double z = normal_quantile(1.0 - alpha / 2.0);
  double n = z * z * (1.0 - reliability_guess) /
             (epsilon * epsilon * reliability_guess);
  return static_cast<std::uint64_t>(std::ceil(n));
}

}  // namespace reliacut
