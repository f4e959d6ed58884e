#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reliacut/enumeration.hpp"
#include "reliacut/network.hpp"
#include "reliacut/random.hpp"
#include "reliacut/traversal.hpp"

namespace reliacut {

struct BudgetTooSmall : InputError {
  using InputError::InputError;
};

enum class Method { crude, bat_mcs, cbat_mcs };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct StratumResult {
  PartialAssignment assignment;
  double prob;
  std::uint64_t n_sim;
  std::uint64_t n_pass;
};

/// Estimator output with full trial bookkeeping.
struct Estimate {
  Method method;
  double value = 0.0;
  std::uint64_t n_sim = 0;
  std::uint64_t n_pass = 0;
  std::vector<StratumResult> per_stratum;  // empty for crude
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  // cbat_mcs only:
  double gamma = 0.0;
  std::vector<ArcId> cut;
  bool exact_allocation = false;
  bool used_gamma_formula = false;
};

/// Per-stratum trial counts summing exactly to the requested total.
struct BudgetAllocation {
  std::vector<std::uint64_t> counts;
  bool exact;  // true iff the proportional quotas were already integers
};

/// Proportional budget split: quota q_i = n_sim * p_i / sum(p). Integer
/// quotas are taken as-is; otherwise floor, raise zero counts to 1, and
/// settle the difference by largest fractional remainder (ties by lower
/// index).
BudgetAllocation allocate_budget(const std::vector<double>& stratum_probs,
                                 std::uint64_t n_sim);

/// One Bernoulli draw per free arc in ascending arc-id order; an arc
/// works when the draw is <= its probability. Fixed arcs copied as-is.
StateVector sample_state(const Network& net, const PartialAssignment& fixed,
                         RandomStream& stream);

/// Direct sampling of full state vectors: value = passes / trials.
Estimate crude_mcs(const Network& net, std::uint64_t n_sim,
                   RandomStream stream);

/// Stratified sampling over all 2^beta assignments of the first beta
/// arcs, trial budget proportional to stratum probability; value is the
/// probability-weighted sum of per-stratum pass ratios.
Estimate bat_mcs(const Network& net, int beta, std::uint64_t n_sim,
                 RandomStream stream);

/// gamma = (1 - Pr(all cut arcs failed)) / n_sim; cross-checked against
/// the sum over the nonzero superfamily to 1e-12.
double normalization_factor(const Network& net, const LayerCut& cut,
                            std::uint64_t n_sim);

/// Squared total probability of the nonzero superfamily,
/// (1 - Pr(all cut arcs failed))^2 — the variance scaling factor of the
/// cut-based estimator relative to plain stratified sampling.
double variance_scale(const Network& net, const LayerCut& cut);

/// Cut-based stratified estimator: strata are the nonzero assignments
/// of the selected super-cut. Under exact proportional allocation the
/// estimate is gamma times the pooled pass count; under rounded
/// allocation it falls back to the probability-weighted ratio sum.
Estimate cbat_mcs(const Network& net, std::uint64_t n_sim,
                  RandomStream stream);

/// Trials needed for relative error epsilon at confidence 1 - alpha:
/// ceil(z^2 * (1 - R) / (epsilon^2 * R)).
std::uint64_t required_sample_size(double reliability_guess, double epsilon,
                                   double alpha);

/// Probability-weighted sum of per-stratum pass ratios; strata with no
/// trials contribute zero.
double stratified_estimate(const std::vector<double>& probs,
                           const std::vector<std::uint64_t>& passes,
                           const std::vector<std::uint64_t>& trials);

}  // namespace reliacut
