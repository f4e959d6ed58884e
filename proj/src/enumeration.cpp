#include "reliacut/enumeration.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace reliacut {

BatCursor::BatCursor(int length) : length_(length), current_(length, 0) {
  if (length < 1) throw InputError("BAT length must be positive");
}

BatCursor::BatCursor(StateVector start)
    : length_(static_cast<int>(start.size())),
      current_(std::move(start)),
      started_(true) {
  if (length_ < 1) throw InputError("BAT length must be positive");
  for (auto bit : current_)
    if (bit > 1) throw InputError("state vector entries must be 0 or 1");
}

std::optional<StateVector> BatCursor::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;  // the all-zero vector
  }
  // Saturation rule: set the first failed coordinate, clear the lower ones.
  int k = 0;
  while (k < length_ && current_[k] == 1) ++k;
  if (k == length_) {
    exhausted_ = true;
    return std::nullopt;
  }
  current_[k] = 1;
  std::fill(current_.begin(), current_.begin() + k, std::uint8_t{0});
  return current_;
}

namespace {

void check_arcs(const std::vector<ArcId>& arcs) {
  if (arcs.empty()) throw InputError("arc list must be non-empty");
  std::set<ArcId> distinct(arcs.begin(), arcs.end());
  if (distinct.size() != arcs.size())
    throw InputError("arc list contains duplicates");
  if (arcs.size() > 63) throw TooManyArcs("arc subset too large to enumerate");
}

}  // namespace

Superfamily superfamily(const std::vector<ArcId>& arcs) {
  check_arcs(arcs);
  Superfamily fam{arcs, {}};
  const std::size_t b = arcs.size();
  fam.members.reserve(std::size_t{1} << b);
  BatCursor cursor(static_cast<int>(b));
  while (auto x = cursor.next()) {
    PartialAssignment pa;
    pa.reserve(b);
    for (std::size_t i = 0; i < b; ++i) pa.push_back({arcs[i], (*x)[i]});
    fam.members.push_back(std::move(pa));
  }
  return fam;
}

Superfamily superfamily_nonzero(const std::vector<ArcId>& arcs) {
  Superfamily fam = superfamily(arcs);
  fam.members.erase(fam.members.begin());  // BAT emits all-zero first
  return fam;
}

namespace {

void check_enum_size(int free_arcs, int limit) {
  if (free_arcs > limit)
    throw TooManyArcs("enumeration over " + std::to_string(free_arcs) +
                      " arcs exceeds the limit of " + std::to_string(limit));
}

}  // namespace

double exact_reliability(const Network& net, int limit) {
  return conditional_reliability(net, {}, limit);
}

double conditional_reliability(const Network& net,
                               const PartialAssignment& fixed, int limit) {
  const int m = net.arc_count();
  std::vector<int> state_of(m + 1, -1);  // -1 = free
  for (const AssignedArc& e : fixed) {
    if (e.arc < 1 || e.arc > m)
      throw InputError("unknown arc id " + std::to_string(e.arc));
    if (state_of[e.arc] != -1)
      throw InputError("duplicate arc in fixed assignment");
    state_of[e.arc] = e.state;
  }

  std::vector<ArcId> free_arcs;
  std::uint64_t fixed_mask = 0;
  for (ArcId a = 1; a <= m; ++a) {
    if (state_of[a] == -1)
      free_arcs.push_back(a);
    else if (state_of[a] == 1)
      fixed_mask |= std::uint64_t{1} << (a - 1);
  }
  const int f = static_cast<int>(free_arcs.size());
  check_enum_size(f, limit);

  ConnectivityChecker checker(net);
  const std::uint64_t total = std::uint64_t{1} << f;
  double reliability = 0.0;
  for (std::uint64_t word = 0; word < total; ++word) {
    std::uint64_t mask = fixed_mask;
    double p = 1.0;
    for (int i = 0; i < f; ++i) {
      double pr = net.prob(free_arcs[i]);
      if ((word >> i) & 1) {
        mask |= std::uint64_t{1} << (free_arcs[i] - 1);
        p *= pr;
      } else {
        p *= 1.0 - pr;
      }
    }
    if (p != 0.0 && checker.connected(mask)) reliability += p;
  }
  return reliability;
}

}  // namespace reliacut
