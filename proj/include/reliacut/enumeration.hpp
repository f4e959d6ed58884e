#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reliacut/network.hpp"
#include "reliacut/traversal.hpp"

namespace reliacut {

struct TooManyArcs : InputError {
  using InputError::InputError;
};

/// Default cap on exhaustive enumeration (2^30 states).
inline constexpr int kDefaultEnumerationLimit = 30;

/// Walks all binary vectors of a given length by binary addition:
/// flip the lowest zero coordinate to 1 and clear everything below it.
/// Coordinate 1 is the least-significant bit, so step i emits the
/// base-2 digits of i-1.
class BatCursor {
 public:
  explicit BatCursor(int length);

  /// Resumes mid-sequence: next() continues after `start`.
  explicit BatCursor(StateVector start);

  int length() const { return length_; }
  bool exhausted() const { return exhausted_; }
  const StateVector& current() const { return current_; }

  /// Advances to the next vector; empty once the all-ones vector has
  /// been consumed.
  std::optional<StateVector> next();

 private:
  int length_;
  StateVector current_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// All assignments of a fixed arc subset, in BAT order.
struct Superfamily {
  std::vector<ArcId> cut_arcs;
  std::vector<PartialAssignment> members;
};

/// Omega(C): all 2^b assignments of the given arcs.
Superfamily superfamily(const std::vector<ArcId>& arcs);

/// Omega_1(C): the 2^b - 1 assignments with at least one working arc;
/// BAT order preserved.
Superfamily superfamily_nonzero(const std::vector<ArcId>& arcs);

/// Exact reliability by exhausting all 2^m states. Desk-scale oracle;
/// refuses networks above the enumeration limit.
double exact_reliability(const Network& net,
                         int limit = kDefaultEnumerationLimit);

/// Exact source-sink connection probability given fixed arc states,
/// enumerating all assignments of the free arcs.
double conditional_reliability(const Network& net,
                               const PartialAssignment& fixed,
                               int limit = kDefaultEnumerationLimit);

}  // namespace reliacut
