#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace reliacut {

using ArcId = int;
using NodeId = int;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  using InputError::InputError;
};

/// Arc ids are dense 1..m in file order; id 1 is the least-significant
/// coordinate of every state vector.
struct Arc {
  ArcId id;
  NodeId u;
  NodeId v;
};

/// Full binary assignment over all m arcs; bits[i] holds the state of
/// arc i+1.
using StateVector = std::vector<std::uint8_t>;

struct AssignedArc {
  ArcId arc;
  std::uint8_t state;  // 0 or 1

  bool operator==(const AssignedArc&) const = default;
};

/// Binary assignment over a subset of arcs (a supervector).
using PartialAssignment = std::vector<AssignedArc>;

/// Undirected binary-state network with per-arc working probabilities.
/// Immutable after construction; safe to share across threads.
class Network {
 public:
  Network(int node_count, std::vector<Arc> arcs, std::vector<double> probs,
          NodeId source, NodeId sink);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const;
  double prob(ArcId id) const;

  /// Arcs incident to a node, ascending arc id.
  const std::vector<ArcId>& incident(NodeId node) const;

  std::string serialize() const;

 private:
  void check_arc(ArcId id) const;

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<double> probs_;  // index = arc id - 1
  NodeId source_;
  NodeId sink_;
  std::vector<std::vector<ArcId>> incident_;  // index = node id - 1
};

/// Parses the line-oriented network file format:
///   nodes <n> / source <id> / sink <id> / m lines of "arc <u> <v> <p>".
/// '#' starts a comment, blank lines are ignored.
Network parse_network(std::istream& in);
Network parse_network(const std::string& text);
Network load_network(const std::string& path);

/// Product of Pr(a) over working arcs and 1-Pr(a) over failed arcs in
/// the assignment; empty assignment yields 1.
double assignment_probability(const Network& net, const PartialAssignment& pa);

/// Probability that every listed arc fails at once.
double zero_assignment_probability(const Network& net,
                                   const std::vector<ArcId>& arcs);

/// Probability of a full state vector.
double state_probability(const Network& net, const StateVector& x);

}  // namespace reliacut
