#include "reliacut/network.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace reliacut {

Network::Network(int node_count, std::vector<Arc> arcs,
                 std::vector<double> probs, NodeId source, NodeId sink)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      probs_(std::move(probs)),
      source_(source),
      sink_(sink) {
  if (node_count_ < 2) throw InputError("network needs at least 2 nodes");
  if (source_ < 1 || source_ > node_count_)
    throw InputError("source node out of range");
  if (sink_ < 1 || sink_ > node_count_)
    throw InputError("sink node out of range");
  if (source_ == sink_) throw InputError("source and sink must differ");
  if (probs_.size() != arcs_.size())
    throw InputError("probability count does not match arc count");
  if (arcs_.size() > 64)
    throw InputError("networks with more than 64 arcs are not supported");

  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.id != static_cast<ArcId>(i) + 1)
      throw InputError("arc ids must be dense 1..m in order");
    if (a.u < 1 || a.u > node_count_ || a.v < 1 || a.v > node_count_)
      throw InputError("arc endpoint out of range");
    if (a.u == a.v) throw InputError("self-loop on node " + std::to_string(a.u));
    auto key = std::minmax(a.u, a.v);
    if (!seen.insert(key).second)
      throw InputError("parallel arc between " + std::to_string(key.first) +
                       " and " + std::to_string(key.second));
    double p = probs_[i];
    if (!(p >= 0.0 && p <= 1.0))
      throw InputError("arc probability outside [0,1]");
  }

  incident_.resize(node_count_);
  for (const Arc& a : arcs_) {
    incident_[a.u - 1].push_back(a.id);
    incident_[a.v - 1].push_back(a.id);
  }
}

const Arc& Network::arc(ArcId id) const {
  check_arc(id);
  return arcs_[id - 1];
}

double Network::prob(ArcId id) const {
  check_arc(id);
  return probs_[id - 1];
}

const std::vector<ArcId>& Network::incident(NodeId node) const {
  if (node < 1 || node > node_count_)
    throw InputError("node id out of range");
  return incident_[node - 1];
}

void Network::check_arc(ArcId id) const {
  if (id < 1 || id > arc_count())
    throw InputError("unknown arc id " + std::to_string(id));
}

std::string Network::serialize() const {
  std::ostringstream out;
  out << "nodes " << node_count_ << "\n";
  out << "source " << source_ << "\n";
  out << "sink " << sink_ << "\n";
  out.precision(17);
  for (const Arc& a : arcs_)
    out << "arc " << a.u << " " << a.v << " " << probs_[a.id - 1] << "\n";
  return out.str();
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Network parse_network(std::istream& in) {
  int node_count = -1;
  NodeId source = -1, sink = -1;
  std::vector<Arc> arcs;
  std::vector<double> probs;
  bool have_nodes = false, have_source = false, have_sink = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string key;
    if (!(line >> key)) continue;  // blank

    if (key == "nodes") {
      if (have_nodes) fail_at(lineno, "duplicate 'nodes' line");
      if (!(line >> node_count) || node_count < 1)
        fail_at(lineno, "expected 'nodes <n>' with positive n");
      have_nodes = true;
    } else if (key == "source") {
      if (!(line >> source)) fail_at(lineno, "expected 'source <id>'");
      have_source = true;
    } else if (key == "sink") {
      if (!(line >> sink)) fail_at(lineno, "expected 'sink <id>'");
      have_sink = true;
    } else if (key == "arc") {
      NodeId u, v;
      double p;
      if (!(line >> u >> v >> p))
        fail_at(lineno, "expected 'arc <u> <v> <p>'");
      arcs.push_back({static_cast<ArcId>(arcs.size()) + 1, u, v});
      probs.push_back(p);
    } else {
      fail_at(lineno, "unknown directive '" + key + "'");
    }
    std::string extra;
    if (line >> extra) fail_at(lineno, "trailing tokens");
  }

  if (!have_nodes) throw ParseError("missing 'nodes' line");
  if (!have_source) throw ParseError("missing 'source' line");
  if (!have_sink) throw ParseError("missing 'sink' line");
  return Network(node_count, std::move(arcs), std::move(probs), source, sink);
}

Network parse_network(const std::string& text) {
  std::istringstream in(text);
  return parse_network(in);
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open network file: " + path);
  return parse_network(in);
}

double assignment_probability(const Network& net, const PartialAssignment& pa) {
  double p = 1.0;
  for (const AssignedArc& e : pa) {
    double pr = net.prob(e.arc);
    p *= e.state ? pr : 1.0 - pr;
  }
  return p;
}

double zero_assignment_probability(const Network& net,
                                   const std::vector<ArcId>& arcs) {
  double p = 1.0;
  for (ArcId a : arcs) p *= 1.0 - net.prob(a);
  return p;
}

double state_probability(const Network& net, const StateVector& x) {
  if (static_cast<int>(x.size()) != net.arc_count())
    throw InputError("state vector length does not match arc count");
  double p = 1.0;
  for (int i = 0; i < net.arc_count(); ++i) {
    double pr = net.prob(i + 1);
    p *= x[i] ? pr : 1.0 - pr;
  }
  return p;
}

}  // namespace reliacut
