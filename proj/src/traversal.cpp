#include "reliacut/traversal.hpp"

#include <algorithm>

namespace reliacut {

std::uint64_t pack_state(const StateVector& x) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

StateVector unpack_state(std::uint64_t mask, int m) {
  StateVector x(m);
  for (int i = 0; i < m; ++i)
    x[i] = static_cast<std::uint8_t>((mask >> i) & 1);
  return x;
}

ConnectivityChecker::ConnectivityChecker(const Network& net)
    : net_(net), visited_(net.node_count() + 1, 0) {
  frontier_.reserve(net.node_count());
  next_.reserve(net.node_count());
}

bool ConnectivityChecker::connected(std::uint64_t arc_mask) {
  const NodeId sink = net_.sink();
  std::fill(visited_.begin(), visited_.end(), std::uint8_t{0});
  frontier_.clear();
  frontier_.push_back(net_.source());
  visited_[net_.source()] = 1;
  const int max_layers = net_.node_count() - 1;
  for (int step = 0; step < max_layers && !frontier_.empty(); ++step) {
    next_.clear();
    for (NodeId u : frontier_) {
      for (ArcId id : net_.incident(u)) {
        if (!((arc_mask >> (id - 1)) & 1)) continue;
        const Arc& a = net_.arc(id);
        NodeId w = (a.u == u) ? a.v : a.u;
        if (visited_[w]) continue;
        if (w == sink) return true;
        visited_[w] = 1;
        next_.push_back(w);
      }
    }
    frontier_.swap(next_);
  }
  return false;
}

bool plsa_connected(const Network& net, const StateVector& x) {
  if (static_cast<int>(x.size()) != net.arc_count())
    throw InputError("state vector length does not match arc count");
  ConnectivityChecker checker(net);
  return checker.connected(pack_state(x));
}

namespace {

// Full-network breadth layering; stops after the layer holding the sink
// (when stop_at_sink) or when no new nodes appear.
std::vector<std::vector<NodeId>> layer_expand(const Network& net,
                                              bool stop_at_sink) {
  std::vector<std::uint8_t> visited(net.node_count() + 1, 0);
  std::vector<std::vector<NodeId>> layers;
  layers.push_back({net.source()});
  visited[net.source()] = 1;
  for (;;) {
    const std::vector<NodeId>& prev = layers.back();
    if (stop_at_sink &&
        std::find(prev.begin(), prev.end(), net.sink()) != prev.end())
      break;
    std::vector<NodeId> next;
    // Candidate arcs scanned in ascending id for a platform-stable order.
    for (const Arc& a : net.arcs()) {
      NodeId to;
      if (!visited[a.v] &&
          std::find(prev.begin(), prev.end(), a.u) != prev.end()) {
        to = a.v;
      } else if (!visited[a.u] &&
                 std::find(prev.begin(), prev.end(), a.v) != prev.end()) {
        to = a.u;
      } else {
        continue;
      }
      visited[to] = 1;
      next.push_back(to);
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

int sink_layer_index(const std::vector<std::vector<NodeId>>& layers,
                     NodeId sink) {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (std::find(layers[i].begin(), layers[i].end(), sink) !=
        layers[i].end())
      return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

LayerDecomposition compute_layers(const Network& net) {
  auto layers = layer_expand(net, /*stop_at_sink=*/true);
  if (sink_layer_index(layers, net.sink()) == 0)
    throw SinkUnreachable("sink is not reachable from the source");
  return LayerDecomposition{std::move(layers)};
}

std::vector<LayerCut> find_layer_cuts(const Network& net) {
  auto layers = layer_expand(net, /*stop_at_sink=*/false);
  int sink_layer = sink_layer_index(layers, net.sink());
  if (sink_layer == 0)
    throw SinkUnreachable("sink is not reachable from the source");

  // Only boundaries before the sink's layer separate source from sink.
  std::vector<LayerCut> cuts;
  for (int k = 1; k < sink_layer; ++k) {
    const auto& lo = layers[k - 1];
    const auto& hi = layers[k];
    LayerCut cut{{}, k};
    for (const Arc& a : net.arcs()) {
      bool u_lo = std::binary_search(lo.begin(), lo.end(), a.u);
      bool v_lo = std::binary_search(lo.begin(), lo.end(), a.v);
      bool u_hi = std::binary_search(hi.begin(), hi.end(), a.u);
      bool v_hi = std::binary_search(hi.begin(), hi.end(), a.v);
      if ((u_lo && v_hi) || (v_lo && u_hi)) cut.arcs.push_back(a.id);
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

LayerCut select_super_cut(const Network& net,
                          const std::vector<LayerCut>& cuts) {
  if (cuts.empty()) throw EmptyCutList("no layer-cuts to select from");
  const LayerCut* best = &cuts.front();
  double best_zero = zero_assignment_probability(net, best->arcs);
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const LayerCut& c = cuts[i];
    double zero = zero_assignment_probability(net, c.arcs);
    if (c.arcs.size() < best->arcs.size() ||
        (c.arcs.size() == best->arcs.size() &&
         (zero > best_zero ||
          (zero == best_zero && c.index < best->index)))) {
      best = &c;
      best_zero = zero;
    }
  }
  return *best;
}

}  // namespace reliacut
