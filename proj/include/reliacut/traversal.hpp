#pragma once

#include <cstdint>
#include <vector>

#include "reliacut/network.hpp"

namespace reliacut {

struct SinkUnreachable : InputError {
  using InputError::InputError;
};

struct EmptyCutList : InputError {
  using InputError::InputError;
};

/// Breadth layering from the source: L1 = {source}, each later layer
/// holds the unvisited neighbours of the previous one. Node sets sorted.
struct LayerDecomposition {
  std::vector<std::vector<NodeId>> layers;
};

/// Arc set joining two consecutive layers; removing it disconnects
/// source from sink. `index` is the boundary k between L_k and L_{k+1}.
struct LayerCut {
  std::vector<ArcId> arcs;  // ascending arc id
  int index;
};

/// Arc mask helpers: bit i-1 of the word holds the state of arc i.
std::uint64_t pack_state(const StateVector& x);
StateVector unpack_state(std::uint64_t mask, int m);

/// Layered source-to-sink connectivity check over a packed arc mask.
/// Holds per-instance scratch buffers; make one checker per thread.
class ConnectivityChecker {
 public:
  explicit ConnectivityChecker(const Network& net);

  /// True iff the sink is reachable from the source using only arcs
  /// whose bit is set. Expands at most n-1 layers.
  bool connected(std::uint64_t arc_mask);

 private:
  const Network& net_;
  std::vector<std::uint8_t> visited_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
};

/// Layered connectivity of the subnetwork keeping only arcs with state 1.
bool plsa_connected(const Network& net, const StateVector& x);

/// Layers the full network from the source, stopping once the sink's
/// layer is produced. Throws SinkUnreachable if the sink never appears.
LayerDecomposition compute_layers(const Network& net);

/// All layer-cuts c_1..c_{s-1} up to the sink's layer s. Each returned
/// cut separates source from sink; the residual arc set beyond the last
/// boundary is not a cut candidate.
std::vector<LayerCut> find_layer_cuts(const Network& net);

/// Smallest cut, ties broken by maximal all-failed probability, then by
/// smallest layer index.
LayerCut select_super_cut(const Network& net, const std::vector<LayerCut>& cuts);

}  // namespace reliacut
