#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "reliacut/bench.hpp"
#include "reliacut/network.hpp"

namespace reliacut::testing {

// 4-node bridge: a1:1-2, a2:1-3, a3:2-3, a4:2-4, a5:3-4 with working
// probabilities 0.9, 0.8, 0.7, 0.6, 0.5. Exact reliability 0.766
// (pivot on a3: 0.7 * 0.784 + 0.3 * 0.724).
inline const char* kBridgeFile =
    "nodes 4\n"
    "source 1\n"
    "sink 4\n"
    "arc 1 2 0.9\n"
    "arc 1 3 0.8\n"
    "arc 2 3 0.7\n"
    "arc 2 4 0.6\n"
    "arc 3 4 0.5\n";

inline constexpr double kBridgeExact = 0.766;

inline Network bridge() { return parse_network(std::string(kBridgeFile)); }

// Union-find connectivity, independent of the layered search under test.
inline bool union_find_connected(const Network& net, std::uint64_t arc_mask) {
  std::vector<int> parent(net.node_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : net.arcs()) {
    if ((arc_mask >> (a.id - 1)) & 1) parent[find(a.u)] = find(a.v);
  }
  return find(net.source()) == find(net.sink());
}

// Seeded batch of small random networks with sink reachable.
inline std::vector<Network> random_networks(int count, std::uint64_t seed) {
  std::vector<Network> nets;
  for (int i = 0; i < count; ++i) {
    int nodes = 4 + static_cast<int>((seed + i) % 5);         // 4..8
    int max_arcs = std::min(12, nodes * (nodes - 1) / 2);
    int arcs = std::max(nodes - 1, max_arcs - static_cast<int>(i % 4));
    double prob = 0.3 + 0.05 * static_cast<double>(i % 10);
    nets.push_back(generate_random_network(nodes, arcs, prob, seed + 101 * i));
  }
  return nets;
}

}  // namespace reliacut::testing
