#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace bicrit {

struct FlowArc {
  std::size_t from;
  std::size_t to;
  std::int64_t capacity;
};

struct FlowNetwork {
  std::size_t nodes = 0;
  std::vector<FlowArc> arcs;
  std::size_t source = 0;
  std::size_t sink = 1;

  // Returns the arc index.
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    arcs.push_back({from, to, capacity});
    return arcs.size() - 1;
  }
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> flow;  // per arc, same order as FlowNetwork::arcs
  // Nodes reachable from the source in the final residual graph. The arcs
  // leaving this set form a minimum cut.
  std::vector<bool> source_side;
  std::int64_t cut_capacity = 0;
};

// Shortest-augmenting-path (Edmonds-Karp) maximum flow. Throws
// Error(kDimension) on out-of-range nodes, negative capacity or source == sink.
FlowResult max_flow(const FlowNetwork& net);

// Checks capacity bounds and conservation of a flow; used as a certificate.
bool is_valid_flow(const FlowNetwork& net, const std::vector<std::int64_t>& flow);

// Capacity of the arcs leaving `source_side`.
std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side);

using BipartiteEdge = std::pair<std::size_t, std::size_t>;

// Maximum-cardinality matching via unit-capacity max flow. Pairs are sorted by
// left vertex. Throws Error(kDimension) on out-of-range endpoints.
std::vector<BipartiteEdge> max_bipartite_matching(std::size_t left, std::size_t right,
                                                  const std::vector<BipartiteEdge>& edges);

}  // namespace bicrit
