#include "bicrit/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "bicrit/error.hpp"

namespace bicrit {

namespace {

void validate(const FlowNetwork& net) {
  if (net.source >= net.nodes || net.sink >= net.nodes || net.source == net.sink) {
    throw Error(ErrorCode::kDimension, "source/sink must be distinct nodes in range");
  }
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    const auto& a = net.arcs[k];
    if (a.from >= net.nodes || a.to >= net.nodes || a.capacity < 0) {
      throw Error(ErrorCode::kDimension, "arc " + std::to_string(k) + " is malformed");
    }
  }
}

// Residual graph: edge 2k is arc k forward, edge 2k+1 its reverse.
struct Residual {
  std::vector<std::size_t> head;
  std::vector<std::int64_t> cap;
  std::vector<std::vector<std::size_t>> out;

  explicit Residual(const FlowNetwork& net) : out(net.nodes) {
    head.reserve(2 * net.arcs.size());
    cap.reserve(2 * net.arcs.size());
    for (const auto& a : net.arcs) {
      out[a.from].push_back(head.size());
      head.push_back(a.to);
      cap.push_back(a.capacity);
      out[a.to].push_back(head.size());
      head.push_back(a.from);
      cap.push_back(0);
    }
  }

  // BFS from s over positive-residual edges; parent edge per node.
  std::vector<std::size_t> bfs(std::size_t s, std::vector<bool>& seen) const {
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(out.size(), kNone);
    seen.assign(out.size(), false);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto e : out[v]) {
        const auto w = head[e];
        if (cap[e] > 0 && !seen[w]) {
          seen[w] = true;
          parent[w] = e;
          q.push(w);
        }
      }
    }
    return parent;
  }
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  validate(net);
  Residual res(net);
  FlowResult result;
  std::vector<bool> seen;
  while (true) {
    const auto parent = res.bfs(net.source, seen);
    if (!seen[net.sink]) break;
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (auto v = net.sink; v != net.source; v = res.head[parent[v] ^ 1U]) {
      bottleneck = std::min(bottleneck, res.cap[parent[v]]);
    }
    for (auto v = net.sink; v != net.source; v = res.head[parent[v] ^ 1U]) {
      res.cap[parent[v]] -= bottleneck;
      res.cap[parent[v] ^ 1U] += bottleneck;
    }
    result.value += bottleneck;
  }
  result.flow.resize(net.arcs.size());
  for (std::size_t k = 0; k < net.arcs.size(); ++k) result.flow[k] = res.cap[2 * k + 1];
  result.source_side = std::move(seen);
  result.cut_capacity = cut_capacity(net, result.source_side);
  return result;
}

bool is_valid_flow(const FlowNetwork& net, const std::vector<std::int64_t>& flow) {
  if (flow.size() != net.arcs.size()) return false;
  std::vector<std::int64_t> balance(net.nodes, 0);
  for (std::size_t k = 0; k < flow.size(); ++k) {
    if (flow[k] < 0 || flow[k] > net.arcs[k].capacity) return false;
    balance[net.arcs[k].from] -= flow[k];
    balance[net.arcs[k].to] += flow[k];
  }
  for (std::size_t v = 0; v < net.nodes; ++v) {
    if (v != net.source && v != net.sink && balance[v] != 0) return false;
  }
  return true;
}

std::int64_t cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side) {
  std::int64_t total = 0;
  for (const auto& a : net.arcs) {
    if (source_side[a.from] && !source_side[a.to]) total += a.capacity;
  }
  return total;
}

std::vector<BipartiteEdge> max_bipartite_matching(std::size_t left, std::size_t right,
                                                  const std::vector<BipartiteEdge>& edges) {
  FlowNetwork net;
  net.nodes = 2 + left + right;
  net.source = 0;
  net.sink = 1;
  for (std::size_t l = 0; l < left; ++l) net.add_arc(0, 2 + l, 1);
  for (std::size_t r = 0; r < right; ++r) net.add_arc(2 + left + r, 1, 1);
  const std::size_t first_edge = net.arcs.size();
  for (const auto& [l, r] : edges) {
    if (l >= left || r >= right) {
      throw Error(ErrorCode::kDimension, "edge (" + std::to_string(l) + ", " + std::to_string(r) +
                                             ") out of range");
    }
    net.add_arc(2 + l, 2 + left + r, 1);
  }
  const auto flow = max_flow(net);
  std::vector<BipartiteEdge> matching;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (flow.flow[first_edge + k] > 0) matching.push_back(edges[k]);
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

}  // namespace bicrit
