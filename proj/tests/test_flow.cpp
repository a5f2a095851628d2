#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>

#include "bicrit/error.hpp"
#include "bicrit/flow.hpp"
#include "bicrit/rng.hpp"
#include "support.hpp"

using namespace bicrit;

namespace {

void check_certificate(const FlowNetwork& net, const FlowResult& r) {
  CHECK(is_valid_flow(net, r.flow));
  CHECK(r.value == r.cut_capacity);
  CHECK(cut_capacity(net, r.source_side) == r.value);
  CHECK(r.source_side[net.source]);
  CHECK_FALSE(r.source_side[net.sink]);
}

}  // namespace

TEST_CASE("single arc") {
  FlowNetwork net{2, {}, 0, 1};
  net.add_arc(0, 1, 3);
  const auto r = max_flow(net);
  CHECK(r.value == 3);
  check_certificate(net, r);
}

TEST_CASE("two disjoint paths") {
  FlowNetwork net{4, {}, 0, 3};
  net.add_arc(0, 1, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 1);
  const auto r = max_flow(net);
  CHECK(r.value == 2);
  check_certificate(net, r);
}

TEST_CASE("small-phase network of the three-set example") {
  // sets A={1,2}, B={3,4}, C={2,3}; nodes: s, t, A, B, C, e1..e4
  FlowNetwork net{9, {}, 0, 1};
  for (std::size_t s = 2; s <= 4; ++s) net.add_arc(0, s, 1);
  const std::size_t e = 5;
  net.add_arc(2, e + 0, 1);
  net.add_arc(2, e + 1, 1);
  net.add_arc(3, e + 2, 1);
  net.add_arc(3, e + 3, 1);
  net.add_arc(4, e + 1, 1);
  net.add_arc(4, e + 2, 1);
  for (std::size_t k = 0; k < 4; ++k) net.add_arc(e + k, 1, 1);
  const auto r = max_flow(net);
  CHECK(r.value == 3);
  CHECK(testing::brute_flow_value(net) == 3);
  check_certificate(net, r);
}

TEST_CASE("random networks agree with flow enumeration") {
  Rng rng(99);
  for (int c = 0; c < 150; ++c) {
    FlowNetwork net;
    net.nodes = 2 + rng.below(4);
    net.source = 0;
    net.sink = net.nodes - 1;
    const std::size_t arcs = rng.below(8);
    for (std::size_t a = 0; a < arcs; ++a) {
      net.add_arc(rng.below(net.nodes), rng.below(net.nodes), static_cast<std::int64_t>(rng.below(3)));
    }
    const auto r = max_flow(net);
    CAPTURE(c);
    CHECK(r.value == testing::brute_flow_value(net));
    check_certificate(net, r);
  }
}

TEST_CASE("bad networks") {
  FlowNetwork loop{2, {}, 0, 0};
  CHECK_THROWS_AS(max_flow(loop), Error);
  FlowNetwork neg{2, {}, 0, 1};
  neg.add_arc(0, 1, -1);
  CHECK_THROWS_AS(max_flow(neg), Error);
  FlowNetwork range{2, {}, 0, 1};
  range.add_arc(0, 5, 1);
  CHECK_THROWS_AS(max_flow(range), Error);
}

TEST_CASE("bipartite matching") {
  CHECK(max_bipartite_matching(2, 2, {}).empty());
  CHECK(max_bipartite_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}).size() == 2);
  CHECK(max_bipartite_matching(2, 1, {{0, 0}, {1, 0}}).size() == 1);
  CHECK_THROWS_AS(max_bipartite_matching(1, 1, {{0, 1}}), Error);

  Rng rng(5);
  for (int c = 0; c < 100; ++c) {
    const std::size_t l = 1 + rng.below(4), r = 1 + rng.below(4);
    std::vector<BipartiteEdge> edges;
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        if (rng.below(3) == 0) edges.emplace_back(a, b);
      }
    }
    const auto m = max_bipartite_matching(l, r, edges);
    std::vector<bool> ul(l), ur(r);
    for (auto [a, b] : m) {
      CHECK_FALSE(ul[a]);
      CHECK_FALSE(ur[b]);
      ul[a] = ur[b] = true;
      CHECK(std::find(edges.begin(), edges.end(), BipartiteEdge{a, b}) != edges.end());
    }
    // size equals max flow on the induced unit network
    FlowNetwork net{l + r + 2, {}, 0, 1};
    for (std::size_t a = 0; a < l; ++a) net.add_arc(0, 2 + a, 1);
    for (std::size_t b = 0; b < r; ++b) net.add_arc(2 + l + b, 1, 1);
    for (auto [a, b] : edges) net.add_arc(2 + a, 2 + l + b, 1);
    CHECK(static_cast<std::int64_t>(m.size()) == max_flow(net).value);
    // and the brute-force maximum over edge subsets
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << edges.size()) && edges.size() <= 12; ++mask) {
      std::vector<bool> a1(l), b1(r);
      bool ok = true;
      for (std::size_t k = 0; k < edges.size() && ok; ++k) {
        if (!((mask >> k) & 1U)) continue;
        if (a1[edges[k].first] || b1[edges[k].second]) ok = false;
        a1[edges[k].first] = b1[edges[k].second] = true;
      }
      if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    if (edges.size() <= 12) CHECK(m.size() == best);
  }
}
