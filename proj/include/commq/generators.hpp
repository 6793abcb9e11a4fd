#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commq/closed_forms.hpp"
#include "commq/errors.hpp"
#include "commq/graph.hpp"
#include "commq/partition.hpp"

namespace commq {

namespace detail {

inline void append_clique(std::vector<Edge>& edges, NodeId base, std::uint32_t size) {
  for (NodeId i = 0; i < size; ++i) {
    for (NodeId j = i + 1; j < size; ++j) {
      edges.push_back(Edge{base + i, base + j, 1.0});
    }
  }
}

// Uniform double in [0, 1) from the top 53 bits of the generator, so the
// stream does not depend on the standard library's distribution code.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline Graph complete_graph(std::uint32_t m) {
  if (m < 1) throw input_error("complete graph needs at least one node");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  detail::append_clique(edges, 0, m);
  return Graph(m, std::move(edges), false, false);
}

struct TwoCliques {
  Graph graph;
  Partition communities;  // one community per clique
};

// Two disjoint m-cliques plus `bridges` inter-clique edges, added in
// row-major order (node i of the first clique to node j of the second,
// (i, j) lexicographic). The metric values depend only on the bridge
// count, so the deterministic placement keeps golden values stable.
inline TwoCliques two_cliques(std::uint32_t m, std::uint32_t bridges) {
  if (m < 2) throw input_error("two_cliques needs cliques of >= 2 nodes");
  if (bridges > m * m) {
    throw input_error("at most " + std::to_string(m * m) + " bridges fit between two " +
                      std::to_string(m) + "-cliques");
  }
  std::vector<Edge> edges;
  detail::append_clique(edges, 0, m);
  detail::append_clique(edges, m, m);
  for (std::uint32_t t = 0; t < bridges; ++t) {
    edges.push_back(Edge{t / m, m + t % m, 1.0});
  }
  Graph g(2 * m, std::move(edges), false, false);
  std::vector<CommunityId> labels(2 * m, 0);
  for (NodeId v = m; v < 2 * m; ++v) labels[v] = 1;
  return TwoCliques{std::move(g), Partition(std::move(labels))};
}

struct CliqueTreePair {
  Graph clique_graph;        // two 4-cliques joined by one bridge
  Graph tree_graph;          // two 7-node path trees joined by one bridge
  Partition clique_communities;
  Partition tree_communities;
};

// Both graphs have 13 edges and two communities with six internal edges
// each; only the node counts differ. Any 7-node tree gives the same
// metrics (only node and edge counts enter), a path is used.
inline CliqueTreePair clique_pair_vs_tree_pair() {
  TwoCliques cliques = two_cliques(4, 1);
  std::vector<Edge> tree_edges;
  for (NodeId i = 0; i < 6; ++i) tree_edges.push_back(Edge{i, i + 1, 1.0});
  for (NodeId i = 0; i < 6; ++i) tree_edges.push_back(Edge{7 + i, 8 + i, 1.0});
  tree_edges.push_back(Edge{0, 7, 1.0});
  Graph trees(14, std::move(tree_edges), false, false);
  std::vector<CommunityId> tree_labels(14, 0);
  for (NodeId v = 7; v < 14; ++v) tree_labels[v] = 1;
  return CliqueTreePair{std::move(cliques.graph), std::move(trees),
                        std::move(cliques.communities), Partition(std::move(tree_labels))};
}

struct RingOfCliques {
  Graph graph;
  Partition single_cliques;  // one community per clique
  Partition paired_cliques;  // consecutive cliques merged, n/2 communities
};

// n cliques of m nodes in a cycle; node 0 of clique i connects to node 1
// of clique i+1 (mod n).
inline RingOfCliques ring_of_cliques(const RingSpec& spec) {
  spec.validate();
  const std::uint32_t n = spec.clique_count;
  const std::uint32_t m = spec.clique_size;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m * (m - 1) / 2 + n);
  for (std::uint32_t i = 0; i < n; ++i) detail::append_clique(edges, i * m, m);
  for (std::uint32_t i = 0; i < n; ++i) {
    edges.push_back(Edge{i * m, ((i + 1) % n) * m + 1, 1.0});
  }
  Graph g(n * m, std::move(edges), false, false);
  std::vector<CommunityId> single(n * m), paired(n * m);
  for (NodeId v = 0; v < n * m; ++v) {
    single[v] = v / m;
    paired[v] = (v / m) / 2;
  }
  return RingOfCliques{std::move(g), Partition(std::move(single)), Partition(std::move(paired))};
}

struct TwoPairsCliques {
  Graph graph;
  Partition four_communities;   // one community per clique
  Partition merged_small_pair;  // the two p-cliques merged
};

using BridgeList = std::array<std::pair<NodeId, NodeId>, 4>;

// Two cliques of m nodes (ids [0,m) and [m,2m)) and two of p nodes (ids
// [2m,2m+p) and [2m+p,2m+2p)) plus exactly four bridges. The default
// bridge set arranges the cliques in a ring, giving each clique two
// incident bridges and the two small cliques one connecting edge, the
// topology whose terms the closed-form difference bound describes.
inline TwoPairsCliques two_pairs_cliques(std::uint32_t m, std::uint32_t p,
                                         std::optional<BridgeList> bridges = std::nullopt) {
  if (m < 4) throw input_error("two_pairs_cliques needs m >= 4");
  if (p < 3 || p >= m) throw input_error("two_pairs_cliques needs 3 <= p < m");
  const NodeId node_count = 2 * m + 2 * p;
  const BridgeList bridge_edges = bridges.value_or(BridgeList{{
      {0, m},                        // large-large
      {1, 2 * m},                    // large-small
      {2 * m + 1, 2 * m + p},        // small-small
      {2 * m + p + 1, m + 1},        // small-large
  }});

  const auto clique_of = [m, p, node_count](NodeId v) -> int {
    if (v >= node_count) return -1;
    if (v < m) return 0;
    if (v < 2 * m) return 1;
    if (v < 2 * m + p) return 2;
    return 3;
  };
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [u, v] : bridge_edges) {
    const int cu = clique_of(u);
    const int cv = clique_of(v);
    if (cu < 0 || cv < 0) throw input_error("bridge endpoint out of range");
    if (cu == cv) throw input_error("bridge must join two different cliques");
    if (!seen.insert(std::minmax(u, v)).second) throw input_error("duplicate bridge");
  }

  std::vector<Edge> edges;
  detail::append_clique(edges, 0, m);
  detail::append_clique(edges, m, m);
  detail::append_clique(edges, 2 * m, p);
  detail::append_clique(edges, 2 * m + p, p);
  for (const auto& [u, v] : bridge_edges) edges.push_back(Edge{u, v, 1.0});
  Graph g(node_count, std::move(edges), false, false);

  std::vector<CommunityId> four(node_count), merged(node_count);
  for (NodeId v = 0; v < node_count; ++v) {
    four[v] = static_cast<CommunityId>(clique_of(v));
    merged[v] = std::min(four[v], 2u);
  }
  return TwoPairsCliques{std::move(g), Partition(std::move(four)), Partition(std::move(merged))};
}

// Erdos-Renyi style random graph, fully determined by the seed. Weights,
// when enabled, are uniform in (0, 2].
inline Graph random_graph(NodeId nodes, double edge_probability, bool weighted, bool directed,
                          std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw input_error("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < nodes; ++i) {
    for (NodeId j = directed ? 0 : i + 1; j < nodes; ++j) {
      if (i == j) continue;
      if (detail::uniform01(rng) < edge_probability) {
        double w = 1.0;
        if (weighted) w = 2.0 - 2.0 * detail::uniform01(rng);
        edges.push_back(Edge{i, j, w});
      }
    }
  }
  return Graph(nodes, std::move(edges), directed, weighted);
}

}  // namespace commq
