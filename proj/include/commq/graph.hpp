#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "commq/errors.hpp"

namespace commq {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple graph: no self-loops, no parallel edges. Undirected
// edges are stored with src < dst; the edge list is sorted by (src, dst),
// so equal graphs compare equal member-wise. For unweighted graphs every
// weight is exactly 1 and total_weight() is the edge count; for weighted
// graphs total_weight() is the sum of weights.
class Graph {
 public:
  Graph(NodeId node_count, std::vector<Edge> edges, bool directed, bool weighted)
      : node_count_(node_count), directed_(directed), weighted_(weighted) {
    for (Edge& e : edges) {
      if (e.src == e.dst) {
        throw input_error("self-loop at node " + std::to_string(e.src) + " not allowed");
      }
      if (e.src >= node_count_ || e.dst >= node_count_) {
        throw input_error("edge " + std::to_string(e.src) + "-" + std::to_string(e.dst) +
                          " references a node >= node count " + std::to_string(node_count_));
      }
      if (!std::isfinite(e.weight) || e.weight <= 0.0) {
        throw input_error("edge " + std::to_string(e.src) + "-" + std::to_string(e.dst) +
                          " has non-positive weight");
      }
      if (!weighted_ && e.weight != 1.0) {
        throw input_error("unweighted graph requires unit edge weights");
      }
      if (!directed_ && e.src > e.dst) std::swap(e.src, e.dst);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst) {
        throw input_error("duplicate edge " + std::to_string(edges[i].src) + "-" +
                          std::to_string(edges[i].dst));
      }
    }
    for (const Edge& e : edges) total_weight_ += e.weight;
    edges_ = std::move(edges);
  }

  NodeId node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  double total_weight() const { return total_weight_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  bool directed_ = false;
  bool weighted_ = false;
  double total_weight_ = 0.0;
};

namespace detail {

inline bool parse_node_id(const std::string& token, NodeId& out) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  try {
    unsigned long v = std::stoul(token);
    if (v > 0xffffffffUL) return false;
    out = static_cast<NodeId>(v);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

inline bool parse_weight(const std::string& token, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(token, &used);
    return used == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) fields.push_back(tok);
  return fields;
}

}  // namespace detail

// Reads an edge list, one edge per line: "src dst" or, for weighted
// graphs, "src dst weight". Lines starting with '#' and blank lines are
// ignored. An optional first data line "nodes N" declares the node count
// (needed only when trailing nodes are isolated).
inline Graph parse_edge_list(std::istream& in, bool directed, bool weighted) {
  std::vector<Edge> edges;
  NodeId max_id = 0;
  bool saw_edge = false;
  bool saw_header = false;
  NodeId declared_nodes = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = detail::split_fields(line);
    if (fields.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (first_data_line && fields[0] == "nodes") {
      if (fields.size() != 2 || !detail::parse_node_id(fields[1], declared_nodes)) {
        throw input_error(where + "malformed header, expected \"nodes N\"");
      }
      saw_header = true;
      first_data_line = false;
      continue;
    }
    first_data_line = false;

    if (fields.size() != 2 && fields.size() != 3) {
      throw input_error(where + "expected \"src dst\" or \"src dst weight\"");
    }
    Edge e;
    if (!detail::parse_node_id(fields[0], e.src) || !detail::parse_node_id(fields[1], e.dst)) {
      throw input_error(where + "node ids must be non-negative integers");
    }
    if (fields.size() == 3) {
      if (!weighted) {
        throw input_error(where + "weight column not allowed for an unweighted graph");
      }
      if (!detail::parse_weight(fields[2], e.weight)) {
        throw input_error(where + "malformed weight \"" + fields[2] + "\"");
      }
      if (!std::isfinite(e.weight) || e.weight <= 0.0) {
        throw input_error(where + "edge weight must be positive");
      }
    }
    if (e.src == e.dst) {
      throw input_error(where + "self-loop " + std::to_string(e.src) + "-" +
                        std::to_string(e.dst) + " not allowed");
    }
    max_id = std::max(max_id, std::max(e.src, e.dst));
    saw_edge = true;
    edges.push_back(e);
  }

  NodeId node_count = saw_edge ? max_id + 1 : 0;
  if (saw_header) {
    if (saw_edge && declared_nodes < max_id + 1) {
      throw input_error("header declares " + std::to_string(declared_nodes) +
                        " nodes but an edge references node " + std::to_string(max_id));
    }
    node_count = std::max(node_count, declared_nodes);
  }
  return Graph(node_count, std::move(edges), directed, weighted);
}

// Canonical edge-list form: "nodes N" header followed by the sorted edge
// list. Parsing the output reproduces the graph exactly.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "nodes " << g.node_count() << "\n";
  std::ostringstream w;
  w.precision(17);
  for (const Edge& e : g.edges()) {
    out << e.src << " " << e.dst;
    if (g.weighted()) {
      w.str("");
      w << e.weight;
      out << " " << w.str();
    }
    out << "\n";
  }
}

// Collapses a directed graph onto its undirected support: each unordered
// pair {u, v} carries the sum of the arc weights u->v and v->u. The result
// is weighted (opposite arcs add up) and preserves total weight.
inline Graph symmetrize(const Graph& g) {
  if (!g.directed()) throw input_error("symmetrize requires a directed graph");
  std::map<std::pair<NodeId, NodeId>, double> acc;
  for (const Edge& e : g.edges()) {
    acc[std::minmax(e.src, e.dst)] += e.weight;
  }
  std::vector<Edge> edges;
  edges.reserve(acc.size());
  for (const auto& [pair, weight] : acc) {
    edges.push_back(Edge{pair.first, pair.second, weight});
  }
  return Graph(g.node_count(), std::move(edges), false, true);
}

}  // namespace commq
