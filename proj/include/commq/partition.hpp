#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "commq/errors.hpp"
#include "commq/graph.hpp"

namespace commq {

using CommunityId = std::uint32_t;

// Total assignment of nodes to disjoint communities. Ids are kept dense
// (0..community_count-1, each non-empty) by renumbering in order of first
// appearance, which makes structurally equal partitions compare equal.
class Partition {
 public:
  explicit Partition(std::vector<CommunityId> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw input_error("partition needs at least one node");
    densify();
  }

  static Partition singletons(NodeId node_count) {
    std::vector<CommunityId> labels(node_count);
    std::iota(labels.begin(), labels.end(), 0u);
    return Partition(std::move(labels));
  }

  static Partition whole(NodeId node_count) {
    return Partition(std::vector<CommunityId>(node_count, 0u));
  }

  NodeId node_count() const { return static_cast<NodeId>(labels_.size()); }
  CommunityId community_count() const { return community_count_; }
  CommunityId operator[](NodeId v) const { return labels_[v]; }
  const std::vector<CommunityId>& labels() const { return labels_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  void densify() {
    constexpr CommunityId kUnseen = 0xffffffffu;
    CommunityId max_label = 0;
    for (CommunityId c : labels_) max_label = std::max(max_label, c);
    CommunityId next = 0;
    if (static_cast<std::size_t>(max_label) <= 4 * labels_.size()) {
      std::vector<CommunityId> remap(static_cast<std::size_t>(max_label) + 1, kUnseen);
      for (CommunityId& c : labels_) {
        if (remap[c] == kUnseen) remap[c] = next++;
        c = remap[c];
      }
    } else {
      std::unordered_map<CommunityId, CommunityId> remap;
      for (CommunityId& c : labels_) {
        auto [it, inserted] = remap.try_emplace(c, next);
        if (inserted) ++next;
        c = it->second;
      }
    }
    community_count_ = next;
  }

  std::vector<CommunityId> labels_;
  CommunityId community_count_ = 0;
};

// New partition with communities a and b unified; ids re-densified.
inline Partition merge_communities(const Partition& p, CommunityId a, CommunityId b) {
  if (a == b) throw input_error("cannot merge a community with itself");
  if (a >= p.community_count() || b >= p.community_count()) {
    throw input_error("community id out of range");
  }
  std::vector<CommunityId> labels = p.labels();
  for (CommunityId& c : labels) {
    if (c == b) c = a;
  }
  return Partition(std::move(labels));
}

// Reads "node_id community_id" lines; every node in 0..node_count-1 must
// appear exactly once. '#' comments and blank lines are ignored.
inline Partition parse_partition(std::istream& in, NodeId node_count) {
  if (node_count == 0) throw input_error("partition needs at least one node");
  constexpr CommunityId kUnseen = 0xffffffffu;
  std::vector<CommunityId> labels(node_count, kUnseen);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = detail::split_fields(line);
    if (fields.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (fields.size() != 2) {
      throw input_error(where + "expected \"node_id community_id\"");
    }
    NodeId node = 0;
    CommunityId community = 0;
    if (!detail::parse_node_id(fields[0], node) || !detail::parse_node_id(fields[1], community)) {
      throw input_error(where + "ids must be non-negative integers");
    }
    if (node >= node_count) {
      throw input_error(where + "node id " + std::to_string(node) + " out of range [0," +
                        std::to_string(node_count) + ")");
    }
    if (labels[node] != kUnseen) {
      throw input_error(where + "node " + std::to_string(node) + " listed twice");
    }
    labels[node] = community;
  }
  for (NodeId v = 0; v < node_count; ++v) {
    if (labels[v] == kUnseen) {
      throw input_error("node " + std::to_string(v) + " missing from partition");
    }
  }
  return Partition(std::move(labels));
}

inline void write_partition(const Partition& p, std::ostream& out) {
  for (NodeId v = 0; v < p.node_count(); ++v) {
    out << v << " " << p[v] << "\n";
  }
}

// Enumerates every set partition of {0..n-1} exactly once, as restricted
// growth strings in lexicographic order (label[0] = 0 and each label is at
// most one greater than the maximum before it, so every string is already
// in canonical dense form). Yields Bell(n) partitions; n is capped at 13
// since Bell(13) is ~2.8e7.
class PartitionEnumerator {
 public:
  static constexpr NodeId kMaxNodes = 13;

  explicit PartitionEnumerator(NodeId node_count)
      : labels_(node_count, 0u), prefix_max_(node_count, 0u) {
    if (node_count == 0) throw input_error("cannot enumerate partitions of zero nodes");
    if (node_count > kMaxNodes) {
      throw limit_error("refusing to enumerate partitions of " + std::to_string(node_count) +
                        " nodes; the count grows as the Bell numbers and is capped at " +
                        std::to_string(kMaxNodes) + " nodes");
    }
  }

  const std::vector<CommunityId>& current() const { return labels_; }

  Partition partition() const { return Partition(labels_); }

  // Advances to the next restricted growth string; false once exhausted.
  bool advance() {
    const std::size_t n = labels_.size();
    for (std::size_t i = n; i-- > 1;) {
      if (labels_[i] <= prefix_max_[i]) {
        ++labels_[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          labels_[j] = 0;
          prefix_max_[j] = std::max(prefix_max_[j - 1], labels_[j - 1]);
        }
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<CommunityId> labels_;
  std::vector<CommunityId> prefix_max_;
};

}  // namespace commq
