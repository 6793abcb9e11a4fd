#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commq/errors.hpp"
#include "commq/graph.hpp"
#include "commq/metrics.hpp"
#include "commq/partition.hpp"

namespace commq {

enum class Objective { modularity, qs, qds };

inline const char* objective_name(Objective obj) {
  switch (obj) {
    case Objective::modularity: return "modularity";
    case Objective::qs: return "qs";
    case Objective::qds: return "qds";
  }
  return "?";
}

inline Objective parse_objective(const std::string& name) {
  if (name == "modularity" || name == "q") return Objective::modularity;
  if (name == "qs") return Objective::qs;
  if (name == "qds") return Objective::qds;
  throw input_error("unknown objective \"" + name + "\" (expected modularity, qs, or qds)");
}

inline double evaluate_objective(const Graph& g, const Partition& p, Objective obj) {
  const CommunityStats s = compute_stats(g, p);
  switch (obj) {
    case Objective::modularity: return modularity(s);
    case Objective::qs: return qs(s);
    case Objective::qds: return qds(s);
  }
  throw input_error("invalid objective");
}

struct OptimizeResult {
  Partition partition;
  double value = 0.0;
};

// Evaluates the objective over every set partition and returns the first
// maximizer in enumeration order. Only feasible on tiny graphs; the
// size guard lives in PartitionEnumerator.
inline OptimizeResult exhaustive_best(const Graph& g, Objective obj) {
  PartitionEnumerator en(g.node_count());
  Partition best = en.partition();
  double best_value = evaluate_objective(g, best, obj);
  while (en.advance()) {
    Partition candidate = en.partition();
    const double value = evaluate_objective(g, candidate, obj);
    if (value > best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return OptimizeResult{std::move(best), best_value};
}

// Greedy agglomeration from singletons: repeatedly apply the merge of two
// connected communities that most improves the objective (ties broken by
// the lowest community-id pair), then sweep single-node moves to adjacent
// communities, in node-id order, until a full pass changes nothing. The
// objective is recomputed from scratch for every candidate; Qds deltas
// couple community size and edge counts, so the oracle stays trustworthy
// at the cost of speed.
inline OptimizeResult greedy_agglomerate(const Graph& g, Objective obj) {
  if (g.total_weight() <= 0.0) throw input_error("metrics undefined on empty graph");
  Partition current = Partition::singletons(g.node_count());
  double current_value = evaluate_objective(g, current, obj);

  for (;;) {
    std::set<std::pair<CommunityId, CommunityId>> connected;
    for (const Edge& e : g.edges()) {
      const CommunityId a = current[e.src];
      const CommunityId b = current[e.dst];
      if (a != b) connected.insert(std::minmax(a, b));
    }
    double best_value = current_value;
    bool found = false;
    Partition best_partition = current;
    for (const auto& pair : connected) {
      Partition trial = merge_communities(current, pair.first, pair.second);
      const double value = evaluate_objective(g, trial, obj);
      if (value > best_value) {
        best_value = value;
        found = true;
        best_partition = std::move(trial);
      }
    }
    if (!found) break;
    current = std::move(best_partition);
    current_value = best_value;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::set<CommunityId> neighbors;
      for (const Edge& e : g.edges()) {
        if (e.src == v) neighbors.insert(current[e.dst]);
        if (e.dst == v) neighbors.insert(current[e.src]);
      }
      neighbors.erase(current[v]);
      double best_value = current_value;
      Partition best_partition = current;
      bool improved = false;
      for (CommunityId target : neighbors) {
        std::vector<CommunityId> labels = current.labels();
        labels[v] = target;
        Partition trial(std::move(labels));
        const double value = evaluate_objective(g, trial, obj);
        if (value > best_value) {
          best_value = value;
          best_partition = std::move(trial);
          improved = true;
        }
      }
      if (improved) {
        current = std::move(best_partition);
        current_value = best_value;
        changed = true;
      }
    }
  }
  return OptimizeResult{std::move(current), current_value};
}

}  // namespace commq
