#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "commq/errors.hpp"
#include "commq/graph.hpp"
#include "commq/partition.hpp"

namespace commq {

struct PairStat {
  double weight = 0.0;        // edge weight from community i to community j
  std::uint64_t count = 0;    // unweighted edge count, used by pair-wise density
};

// Sufficient statistics for all community quality metrics, filled by one
// pass over the edge list. Weighted and unweighted tallies are kept side
// by side because the densities in Qds use raw edge counts even on
// weighted graphs. For undirected graphs a boundary edge between i and j
// is recorded under both (i,j) and (j,i), and out_weight_to mirrors
// out_weight_from.
struct CommunityStats {
  CommunityId community_count = 0;
  std::vector<std::uint32_t> sizes;
  std::vector<double> in_weight;            // |E_c_in| (weight sum)
  std::vector<std::uint64_t> in_count;      // unweighted internal edge count
  std::vector<double> out_weight_from;      // weight of edges leaving c
  std::vector<double> out_weight_to;        // weight of edges entering c (directed)
  std::map<std::pair<CommunityId, CommunityId>, PairStat> pairs;
  double total_weight = 0.0;                // |E| of the underlying graph
  bool directed = false;

  const PairStat* pair(CommunityId i, CommunityId j) const {
    auto it = pairs.find({i, j});
    return it == pairs.end() ? nullptr : &it->second;
  }
};

inline CommunityStats compute_stats(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw input_error("partition covers " + std::to_string(p.node_count()) +
                      " nodes but graph has " + std::to_string(g.node_count()));
  }
  CommunityStats s;
  s.community_count = p.community_count();
  s.directed = g.directed();
  s.total_weight = g.total_weight();
  s.sizes.assign(s.community_count, 0);
  s.in_weight.assign(s.community_count, 0.0);
  s.in_count.assign(s.community_count, 0);
  s.out_weight_from.assign(s.community_count, 0.0);
  s.out_weight_to.assign(s.community_count, 0.0);
  for (NodeId v = 0; v < p.node_count(); ++v) ++s.sizes[p[v]];
  for (const Edge& e : g.edges()) {
    const CommunityId cu = p[e.src];
    const CommunityId cv = p[e.dst];
    if (cu == cv) {
      s.in_weight[cu] += e.weight;
      ++s.in_count[cu];
    } else if (g.directed()) {
      PairStat& ps = s.pairs[{cu, cv}];
      ps.weight += e.weight;
      ++ps.count;
      s.out_weight_from[cu] += e.weight;
      s.out_weight_to[cv] += e.weight;
    } else {
      PairStat& fwd = s.pairs[{cu, cv}];
      fwd.weight += e.weight;
      ++fwd.count;
      PairStat& rev = s.pairs[{cv, cu}];
      rev.weight += e.weight;
      ++rev.count;
      s.out_weight_from[cu] += e.weight;
      s.out_weight_from[cv] += e.weight;
    }
  }
  if (!g.directed()) s.out_weight_to = s.out_weight_from;
  return s;
}

namespace detail {
inline void require_edges(const CommunityStats& s) {
  if (s.total_weight <= 0.0) throw input_error("metrics undefined on empty graph");
}
}  // namespace detail

// Newman modularity.
//   undirected: Q = sum_c [ in_c/|E| - ((2 in_c + out_c) / (2|E|))^2 ]
//   directed:   Q = sum_c [ in_c/|E| - (in_c + to_c)(in_c + from_c) / |E|^2 ]
// Weighted graphs use weight sums for every term.
inline double modularity(const CommunityStats& s) {
  detail::require_edges(s);
  const double w = s.total_weight;
  double q = 0.0;
  for (CommunityId c = 0; c < s.community_count; ++c) {
    const double in = s.in_weight[c];
    if (s.directed) {
      q += in / w - (in + s.out_weight_to[c]) * (in + s.out_weight_from[c]) / (w * w);
    } else {
      const double deg = (2.0 * in + s.out_weight_from[c]) / (2.0 * w);
      q += in / w - deg * deg;
    }
  }
  return q;
}

// Fraction of edge weight crossing community boundaries. Undirected pairs
// are recorded in both directions, hence the 2|E| denominator; directed
// counts only outgoing edges of each community.
inline double split_penalty(const CommunityStats& s) {
  detail::require_edges(s);
  double acc = 0.0;
  for (const auto& [key, ps] : s.pairs) acc += ps.weight;
  return s.directed ? acc / s.total_weight : acc / (2.0 * s.total_weight);
}

inline double qs(const CommunityStats& s) { return modularity(s) - split_penalty(s); }

// Internal density d_c: realized fraction of possible internal node pairs,
// from unweighted counts. A singleton community has no possible internal
// pair; its density is defined as 0.
inline double internal_density(const CommunityStats& s, CommunityId c) {
  const double sz = s.sizes[c];
  if (sz < 2.0) return 0.0;
  const double count = static_cast<double>(s.in_count[c]);
  return s.directed ? count / (sz * (sz - 1.0)) : 2.0 * count / (sz * (sz - 1.0));
}

// Pair-wise density d_ci,cj, from unweighted counts.
inline double pairwise_density(const CommunityStats& s, CommunityId i, CommunityId j) {
  const PairStat* ps = s.pair(i, j);
  if (ps == nullptr) return 0.0;
  return static_cast<double>(ps->count) /
         (static_cast<double>(s.sizes[i]) * static_cast<double>(s.sizes[j]));
}

// Modularity Density: each modularity term scaled by the internal density
// of its community and each split-penalty term by the pair-wise density.
//   undirected: sum_c [ in_c/|E| d_c - ((2 in_c + out_c)/(2|E|) d_c)^2 ]
//               - sum_{i != j} |E_ij|/(2|E|) d_ij
//   directed:   sum_c [ in_c/|E| d_c - (in_c + to_c)(in_c + from_c)/|E|^2 d_c^2 ]
//               - sum_{i != j} |E_ij|/|E| d_ij
inline double qds(const CommunityStats& s) {
  detail::require_edges(s);
  const double w = s.total_weight;
  double acc = 0.0;
  for (CommunityId c = 0; c < s.community_count; ++c) {
    const double in = s.in_weight[c];
    const double d = internal_density(s, c);
    if (s.directed) {
      acc += in / w * d -
             (in + s.out_weight_to[c]) * (in + s.out_weight_from[c]) / (w * w) * d * d;
    } else {
      const double deg = (2.0 * in + s.out_weight_from[c]) / (2.0 * w) * d;
      acc += in / w * d - deg * deg;
    }
  }
  for (const auto& [key, ps] : s.pairs) {
    const double dp = static_cast<double>(ps.count) /
                      (static_cast<double>(s.sizes[key.first]) *
                       static_cast<double>(s.sizes[key.second]));
    acc -= (s.directed ? ps.weight / w : ps.weight / (2.0 * w)) * dp;
  }
  return acc;
}

// The five per-community structural metrics.
struct CommunityQuality {
  double intra_edges = 0.0;   // weight of edges inside the community
  double contraction = 0.0;   // average internal edge weight per node
  double inter_edges = 0.0;   // weight of edges leaving the community
  double expansion = 0.0;     // average leaving edge weight per node
  double conductance = 0.0;   // fraction of incident edge weight leaving
};

inline CommunityQuality community_quality(const CommunityStats& s, CommunityId c) {
  if (c >= s.community_count) throw input_error("community id out of range");
  CommunityQuality q;
  const double sz = s.sizes[c];
  q.intra_edges = s.in_weight[c];
  q.contraction = (s.directed ? q.intra_edges : 2.0 * q.intra_edges) / sz;
  q.inter_edges = s.out_weight_from[c];
  q.expansion = q.inter_edges / sz;
  const double denom = (s.directed ? q.intra_edges : 2.0 * q.intra_edges) + q.inter_edges;
  q.conductance = denom > 0.0 ? q.inter_edges / denom : 0.0;
  return q;
}

// All metrics for one (graph, partition): Q, SP, Qs, Qds plus the five
// per-community metrics with their aggregates (sums for intra/inter edge
// totals, plain means over communities for the rest).
struct MetricReport {
  double q = 0.0;
  double sp = 0.0;
  double qs = 0.0;
  double qds = 0.0;
  std::vector<std::uint32_t> community_sizes;
  std::vector<CommunityQuality> per_community;
  double intra_edges_total = 0.0;
  double inter_edges_total = 0.0;
  double contraction_mean = 0.0;
  double expansion_mean = 0.0;
  double conductance_mean = 0.0;
};

inline MetricReport report(const Graph& g, const Partition& p) {
  const CommunityStats s = compute_stats(g, p);
  MetricReport r;
  r.q = modularity(s);
  r.sp = split_penalty(s);
  r.qs = r.q - r.sp;
  r.qds = qds(s);
  r.community_sizes = s.sizes;
  r.per_community.reserve(s.community_count);
  for (CommunityId c = 0; c < s.community_count; ++c) {
    r.per_community.push_back(community_quality(s, c));
  }
  for (const CommunityQuality& cq : r.per_community) {
    r.intra_edges_total += cq.intra_edges;
    r.inter_edges_total += cq.inter_edges;
    r.contraction_mean += cq.contraction;
    r.expansion_mean += cq.expansion;
    r.conductance_mean += cq.conductance;
  }
  const double n = static_cast<double>(s.community_count);
  r.contraction_mean /= n;
  r.expansion_mean /= n;
  r.conductance_mean /= n;
  return r;
}

namespace detail {
inline std::string format_value(double v, int precision) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(precision);
  out << v;
  return out.str();
}
}  // namespace detail

// TSV form, field order fixed: one row per community, a summary row, then
// the four partition-level metrics.
inline void write_report_tsv(const MetricReport& r, std::ostream& out, int precision = 4) {
  const auto f = [precision](double v) { return detail::format_value(v, precision); };
  out << "community\tsize\tintra_edges\tcontraction\tinter_edges\texpansion\tconductance\n";
  std::uint64_t nodes = 0;
  for (std::size_t c = 0; c < r.per_community.size(); ++c) {
    const CommunityQuality& cq = r.per_community[c];
    nodes += r.community_sizes[c];
    out << c << "\t" << r.community_sizes[c] << "\t" << f(cq.intra_edges) << "\t"
        << f(cq.contraction) << "\t" << f(cq.inter_edges) << "\t" << f(cq.expansion) << "\t"
        << f(cq.conductance) << "\n";
  }
  out << "summary\t" << nodes << "\t" << f(r.intra_edges_total) << "\t" << f(r.contraction_mean)
      << "\t" << f(r.inter_edges_total) << "\t" << f(r.expansion_mean) << "\t"
      << f(r.conductance_mean) << "\n";
  out << "q\t" << f(r.q) << "\n";
  out << "sp\t" << f(r.sp) << "\n";
  out << "qs\t" << f(r.qs) << "\n";
  out << "qds\t" << f(r.qds) << "\n";
}

// Human-readable table for the CLI.
inline void write_report_table(const MetricReport& r, std::ostream& out, int precision = 4) {
  const auto f = [precision](double v) { return detail::format_value(v, precision); };
  out << "Q    " << f(r.q) << "\n";
  out << "SP   " << f(r.sp) << "\n";
  out << "Qs   " << f(r.qs) << "\n";
  out << "Qds  " << f(r.qds) << "\n";
  out << "\ncommunity  size  intra  contraction  inter  expansion  conductance\n";
  for (std::size_t c = 0; c < r.per_community.size(); ++c) {
    const CommunityQuality& cq = r.per_community[c];
    out << c << "  " << r.community_sizes[c] << "  " << f(cq.intra_edges) << "  "
        << f(cq.contraction) << "  " << f(cq.inter_edges) << "  " << f(cq.expansion) << "  "
        << f(cq.conductance) << "\n";
  }
  out << "aggregate  -  " << f(r.intra_edges_total) << "  " << f(r.contraction_mean) << "  "
      << f(r.inter_edges_total) << "  " << f(r.expansion_mean) << "  " << f(r.conductance_mean)
      << "\n";
}

}  // namespace commq
