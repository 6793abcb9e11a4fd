#pragma once

#include <cstdint>
#include <string>

#include "commq/errors.hpp"

namespace commq {

// A ring of n cliques of m nodes each, consecutive cliques joined by one
// edge. The analytic results below require n even and m >= 3.
struct RingSpec {
  std::uint32_t clique_count = 0;  // n
  std::uint32_t clique_size = 0;   // m

  void validate() const {
    if (clique_count < 2 || clique_count % 2 != 0) {
      throw input_error("ring needs an even clique count >= 2, got " +
                        std::to_string(clique_count));
    }
    if (clique_size < 3) {
      throw input_error("ring needs cliques of >= 3 nodes, got " + std::to_string(clique_size));
    }
  }
};

// Qds of a clique of m nodes split into parts of m1 and m2 nodes:
//   ((m1 - m2)^2 - m) / (m (m-1)) - (m1^2 + m2^2) / m^2
// Always negative, so the undivided clique (Qds = 0) wins. The formula
// assumes both parts hold >= 2 nodes; with a singleton part the general
// evaluator differs by exactly 1/m^2 per singleton because a singleton's
// internal density is defined as 0 rather than carried through as 1.
inline double clique_split_qds(std::uint32_t m, std::uint32_t m1, std::uint32_t m2) {
  if (m < 3) throw input_error("clique split needs m >= 3");
  if (m1 < 1 || m2 < 1 || m1 + m2 != m) {
    throw input_error("clique parts must be positive and sum to m");
  }
  const double md = m, a = m1, b = m2;
  return ((a - b) * (a - b) - md) / (md * (md - 1.0)) - (a * a + b * b) / (md * md);
}

// Qds of the ring partitioned into one community per clique:
//   m(m-1)/(m(m-1)+2) - 1/n - 2/(m^3(m-1) + 2 m^2)
inline double ring_qds_single(const RingSpec& spec) {
  spec.validate();
  const double n = spec.clique_count, m = spec.clique_size;
  return m * (m - 1.0) / (m * (m - 1.0) + 2.0) - 1.0 / n -
         2.0 / (m * m * m * (m - 1.0) + 2.0 * m * m);
}

// Qds of the ring partitioned into n/2 communities of two consecutive
// cliques:
//   [m(m-1)+1]^2 / ([m(m-1)+2] m(2m-1)) - 2[m(m-1)+1]^2 / (n [m(2m-1)]^2)
//   - 1/(4 m^3 (m-1) + 8 m^2)
inline double ring_qds_pairs(const RingSpec& spec) {
  spec.validate();
  const double n = spec.clique_count, m = spec.clique_size;
  const double inw = m * (m - 1.0) + 1.0;          // internal weight of a merged pair
  const double mm = m * (2.0 * m - 1.0);           // 2m(2m-1)/2, the pair count of 2m nodes
  return inw * inw / ((m * (m - 1.0) + 2.0) * mm) - 2.0 * inw * inw / (n * mm * mm) -
         1.0 / (4.0 * m * m * m * (m - 1.0) + 8.0 * m * m);
}

// Qds(single) - Qds(pairs) for the two-pairs-of-cliques network (two
// cliques of m nodes, two of p nodes, four bridges), from the closed-form
// derivation. Positive for all 3 <= p < m, i.e. the two small cliques are
// never merged. The derivation idealizes the merged community's pair-wise
// density, so a graph evaluation on the concrete topology comes out lower
// by exactly 1/(m p D) with D = m(m-1) + p(p-1) + 4.
inline double two_pairs_qds_delta(std::uint32_t m, std::uint32_t p) {
  if (p < 3 || p >= m) throw input_error("two-pairs delta needs 3 <= p < m");
  const double md = m, pd = p;
  const double d = md * (md - 1.0) + pd * (pd - 1.0) + 4.0;
  const double pp = pd * (pd - 1.0);
  const double bracket = pp - 1.0 / (pd * pd) - (pp + 2.0) * (pp + 2.0) / (2.0 * d) -
                         (pp + 1.0) * (pp + 1.0) / (pd * (2.0 * pd - 1.0)) +
                         (pp + 1.0) * (pp + 1.0) * (pp + 2.0) * (pp + 2.0) /
                             (pd * pd * (2.0 * pd - 1.0) * (2.0 * pd - 1.0) * d);
  return bracket / d;
}

// True iff m(m-1) + 2 < n, the condition under which plain modularity
// scores the merged-pairs ring partition above the single-clique one.
inline bool modularity_merge_threshold(std::uint32_t n, std::uint32_t m) {
  return static_cast<std::uint64_t>(m) * (m - 1) + 2 < n;
}

}  // namespace commq
