#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "commq/errors.hpp"
#include "commq/graph.hpp"
#include "commq/metrics.hpp"
#include "commq/partition.hpp"

namespace commq {

struct Snapshot {
  Graph graph;
  Partition partition_a;
  Partition partition_b;
};

// Ordered snapshots, each carrying the two competing partitions whose
// metric differences the comparison protocol averages.
struct SnapshotSeries {
  std::vector<Snapshot> snapshots;
  std::string label_a = "A";
  std::string label_b = "B";
  bool directed = false;
  bool weighted = false;
};

// The eight per-snapshot metrics that get differenced: Q, Qs, Qds plus the
// five aggregated community metrics (intra/inter edge totals, means for
// contraction, expansion, conductance).
inline constexpr std::array<const char*, 8> kDifferenceMetricNames = {
    "q",        "qs",          "qds",       "intra_edges",
    "contraction", "inter_edges", "expansion", "conductance"};

inline std::array<double, 8> snapshot_metrics(const MetricReport& r) {
  return {r.q,
          r.qs,
          r.qds,
          r.intra_edges_total,
          r.contraction_mean,
          r.inter_edges_total,
          r.expansion_mean,
          r.conductance_mean};
}

struct DifferenceTable {
  std::array<double, 8> mean_difference{};  // metric(A) - metric(B), averaged
  std::string label_a = "A";
  std::string label_b = "B";
  std::size_t snapshot_count = 0;
};

namespace detail {

inline bool parse_bool_flag(const std::string& token, bool& out) {
  if (token == "0" || token == "false") { out = false; return true; }
  if (token == "1" || token == "true") { out = true; return true; }
  return false;
}

}  // namespace detail

// Manifest format, one snapshot per line after the header:
//   directed 0|1        (optional, default 0)
//   weighted 0|1        (optional, default 0)
//   labels NAME_A NAME_B  (optional)
//   <graph-file> <partitionA-file> <partitionB-file>
// File paths are resolved relative to base_dir. '#' comments and blank
// lines are ignored.
inline SnapshotSeries load_series(std::istream& in, const std::filesystem::path& base_dir) {
  SnapshotSeries series;
  std::string line;
  std::size_t line_no = 0;
  std::size_t snapshot_index = 0;
  const auto read_graph = [&](const std::string& name) {
    const std::filesystem::path path = base_dir / name;
    std::ifstream f(path);
    if (!f) {
      throw input_error("snapshot " + std::to_string(snapshot_index) + ": cannot open graph file " +
                        path.string());
    }
    try {
      return parse_edge_list(f, series.directed, series.weighted);
    } catch (const input_error& e) {
      throw input_error("snapshot " + std::to_string(snapshot_index) + ": " + path.string() +
                        ": " + e.what());
    }
  };
  const auto read_partition = [&](const std::string& name, NodeId node_count) {
    const std::filesystem::path path = base_dir / name;
    std::ifstream f(path);
    if (!f) {
      throw input_error("snapshot " + std::to_string(snapshot_index) +
                        ": cannot open partition file " + path.string());
    }
    try {
      return parse_partition(f, node_count);
    } catch (const input_error& e) {
      throw input_error("snapshot " + std::to_string(snapshot_index) + ": " + path.string() +
                        ": " + e.what());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = detail::split_fields(line);
    if (fields.empty()) continue;
    const std::string where = "manifest line " + std::to_string(line_no) + ": ";
    if (fields[0] == "directed" || fields[0] == "weighted") {
      bool value = false;
      if (fields.size() != 2 || !detail::parse_bool_flag(fields[1], value)) {
        throw input_error(where + "expected \"" + fields[0] + " 0|1\"");
      }
      if (!series.snapshots.empty()) {
        throw input_error(where + "flags must precede the first snapshot");
      }
      (fields[0] == "directed" ? series.directed : series.weighted) = value;
      continue;
    }
    if (fields[0] == "labels") {
      if (fields.size() != 3) throw input_error(where + "expected \"labels NAME_A NAME_B\"");
      series.label_a = fields[1];
      series.label_b = fields[2];
      continue;
    }
    if (fields.size() != 3) {
      throw input_error(where + "expected \"graph-file partitionA-file partitionB-file\"");
    }
    Graph graph = read_graph(fields[0]);
    Partition pa = read_partition(fields[1], graph.node_count());
    Partition pb = read_partition(fields[2], graph.node_count());
    series.snapshots.push_back(Snapshot{std::move(graph), std::move(pa), std::move(pb)});
    ++snapshot_index;
  }
  if (series.snapshots.empty()) throw input_error("at least one snapshot required");
  return series;
}

inline SnapshotSeries load_series_file(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw input_error("cannot open manifest " + manifest.string());
  return load_series(in, manifest.parent_path());
}

// Scores both partitions of every snapshot, subtracts stream B's metrics
// from stream A's, and averages over snapshots in order.
inline DifferenceTable average_differences(const SnapshotSeries& series) {
  if (series.snapshots.empty()) throw input_error("at least one snapshot required");
  DifferenceTable table;
  table.label_a = series.label_a;
  table.label_b = series.label_b;
  table.snapshot_count = series.snapshots.size();
  for (const Snapshot& snap : series.snapshots) {
    const std::array<double, 8> a = snapshot_metrics(report(snap.graph, snap.partition_a));
    const std::array<double, 8> b = snapshot_metrics(report(snap.graph, snap.partition_b));
    for (std::size_t k = 0; k < 8; ++k) table.mean_difference[k] += a[k] - b[k];
  }
  for (double& v : table.mean_difference) v /= static_cast<double>(series.snapshots.size());
  return table;
}

// TSV with one metric per row, mirroring the layout of per-algorithm
// difference tables. The header records the within-snapshot aggregation
// convention since the protocol itself does not fix one.
inline void write_difference_tsv(const DifferenceTable& table, std::ostream& out,
                                 int precision = 4) {
  out << "# mean metric differences: " << table.label_a << " minus " << table.label_b << " over "
      << table.snapshot_count << " snapshots\n";
  out << "# per-snapshot aggregation: sums for intra_edges/inter_edges, plain means over "
         "communities for contraction/expansion/conductance\n";
  out << "metric\tmean_difference\n";
  for (std::size_t k = 0; k < 8; ++k) {
    out << kDifferenceMetricNames[k] << "\t"
        << detail::format_value(table.mean_difference[k], precision) << "\n";
  }
}

}  // namespace commq
