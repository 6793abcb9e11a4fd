// Command line front end: scoring, generators, optimizer oracle, the
// resolution-limit sweep, and the snapshot comparison protocol.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commq/commq.hpp"

namespace {

namespace fs = std::filesystem;

commq::Graph read_graph_file(const std::string& path, bool directed, bool weighted) {
  std::ifstream in(path);
  if (!in) throw commq::input_error("cannot open graph file " + path);
  try {
    return commq::parse_edge_list(in, directed, weighted);
  } catch (const commq::input_error& e) {
    throw commq::input_error(path + ": " + e.what());
  }
}

commq::Partition read_partition_file(const std::string& path, commq::NodeId node_count) {
  std::ifstream in(path);
  if (!in) throw commq::input_error("cannot open partition file " + path);
  try {
    return commq::parse_partition(in, node_count);
  } catch (const commq::input_error& e) {
    throw commq::input_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw commq::input_error("cannot open output file " + path);
  body(out);
  out.flush();
  if (!out) throw commq::input_error("failed writing " + path);
}

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& body) {
  if (out_path.empty()) {
    body(std::cout);
  } else {
    write_file(out_path, body);
  }
}

commq::BridgeList parse_bridge_list(const std::string& text) {
  commq::BridgeList bridges{};
  std::istringstream in(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(in, item, ',')) {
    const std::size_t dash = item.find('-');
    commq::NodeId u = 0, v = 0;
    if (dash == std::string::npos || !commq::detail::parse_node_id(item.substr(0, dash), u) ||
        !commq::detail::parse_node_id(item.substr(dash + 1), v)) {
      throw commq::input_error("malformed bridge \"" + item + "\", expected u-v");
    }
    if (count >= 4) throw commq::input_error("exactly 4 bridges required");
    bridges[count++] = {u, v};
  }
  if (count != 4) throw commq::input_error("exactly 4 bridges required");
  return bridges;
}

struct ScoreArgs {
  std::string graph_file;
  std::string partition_file;
  bool directed = false;
  bool weighted = false;
  bool tsv = false;
  int precision = 4;
};

struct OptimizeArgs {
  std::string graph_file;
  std::string objective = "qds";
  std::string method;
  std::string partition_out;
  bool directed = false;
  bool weighted = false;
  int precision = 4;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"community quality metrics: modularity, split penalty, Qs and modularity density"};
  app.require_subcommand(1);

  // score
  ScoreArgs score;
  CLI::App* score_cmd = app.add_subcommand("score", "score a partition of a graph");
  score_cmd->add_option("graph", score.graph_file, "edge list file")->required();
  score_cmd->add_option("partition", score.partition_file, "partition file")->required();
  score_cmd->add_flag("--directed", score.directed, "treat the graph as directed");
  score_cmd->add_flag("--weighted", score.weighted, "treat the graph as weighted");
  score_cmd->add_flag("--tsv", score.tsv, "emit TSV instead of the table");
  score_cmd->add_option("--precision", score.precision, "decimal places")->default_val(4);
  score_cmd->callback([&score] {
    const commq::Graph g = read_graph_file(score.graph_file, score.directed, score.weighted);
    const commq::Partition p = read_partition_file(score.partition_file, g.node_count());
    const commq::MetricReport r = commq::report(g, p);
    if (score.tsv) {
      commq::write_report_tsv(r, std::cout, score.precision);
    } else {
      commq::write_report_table(r, std::cout, score.precision);
    }
  });

  // generate
  CLI::App* gen = app.add_subcommand("generate", "write example graphs and partitions");
  gen->require_subcommand(1);

  struct {
    std::uint32_t m = 0;
    std::string graph_out;
  } complete;
  CLI::App* gen_complete = gen->add_subcommand("complete", "complete graph K_m");
  gen_complete->add_option("m", complete.m, "node count")->required();
  gen_complete->add_option("--graph-out", complete.graph_out, "edge list output")->required();
  gen_complete->callback([&complete] {
    const commq::Graph g = commq::complete_graph(complete.m);
    write_file(complete.graph_out, [&](std::ostream& out) { commq::write_edge_list(g, out); });
  });

  struct {
    std::uint32_t m = 0;
    std::uint32_t bridges = 0;
    std::string graph_out;
    std::string partition_out;
  } twoc;
  CLI::App* gen_twoc = gen->add_subcommand("two-cliques", "two m-cliques plus k bridges");
  gen_twoc->add_option("m", twoc.m, "clique size")->required();
  gen_twoc->add_option("bridges", twoc.bridges, "bridge count")->required();
  gen_twoc->add_option("--graph-out", twoc.graph_out, "edge list output")->required();
  gen_twoc->add_option("--partition-out", twoc.partition_out, "two-community partition output")
      ->required();
  gen_twoc->callback([&twoc] {
    const commq::TwoCliques result = commq::two_cliques(twoc.m, twoc.bridges);
    write_file(twoc.graph_out,
               [&](std::ostream& out) { commq::write_edge_list(result.graph, out); });
    write_file(twoc.partition_out,
               [&](std::ostream& out) { commq::write_partition(result.communities, out); });
  });

  struct {
    std::string clique_graph_out;
    std::string tree_graph_out;
    std::string clique_partition_out;
    std::string tree_partition_out;
  } ctp;
  CLI::App* gen_ctp =
      gen->add_subcommand("clique-tree", "clique pair vs tree pair, equal edge counts");
  gen_ctp->add_option("--clique-graph-out", ctp.clique_graph_out)->required();
  gen_ctp->add_option("--tree-graph-out", ctp.tree_graph_out)->required();
  gen_ctp->add_option("--clique-partition-out", ctp.clique_partition_out)->required();
  gen_ctp->add_option("--tree-partition-out", ctp.tree_partition_out)->required();
  gen_ctp->callback([&ctp] {
    const commq::CliqueTreePair pair = commq::clique_pair_vs_tree_pair();
    write_file(ctp.clique_graph_out,
               [&](std::ostream& out) { commq::write_edge_list(pair.clique_graph, out); });
    write_file(ctp.tree_graph_out,
               [&](std::ostream& out) { commq::write_edge_list(pair.tree_graph, out); });
    write_file(ctp.clique_partition_out,
               [&](std::ostream& out) { commq::write_partition(pair.clique_communities, out); });
    write_file(ctp.tree_partition_out,
               [&](std::ostream& out) { commq::write_partition(pair.tree_communities, out); });
  });

  struct {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::string graph_out;
    std::string single_out;
    std::string pairs_out;
  } ringargs;
  CLI::App* gen_ring = gen->add_subcommand("ring", "ring of n cliques of m nodes");
  gen_ring->add_option("n", ringargs.n, "clique count (even)")->required();
  gen_ring->add_option("m", ringargs.m, "clique size")->required();
  gen_ring->add_option("--graph-out", ringargs.graph_out)->required();
  gen_ring->add_option("--single-out", ringargs.single_out, "one community per clique")
      ->required();
  gen_ring->add_option("--pairs-out", ringargs.pairs_out, "consecutive cliques merged")
      ->required();
  gen_ring->callback([&ringargs] {
    const commq::RingOfCliques ring =
        commq::ring_of_cliques(commq::RingSpec{ringargs.n, ringargs.m});
    write_file(ringargs.graph_out,
               [&](std::ostream& out) { commq::write_edge_list(ring.graph, out); });
    write_file(ringargs.single_out,
               [&](std::ostream& out) { commq::write_partition(ring.single_cliques, out); });
    write_file(ringargs.pairs_out,
               [&](std::ostream& out) { commq::write_partition(ring.paired_cliques, out); });
  });

  struct {
    std::uint32_t m = 0;
    std::uint32_t p = 0;
    std::string bridges;
    std::string graph_out;
    std::string communities_out;
    std::string merged_out;
  } twop;
  CLI::App* gen_twop =
      gen->add_subcommand("two-pairs", "two m-cliques and two p-cliques with four bridges");
  gen_twop->add_option("m", twop.m, "large clique size")->required();
  gen_twop->add_option("p", twop.p, "small clique size")->required();
  gen_twop->add_option("--bridges", twop.bridges, "four bridges as u-v,u-v,u-v,u-v");
  gen_twop->add_option("--graph-out", twop.graph_out)->required();
  gen_twop->add_option("--communities-out", twop.communities_out, "one community per clique")
      ->required();
  gen_twop->add_option("--merged-out", twop.merged_out, "small cliques merged")->required();
  gen_twop->callback([&twop] {
    std::optional<commq::BridgeList> bridges;
    if (!twop.bridges.empty()) bridges = parse_bridge_list(twop.bridges);
    const commq::TwoPairsCliques result = commq::two_pairs_cliques(twop.m, twop.p, bridges);
    write_file(twop.graph_out,
               [&](std::ostream& out) { commq::write_edge_list(result.graph, out); });
    write_file(twop.communities_out,
               [&](std::ostream& out) { commq::write_partition(result.four_communities, out); });
    write_file(twop.merged_out,
               [&](std::ostream& out) { commq::write_partition(result.merged_small_pair, out); });
  });

  struct {
    std::uint32_t nodes = 0;
    double probability = 0.0;
    std::uint64_t seed = 0;
    bool weighted = false;
    bool directed = false;
    std::string graph_out;
  } rnd;
  CLI::App* gen_rnd = gen->add_subcommand("random", "seeded Erdos-Renyi style graph");
  gen_rnd->add_option("nodes", rnd.nodes, "node count")->required();
  gen_rnd->add_option("probability", rnd.probability, "edge probability")->required();
  gen_rnd->add_option("--seed", rnd.seed, "RNG seed")->required();
  gen_rnd->add_flag("--weighted", rnd.weighted, "draw weights in (0,2]");
  gen_rnd->add_flag("--directed", rnd.directed, "generate a directed graph");
  gen_rnd->add_option("--graph-out", rnd.graph_out)->required();
  gen_rnd->callback([&rnd] {
    const commq::Graph g =
        commq::random_graph(rnd.nodes, rnd.probability, rnd.weighted, rnd.directed, rnd.seed);
    write_file(rnd.graph_out, [&](std::ostream& out) { commq::write_edge_list(g, out); });
  });

  // optimize
  OptimizeArgs opt;
  CLI::App* opt_cmd = app.add_subcommand("optimize", "search for a high-objective partition");
  opt_cmd->add_option("graph", opt.graph_file, "edge list file")->required();
  opt_cmd->add_option("--objective", opt.objective, "modularity, qs, or qds")->required();
  opt_cmd->add_option("--method", opt.method, "exhaustive or greedy")->required();
  opt_cmd->add_option("--partition-out", opt.partition_out, "write the best partition here");
  opt_cmd->add_flag("--directed", opt.directed, "treat the graph as directed");
  opt_cmd->add_flag("--weighted", opt.weighted, "treat the graph as weighted");
  opt_cmd->add_option("--precision", opt.precision, "decimal places")->default_val(4);
  opt_cmd->callback([&opt] {
    const commq::Graph g = read_graph_file(opt.graph_file, opt.directed, opt.weighted);
    const commq::Objective objective = commq::parse_objective(opt.objective);
    commq::OptimizeResult result = [&] {
      if (opt.method == "exhaustive") return commq::exhaustive_best(g, objective);
      if (opt.method == "greedy") return commq::greedy_agglomerate(g, objective);
      throw commq::input_error("unknown method \"" + opt.method +
                               "\" (expected exhaustive or greedy)");
    }();
    std::cout << "objective " << commq::objective_name(objective) << "\n";
    std::cout << "value " << commq::detail::format_value(result.value, opt.precision) << "\n";
    std::cout << "communities " << result.partition.community_count() << "\n";
    if (!opt.partition_out.empty()) {
      write_file(opt.partition_out,
                 [&](std::ostream& out) { commq::write_partition(result.partition, out); });
    }
  });

  // sweep-ring
  struct {
    std::uint32_t n_min = 2, n_max = 60, m_min = 3, m_max = 20;
    std::string out;
    int precision = 4;
  } sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep-ring", "evaluate rings of cliques over a parameter grid");
  sweep_cmd->add_option("--n-min", sweep.n_min)->default_val(2);
  sweep_cmd->add_option("--n-max", sweep.n_max)->default_val(60);
  sweep_cmd->add_option("--m-min", sweep.m_min)->default_val(3);
  sweep_cmd->add_option("--m-max", sweep.m_max)->default_val(20);
  sweep_cmd->add_option("--out", sweep.out, "TSV output file (default stdout)");
  sweep_cmd->add_option("--precision", sweep.precision, "decimal places")->default_val(4);
  sweep_cmd->callback([&sweep] {
    const std::vector<commq::RingSweepRow> rows =
        commq::sweep_ring(sweep.n_min, sweep.n_max, sweep.m_min, sweep.m_max);
    emit(sweep.out,
         [&](std::ostream& out) { commq::write_sweep_tsv(rows, out, sweep.precision); });
  });

  // compare-series
  struct {
    std::string manifest;
    std::string out;
    int precision = 4;
  } cmp;
  CLI::App* cmp_cmd =
      app.add_subcommand("compare-series", "average metric differences over a snapshot series");
  cmp_cmd->add_option("manifest", cmp.manifest, "manifest file")->required();
  cmp_cmd->add_option("--out", cmp.out, "TSV output file (default stdout)");
  cmp_cmd->add_option("--precision", cmp.precision, "decimal places")->default_val(4);
  cmp_cmd->callback([&cmp] {
    const commq::SnapshotSeries series = commq::load_series_file(cmp.manifest);
    const commq::DifferenceTable table = commq::average_differences(series);
    emit(cmp.out,
         [&](std::ostream& out) { commq::write_difference_tsv(table, out, cmp.precision); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const commq::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const commq::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
