#include "commq/series.hpp"

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commq/generators.hpp"
#include "gtest/gtest.h"
#include "testutil.hpp"

namespace fs = std::filesystem;
using commq::DifferenceTable;
using commq::input_error;
using commq::Partition;
using commq::SnapshotSeries;

namespace {

class SeriesFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("commq_series_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name);
    out << content;
  }

  SnapshotSeries load(const std::string& manifest) {
    std::istringstream in(manifest);
    return commq::load_series(in, dir_);
  }

  fs::path dir_;
};

SnapshotSeries table_one_series(bool planted_first) {
  const commq::TwoCliques tc = commq::two_cliques(4, 0);
  Partition planted = tc.communities;
  Partition whole = Partition::whole(8);
  SnapshotSeries series;
  series.label_a = planted_first ? "planted" : "whole";
  series.label_b = planted_first ? "whole" : "planted";
  if (planted_first) {
    series.snapshots.push_back({tc.graph, planted, whole});
  } else {
    series.snapshots.push_back({tc.graph, whole, planted});
  }
  return series;
}

}  // namespace

TEST_F(SeriesFiles, LoadsThreeSnapshotsWithHeader) {
  const commq::TwoCliques tc = commq::two_cliques(3, 1);
  {
    std::ofstream g(dir_ / "g.tsv");
    commq::write_edge_list(tc.graph, g);
    std::ofstream a(dir_ / "a.tsv");
    commq::write_partition(tc.communities, a);
    std::ofstream b(dir_ / "b.tsv");
    commq::write_partition(Partition::whole(6), b);
  }
  const SnapshotSeries series = load(
      "# demo manifest\n"
      "directed 0\n"
      "weighted 0\n"
      "labels left right\n"
      "g.tsv a.tsv b.tsv\n"
      "g.tsv a.tsv b.tsv\n"
      "g.tsv b.tsv a.tsv\n");
  EXPECT_EQ(series.snapshots.size(), 3u);
  EXPECT_EQ(series.label_a, "left");
  EXPECT_EQ(series.label_b, "right");
  EXPECT_FALSE(series.directed);
}

TEST_F(SeriesFiles, EmptyManifestRejected) {
  try {
    load("# nothing here\n");
    FAIL() << "expected input_error";
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("at least one snapshot"), std::string::npos);
  }
}

TEST_F(SeriesFiles, ErrorNamesSnapshotAndFile) {
  const commq::TwoCliques tc = commq::two_cliques(3, 1);
  {
    std::ofstream g(dir_ / "g.tsv");
    commq::write_edge_list(tc.graph, g);
    std::ofstream a(dir_ / "ok.tsv");
    commq::write_partition(tc.communities, a);
  }
  write("bad.tsv", "0 0\n1 0\n");  // nodes 2..5 missing
  try {
    load("g.tsv ok.tsv ok.tsv\ng.tsv ok.tsv bad.tsv\n");
    FAIL() << "expected input_error";
  } catch (const input_error& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("snapshot 1"), std::string::npos) << what;
    EXPECT_NE(what.find("bad.tsv"), std::string::npos) << what;
    EXPECT_NE(what.find("missing"), std::string::npos) << what;
  }
}

TEST_F(SeriesFiles, MissingFileAndMisplacedFlagRejected) {
  EXPECT_THROW(load("nope.tsv a.tsv b.tsv\n"), input_error);
  const commq::TwoCliques tc = commq::two_cliques(3, 0);
  {
    std::ofstream g(dir_ / "g.tsv");
    commq::write_edge_list(tc.graph, g);
    std::ofstream a(dir_ / "a.tsv");
    commq::write_partition(tc.communities, a);
  }
  EXPECT_THROW(load("g.tsv a.tsv a.tsv\nweighted 1\n"), input_error);
  EXPECT_THROW(load("directed maybe\ng.tsv a.tsv a.tsv\n"), input_error);
}

TEST(AverageDifferences, IdenticalStreamsGiveExactZeros) {
  const commq::TwoCliques tc = commq::two_cliques(4, 2);
  SnapshotSeries series;
  series.snapshots.push_back({tc.graph, tc.communities, tc.communities});
  series.snapshots.push_back({tc.graph, Partition::whole(8), Partition::whole(8)});
  const DifferenceTable table = commq::average_differences(series);
  for (double v : table.mean_difference) EXPECT_EQ(v, 0.0);
}

TEST(AverageDifferences, TableOneSnapshotDeltas) {
  const DifferenceTable table = commq::average_differences(table_one_series(true));
  EXPECT_NEAR(table.mean_difference[0], 0.5, 5e-4);    // delta Q
  EXPECT_NEAR(table.mean_difference[2], 0.255, 5e-4);  // delta Qds
}

TEST(AverageDifferences, SwappingStreamsNegatesBitForBit) {
  // planted vs singletons on the bridged graph: every metric differs, so
  // the bitwise check is strict (exact zeros would compare +0.0 to -0.0)
  const commq::TwoCliques tc = commq::two_cliques(4, 2);
  SnapshotSeries forward_series, swapped_series;
  forward_series.snapshots.push_back({tc.graph, tc.communities, Partition::singletons(8)});
  swapped_series.snapshots.push_back({tc.graph, Partition::singletons(8), tc.communities});
  const DifferenceTable forward = commq::average_differences(forward_series);
  const DifferenceTable swapped = commq::average_differences(swapped_series);
  for (std::size_t k = 0; k < 8; ++k) {
    ASSERT_NE(forward.mean_difference[k], 0.0) << commq::kDifferenceMetricNames[k];
    EXPECT_EQ(std::bit_cast<std::uint64_t>(swapped.mean_difference[k]),
              std::bit_cast<std::uint64_t>(-forward.mean_difference[k]))
        << commq::kDifferenceMetricNames[k];
  }

  // with exact-zero entries the negation still holds as values
  const DifferenceTable f2 = commq::average_differences(table_one_series(true));
  const DifferenceTable s2 = commq::average_differences(table_one_series(false));
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(s2.mean_difference[k], -f2.mean_difference[k]);
  }
}

TEST(AverageDifferences, RepeatedSnapshotEqualsSingle) {
  const SnapshotSeries one = table_one_series(true);
  SnapshotSeries five = one;
  for (int i = 0; i < 4; ++i) five.snapshots.push_back(one.snapshots.front());
  const DifferenceTable t1 = commq::average_differences(one);
  const DifferenceTable t5 = commq::average_differences(five);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(t1.mean_difference[k], t5.mean_difference[k], 1e-15);
  }
}

TEST(AverageDifferences, SyntheticSeriesAggregationMatchesHandRolledMean) {
  // ten snapshots of the bridged two-clique graph: planted communities
  // against per-node singletons
  const commq::TwoCliques tc = commq::two_cliques(4, 2);
  SnapshotSeries series;
  for (int i = 0; i < 10; ++i) {
    series.snapshots.push_back({tc.graph, tc.communities, Partition::singletons(8)});
  }
  const DifferenceTable table = commq::average_differences(series);

  const std::array<double, 8> a = commq::snapshot_metrics(commq::report(tc.graph, tc.communities));
  const std::array<double, 8> b =
      commq::snapshot_metrics(commq::report(tc.graph, Partition::singletons(8)));
  double hand[8];
  for (std::size_t k = 0; k < 8; ++k) {
    double sum = 0.0;
    for (int i = 0; i < 10; ++i) sum += a[k] - b[k];
    hand[k] = sum / 10.0;
  }
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_DOUBLE_EQ(table.mean_difference[k], hand[k]);
  }
  EXPECT_GT(table.mean_difference[2], 0.0);  // delta Qds favors planted
  EXPECT_LT(table.mean_difference[7], 0.0);  // delta conductance favors planted
}

TEST(DifferenceTsv, LayoutAndAggregationNote) {
  const DifferenceTable table = commq::average_differences(table_one_series(true));
  std::ostringstream out;
  commq::write_difference_tsv(table, out);
  const std::string text = out.str();
  EXPECT_NE(text.find("planted minus whole over 1 snapshots"), std::string::npos);
  EXPECT_NE(text.find("per-snapshot aggregation"), std::string::npos);
  EXPECT_NE(text.find("metric\tmean_difference\n"), std::string::npos);
  EXPECT_NE(text.find("q\t0.5000\n"), std::string::npos);
  EXPECT_NE(text.find("qds\t0.2551\n"), std::string::npos);
  EXPECT_NE(text.find("conductance\t"), std::string::npos);
}
