#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spexgraph/extremal.hpp"

using namespace spexgraph;

namespace {

std::vector<Graph> all_labeled(int n) {
  std::vector<Graph> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1U) e.emplace_back(i, j);
    out.emplace_back(n, e);
  }
  return out;
}

bool brute_free(const Graph& g, const ForbiddenFamily& f) {
  for (int ell : f.lengths())
    if (oracle::brute_has(g, ell, true)) return false;
  return true;
}

std::set<std::string> keys(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_graph6(g));
  return out;
}

}  // namespace

TEST(Extremal, TuranNumberOfFourCycleOnFiveVertices) {
  ForbiddenFamily c4({4});
  auto rec = compute_extremal(5, c4, Objective::edges);
  EXPECT_EQ(rec.best_value, 6.0);
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  EXPECT_TRUE(keys(rec.argmax).count(canonical_graph6(bowtie)));

  std::size_t best = 0;
  std::vector<Graph> winners;
  for (const auto& g : all_labeled(5)) {
    if (!brute_free(g, c4)) continue;
    if (g.edge_count() > best) {
      best = g.edge_count();
      winners.clear();
    }
    if (g.edge_count() == best) winners.push_back(g);
  }
  EXPECT_EQ(static_cast<double>(best), rec.best_value);
  EXPECT_EQ(keys(winners), keys(rec.argmax));
}

TEST(Extremal, SpectralSixCycleOnSixVertices) {
  ForbiddenFamily c6({6});
  auto rec = compute_extremal(6, c6, Objective::lambda);
  EXPECT_GE(rec.best_value, 4.0 - 1e-12);

  double best = 0.0;
  std::vector<std::pair<double, Graph>> all;
  for (const auto& g : all_labeled(6)) {
    if (!brute_free(g, c6)) continue;
    double l = oracle::dense_lambda(g);
    best = std::max(best, l);
    all.emplace_back(l, g);
  }
  std::vector<Graph> winners;
  for (auto& [l, g] : all)
    if (l >= best - 1e-9) winners.push_back(g);
  EXPECT_NEAR(rec.best_value, best, 1e-9);
  EXPECT_EQ(keys(winners), keys(rec.argmax));
  for (double v : rec.argmax_values) EXPECT_NEAR(v, best, 1e-9);
}

TEST(Extremal, MantelTuranGraphs) {
  for (int n = 3; n <= 8; ++n) {
    auto rec = compute_extremal(n, ForbiddenFamily({3}), Objective::edges);
    EXPECT_EQ(rec.best_value, static_cast<double>(n * n / 4));
    ASSERT_EQ(rec.argmax.size(), 1u);
    EXPECT_EQ(canonical_graph6(rec.argmax[0]), canonical_graph6(turan_graph(n, 2)));
  }
}

TEST(Extremal, CorpusMatchesBuiltin) {
  ForbiddenFamily fam({5});
  auto builtin = compute_extremal(6, fam, Objective::lambda);
  std::vector<Graph> corpus;
  std::vector<Vertex> perm{5, 3, 1, 0, 2, 4};
  for (const auto& g : enumerate_graphs(6)) {
    corpus.push_back(g.relabeled(perm));
    corpus.push_back(g);
  }
  auto scanned = compute_extremal(6, fam, Objective::lambda, corpus);
  EXPECT_NEAR(scanned.best_value, builtin.best_value, 1e-12);
  EXPECT_EQ(keys(scanned.argmax), keys(builtin.argmax));
  EXPECT_EQ(scanned.graphs_scanned, builtin.graphs_scanned);
}

TEST(Extremal, CorpusWithMixedOrders) {
  std::vector<Graph> corpus{cycle_graph(5), complete_graph(5), cycle_graph(6)};
  try {
    compute_extremal(5, ForbiddenFamily({4}), Objective::edges, corpus);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("record 2"), std::string::npos) << e.what();
  }
}

TEST(Extremal, ReportsAreDeterministic) {
  auto a = compute_extremal(7, ForbiddenFamily({6}), Objective::lambda);
  auto b = compute_extremal(7, ForbiddenFamily({6}), Objective::lambda);
  EXPECT_EQ(extremal_csv_row(a, false), extremal_csv_row(b, false));
  EXPECT_EQ(extremal_json(a, false).dump(), extremal_json(b, false).dump());
  auto row = extremal_csv_row(a, false);
  EXPECT_EQ(row.rfind("7,\"C6\",lambda,", 0), 0u) << row;
  EXPECT_NE(row.find(graph6_encode(a.argmax[0])), std::string::npos);
  EXPECT_TRUE(extremal_json(a, false)["seconds"].is_null());
  EXPECT_FALSE(extremal_json(a, true)["seconds"].is_null());
  EXPECT_EQ(extremal_csv_header().substr(0, 12), "n,family,obj");
}

TEST(Extremal, EdgeObjectiveFormatsAsInteger) {
  auto rec = compute_extremal(5, ForbiddenFamily({4}), Objective::edges);
  EXPECT_EQ(format_value(Objective::edges, rec.best_value), "6");
  EXPECT_EQ(extremal_json(rec, false)["best_value"].get<long long>(), 6);
  EXPECT_EQ(parse_objective("lambda"), Objective::lambda);
  EXPECT_THROW(parse_objective("weight"), ParameterError);
}
