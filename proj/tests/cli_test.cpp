#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spexgraph/cli.hpp"

using namespace spexgraph;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string l;
  while (std::getline(is, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, ConstructGraph6) {
  auto r = run({"construct", "--family", "s_nk_plus", "--n", "20", "--k", "2", "--out", "g6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_EQ(graph6_decode(ls[0]), s_nk_plus(20, 2));
}

TEST(Cli, ConstructOtherFormats) {
  auto j = run({"construct", "--family", "complete_bipartite", "--params", "3,4", "--out", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["m"], 12);
  auto t = run({"construct", "--family", "cycle", "--n", "6", "--format", "table"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("m=6"), std::string::npos);
}

TEST(Cli, ConstructParameterErrors) {
  EXPECT_EQ(run({"construct", "--family", "s_nk", "--n", "10"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "s_nk", "--n", "3", "--k", "3"}).code, 2);
  auto bad = run({"construct", "--family", "petersen", "--n", "10"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("petersen"), std::string::npos);
  auto flag = run({"construct", "--family", "cycle", "--n", "5", "--colour"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_NE(flag.err.find("--colour"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "cycle", "--n", "5", "--out", "xml"}).code, 2);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, SpectralOfSplitGraph) {
  auto r = run({"spectral", "--g6", "-", "--tol", "1e-12"}, graph6_encode(s_nk(5, 2)) + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_NEAR(doc["lambda"].get<double>(), s_nk_lambda_closed_form(5, 2), 1e-12);
  EXPECT_EQ(doc["perron"].size(), 5u);
}

TEST(Cli, MalformedGraph6IsDataError) {
  auto r = run({"spectral", "--g6", "-"}, "Bg\nB!\n");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("at byte 1"), std::string::npos) << r.err;
  EXPECT_EQ(run({"spectral", "--g6", "/nonexistent/graphs.g6"}).code, 3);
  EXPECT_EQ(run({"spectral"}).code, 2);
}

TEST(Cli, CheckFree) {
  std::string input = graph6_encode(s_nk_plus(20, 2)) + "\n" + graph6_encode(cycle_graph(6)) + "\n";
  auto r = run({"check-free", "--g6", "-", "--forbid", "C6"}, input);
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_NE(ls[0].find("-free: yes"), std::string::npos);
  EXPECT_NE(ls[1].find("-free: no"), std::string::npos);
  EXPECT_NE(ls[1].find("witness cycle"), std::string::npos);
  auto k = run({"check-free", "--g6", "-", "--k", "2", "--both", "--out", "json"}, input);
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(nlohmann::json::parse(lines(k.out)[0])["family"], "C5,C6");
  EXPECT_EQ(run({"check-free", "--g6", "-"}, input).code, 2);
}

TEST(Cli, ExtremalCsvIsDeterministic) {
  std::vector<std::string> args{"extremal", "--n", "7", "--forbid", "C6", "--objective", "lambda", "--format", "csv"};
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto ls = lines(a.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], extremal_csv_header());
  auto direct = compute_extremal(7, ForbiddenFamily({6}), Objective::lambda);
  EXPECT_EQ(ls[1], extremal_csv_row(direct, false));
  args.push_back("--threads");
  args.push_back("3");
  EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, ExtremalCapacityAndCorpusErrors) {
  auto cap = run({"extremal", "--n", "10", "--forbid", "C6"});
  EXPECT_EQ(cap.code, 2);
  EXPECT_NE(cap.err.find("graph6"), std::string::npos);
  auto mixed = run({"extremal", "--n", "5", "--forbid", "C4", "--g6", "-"},
                   graph6_encode(cycle_graph(5)) + "\n" + graph6_encode(cycle_graph(6)) + "\n");
  EXPECT_EQ(mixed.code, 3);
  EXPECT_NE(mixed.err.find("record 1"), std::string::npos) << mixed.err;
  EXPECT_EQ(run({"extremal", "--n", "5", "--forbid", "C4", "--objective", "mass"}).code, 2);
}

TEST(Cli, ExtremalFromCorpus) {
  std::string corpus;
  for (const auto& g : enumerate_graphs(5)) corpus += graph6_encode(g) + "\n";
  auto r = run({"extremal", "--n", "5", "--forbid", "C4", "--objective", "edges", "--g6", "-", "--out", "json"},
               corpus);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["best_value"], 6);
}

TEST(Cli, SearchIsSeeded) {
  std::vector<std::string> args{"search", "--n", "12", "--forbid", "C6", "--seed", "5", "--max-iters", "300",
                                "--out", "json"};
  auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_FALSE(doc["theorem_tension"].get<bool>());
  EXPECT_TRUE(is_family_free(graph6_decode(doc["graph6"].get<std::string>()), ForbiddenFamily({6})).free);
}

TEST(Cli, AuditExitCodes) {
  auto ok = run({"audit", "--g6", "-", "--k", "2"}, graph6_encode(cycle_graph(5)) + "\n");
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("lem.degree-powers"), std::string::npos);

  // A path is not spectrally extremal, so claiming exhaustive provenance
  // makes the Perron floor a failing hard check.
  auto bad = run({"audit", "--g6", "-", "--k", "2", "--even-only", "--provenance", "exhaustive"},
                 graph6_encode(path_graph(8)) + "\n");
  EXPECT_EQ(bad.code, 4) << bad.out << bad.err;

  auto id = run({"audit", "--g6", "-", "--k", "2", "--checks", "lem.bogus"}, "Dhc\n");
  EXPECT_EQ(id.code, 2);
  EXPECT_NE(id.err.find("lem.bogus"), std::string::npos);

  auto mode = run({"audit", "--g6", "-", "--k", "2", "--both"}, "Dhc\n");
  EXPECT_EQ(mode.code, 2);
  EXPECT_NE(mode.err.find("witness"), std::string::npos);
}

TEST(Cli, AuditJsonFilteredAndThreaded) {
  std::string corpus;
  EnumerationOptions opt;
  opt.prune_family = ForbiddenFamily({6});
  for (const auto& g : enumerate_graphs(6, opt)) corpus += graph6_encode(g) + "\n";
  std::vector<std::string> args{"audit", "--g6", "-", "--k", "2", "--checks", "lem.degree-powers,eq.N1-edge-bound",
                                "--out", "json"};
  auto one = run(args, corpus);
  ASSERT_EQ(one.code, 0) << one.err;
  auto ls = lines(one.out);
  EXPECT_EQ(ls.size(), 2 * lines(corpus).size());
  for (const auto& l : ls) EXPECT_NE(nlohmann::json::parse(l)["status"], "fail");
  args.push_back("--threads");
  args.push_back("3");
  EXPECT_EQ(run(args, corpus).out, one.out);
}

TEST(Cli, AuditBipartition) {
  auto r = run({"audit", "--g6", "-", "--k", "1", "--U", "0,2,4", "--checks", "lem.bipartition-B", "--out", "json"},
               graph6_encode(cycle_graph(6)) + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "vacuous");
}

TEST(Cli, ReadsGraph6File) {
  const std::string path = ::testing::TempDir() + "cli_test_graphs.g6";
  {
    std::ofstream f(path);
    f << graph6_encode(complete_bipartite(3, 3)) << "\n";
  }
  auto r = run({"spectral", "--g6", path, "--out", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(lines(r.out).at(1).find(",3.000000000000,"), std::string::npos) << r.out;
  std::remove(path.c_str());
}
