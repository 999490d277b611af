#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spexgraph/spectral.hpp"

using namespace spexgraph;

namespace {

void expect_eigenpair(const Graph& g, const SpectralResult& sr, double tol) {
  double mx = 0.0;
  for (Vertex u = 0; u < g.order(); ++u) {
    double av = 0.0;
    for (auto w : g.neighbors(u)) av += sr.perron[static_cast<std::size_t>(w)];
    EXPECT_LE(std::abs(av - sr.lambda * sr.perron[static_cast<std::size_t>(u)]), 10 * tol);
    EXPECT_GE(sr.perron[static_cast<std::size_t>(u)], 0.0);
    mx = std::max(mx, sr.perron[static_cast<std::size_t>(u)]);
  }
  EXPECT_EQ(mx, 1.0);
  EXPECT_EQ(sr.perron[static_cast<std::size_t>(sr.argmax_vertex)], 1.0);
}

}  // namespace

TEST(SpectralRadius, RegularAndBipartite) {
  auto c12 = spectral_radius(cycle_graph(12));
  EXPECT_NEAR(c12.lambda, 2.0, 1e-12);
  auto k33 = spectral_radius(complete_bipartite(3, 3));
  EXPECT_NEAR(k33.lambda, 3.0, 1e-12);
  expect_eigenpair(cycle_graph(12), c12, 1e-12);
}

TEST(SpectralRadius, S52AgainstCharacteristicPolynomial) {
  auto g = s_nk(5, 2);
  auto sr = spectral_radius(g);
  auto poly = oracle::characteristic_polynomial(g);
  double root = oracle::largest_root(poly, 5.0);
  EXPECT_NEAR(root, 3.0, 1e-9);
  EXPECT_NEAR(sr.lambda, 3.0, 1e-12);
  expect_eigenpair(g, sr, 1e-12);
}

TEST(SpectralRadius, AgreesWithDenseSolver) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 25);
    auto g = oracle::random_graph(n, 0.15 + 0.01 * static_cast<double>(seed % 40), seed);
    auto sr = spectral_radius(g);
    EXPECT_NEAR(sr.lambda, oracle::dense_lambda(g), 1e-9) << "seed " << seed;
    expect_eigenpair(g, sr, 1e-12);
  }
}

TEST(SpectralRadius, DisconnectedPicksLargestComponent) {
  auto g = disjoint_union(cycle_graph(4), complete_graph(4));
  auto sr = spectral_radius(g);
  EXPECT_NEAR(sr.lambda, 3.0, 1e-12);
  for (Vertex u = 0; u < 4; ++u) EXPECT_EQ(sr.perron[static_cast<std::size_t>(u)], 0.0);
  EXPECT_GE(sr.argmax_vertex, 4);
  auto e = spectral_radius(empty_graph(3));
  EXPECT_EQ(e.lambda, 0.0);
}

TEST(SpectralRadius, TiesGoToSmallestComponent) {
  auto g = disjoint_union(cycle_graph(5), cycle_graph(4));
  auto sr = spectral_radius(g);
  EXPECT_NEAR(sr.lambda, 2.0, 1e-12);
  EXPECT_LT(sr.argmax_vertex, 5);
}

TEST(SpectralRadius, BadInput) {
  EXPECT_THROW(spectral_radius(Graph(0)), ParameterError);
  SpectralOptions o;
  o.tol = 0.0;
  EXPECT_THROW(spectral_radius(cycle_graph(4), o), ParameterError);
}

TEST(SpectralRadius, IterationCapReportsBestIterate) {
  SpectralOptions o;
  o.max_iterations = 2;
  o.tol = 1e-15;
  try {
    spectral_radius(oracle::random_graph(40, 0.2, 7), o);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.best_iterate().residual, 0.0);
    EXPECT_EQ(e.best_iterate().perron.size(), 40u);
  }
}

TEST(SpectralRadius, MonotoneUnderEdgeAddition) {
  auto g = oracle::random_graph(20, 0.2, 3);
  double prev = spectral_radius(g).lambda;
  for (Vertex u = 0; u < 20; ++u) {
    for (Vertex v = u + 1; v < 20; v += 3) {
      if (g.adjacent(u, v)) continue;
      g = g.with_edge(u, v);
      double now = spectral_radius(g).lambda;
      EXPECT_GE(now, prev - 1e-12);
      prev = now;
    }
  }
}

TEST(SpectralRadius, AverageAndMaxDegreeBounds) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(18, 0.3, seed);
    double lambda = spectral_radius(g).lambda;
    EXPECT_GE(lambda, 2.0 * static_cast<double>(g.edge_count()) / g.order() - 1e-12);
    EXPECT_LE(lambda, g.max_degree() + 1e-12);
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_NEAR(s_nk_lambda_closed_form(5, 2), 3.0, 1e-12);
  for (int n = 2; n < 30; ++n) EXPECT_NEAR(s_nk_lambda_closed_form(n, 1), std::sqrt(n - 1.0), 1e-12);
  double v = s_nk_lambda_closed_form(100, 2);
  EXPECT_NEAR(v, 14.5089, 5e-5);
  EXPECT_LE(std::sqrt(200.0), v);
  EXPECT_NEAR(s_nk_lambda_closed_form(100, 2), spectral_radius(s_nk(100, 2)).lambda, 1e-9);
  EXPECT_THROW(s_nk_lambda_closed_form(3, 3), ParameterError);
}

TEST(Bounds, Examples) {
  auto b = lambda_bounds(100, 2);
  EXPECT_NEAR(b.lower, 14.5089, 5e-5);
  EXPECT_NEAR(b.upper, std::sqrt(396.0), 1e-12);
  EXPECT_GE(lambda_bounds(10, 2).lower, std::sqrt(20.0));
  for (int k = 2; k <= 6; ++k) EXPECT_NEAR(lambda_bounds(k + 1, k).lower, k, 1e-12);
  EXPECT_THROW(lambda_bounds(10, 1), ParameterError);
}

TEST(Rayleigh, Examples) {
  std::vector<double> ones(3, 1.0);
  auto k3 = rayleigh_certificate(complete_graph(3), ones);
  EXPECT_NEAR(k3.ratio_bound, 2.0, 1e-15);
  EXPECT_NEAR(k3.rayleigh_quotient, 2.0, 1e-15);

  std::vector<double> ind{1.0, 0.0, 0.0, 0.0};
  auto c4 = rayleigh_certificate(cycle_graph(4), ind);
  EXPECT_EQ(c4.ratio_bound, 0.0);
  EXPECT_LE(c4.ratio_bound, 2.0);

  std::vector<double> y{1.0, 1.0, 2.0 / 3, 2.0 / 3, 2.0 / 3};
  auto s = rayleigh_certificate(s_nk(5, 2), y);
  EXPECT_LE(s.ratio_bound, 3.0 + 1e-12);
  EXPECT_NEAR(s.ratio_bound, 3.0, 1e-12);
  EXPECT_NEAR(spectral_radius(s_nk(5, 2)).lambda, 3.0, 1e-12);

  std::vector<double> zero(4, 0.0);
  EXPECT_THROW(rayleigh_certificate(cycle_graph(4), zero), ParameterError);
  std::vector<double> neg{1.0, -1.0, 0.0, 0.0};
  EXPECT_THROW(rayleigh_certificate(cycle_graph(4), neg), ParameterError);
}

TEST(Rayleigh, NeverExceedsLambda) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = oracle::random_graph(12, 0.35, seed);
    std::vector<double> y(12);
    for (std::size_t i = 0; i < 12; ++i) y[i] = 0.1 + static_cast<double>((seed * 31 + i * 17) % 10);
    auto c = rayleigh_certificate(g, y);
    double lambda = oracle::dense_lambda(g);
    EXPECT_LE(c.ratio_bound, lambda + 1e-12);
    EXPECT_LE(c.rayleigh_quotient, lambda + 1e-12);
  }
}

TEST(Constants, KEqualsTwo) {
  EXPECT_DOUBLE_EQ(eta_bound(2), 15.0 / 64);
  auto c = choose_constants(2);
  EXPECT_DOUBLE_EQ(c.eta, 15.0 / 128);
  EXPECT_DOUBLE_EQ(epsilon_bound(2, c.eta), c.eta / 258);
  EXPECT_LT(epsilon_bound(2, c.eta), 1.0 / 128);
  EXPECT_TRUE(constants_valid(c));
}

TEST(Constants, AllSmallK) {
  for (int k = 2; k <= 10; ++k) {
    auto c = choose_constants(k);
    EXPECT_TRUE(constants_valid(c)) << k;
    double a = c.alpha / (20.0 * k);
    EXPECT_EQ(c.delta, c.epsilon * a * a / (k + 1.0));
    EXPECT_GT(c.eta, c.epsilon);
    EXPECT_GT(c.epsilon, c.alpha);
  }
  EXPECT_THROW(choose_constants(1), ParameterError);
}

TEST(Classify, ArgmaxAlwaysLarge) {
  auto c = choose_constants(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = oracle::random_graph(15, 0.3, seed);
    auto sr = spectral_radius(g);
    auto w = classify_vertices(g, sr, c);
    EXPECT_TRUE(w.large.contains(sr.argmax_vertex));
    EXPECT_TRUE(w.heavy.subset_of(w.large));
    EXPECT_TRUE(w.large.subset_of(w.medium));
    EXPECT_FALSE(w.large.intersects(w.small));
    EXPECT_EQ((w.large | w.small).size(), 15u);
    EXPECT_EQ((w.heavy | w.exceptional | w.remaining).size(), 15u);
    EXPECT_FALSE(w.heavy.intersects(w.exceptional));
  }
}

TEST(Classify, VertexTransitiveHasNoSmallVertices) {
  auto g = cycle_graph(6);
  auto sr = spectral_radius(g);
  auto w = classify_vertices(g, sr, choose_constants(2));
  EXPECT_EQ(w.large.size(), 6u);
  EXPECT_TRUE(w.small.empty());
}

// At n = 20 the independent vertices of S_{n,2}^+ have weight 2/lambda or more,
// well above eta = 15/128, so every vertex is heavy. Only once lambda grows
// past roughly 2/eta + 1 do the heavy vertices shrink to the clique.
TEST(Classify, HeavySetOfSplitGraph) {
  auto c = choose_constants(2);
  auto small = s_nk_plus(20, 2);
  auto ws = classify_vertices(small, spectral_radius(small), c);
  EXPECT_TRUE(ws.heavy.contains(0));
  EXPECT_TRUE(ws.heavy.contains(1));
  EXPECT_EQ(ws.heavy.size(), 20u);

  auto big = s_nk_plus(200, 2);
  auto sr = spectral_radius(big);
  auto wb = classify_vertices(big, sr, c);
  EXPECT_EQ(wb.heavy.members(), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(wb.exceptional.empty());
  EXPECT_EQ(wb.remaining.size(), 198u);
}

TEST(Classify, RootedLayers) {
  auto g = s_nk(10, 2);
  auto sr = spectral_radius(g);
  auto w = classify_vertices(g, sr, choose_constants(2), Vertex{3});
  ASSERT_TRUE(w.rooted.has_value());
  EXPECT_EQ(w.rooted->layers.size(1), 2u);
  EXPECT_EQ(w.rooted->large.size(), w.rooted->layers.layers.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < w.rooted->large.size(); ++i)
    total += w.rooted->large[i].size() + w.rooted->small[i].size();
  EXPECT_EQ(total, 10u);
}
