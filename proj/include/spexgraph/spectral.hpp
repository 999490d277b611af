#pragma once

// Spectral radius and Perron vector of the adjacency matrix, closed-form
// bounds, Rayleigh certificates, and the Perron-weight vertex classes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spexgraph/errors.hpp"
#include "spexgraph/graph.hpp"

namespace spexgraph {

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;  // max entry exactly 1, zero off the winning component
  Vertex argmax_vertex = 0;
  double residual = 0.0;       // ||A v - lambda v||_inf on the winning component
  long iterations = 0;         // summed over components
};

struct SpectralOptions {
  double tol = 1e-12;
  long max_iterations = 1'000'000;
  // Optional start vector (length n, nonnegative); all-ones when empty.
  std::span<const double> warm_start{};
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SpectralResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SpectralResult& best_iterate() const noexcept { return best_; }

 private:
  SpectralResult best_;
};

namespace detail {

struct ComponentEigen {
  double lambda = 0.0;
  std::vector<double> vec;  // local indexing, max entry 1
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
};

// Power iteration on (A + I) restricted to one connected component given in
// compressed-row form over local indices. The iterate is kept in extended
// precision: on large split graphs the rounding of a double iterate alone
// holds the residual above 1e-12.
inline ComponentEigen component_power_iteration(const std::vector<std::size_t>& offsets,
                                                const std::vector<int>& targets, const std::vector<double>& start,
                                                const SpectralOptions& opt) {
  using real = long double;
  const std::size_t n = offsets.size() - 1;
  ComponentEigen out;
  if (n == 1) {
    out.vec = {1.0};
    out.converged = true;
    return out;
  }
  std::vector<real> x(start.begin(), start.end()), ax(n);
  auto multiply = [&] {
    for (std::size_t u = 0; u < n; ++u) {
      real s = 0.0L;
      for (std::size_t p = offsets[u]; p < offsets[u + 1]; ++p) s += x[static_cast<std::size_t>(targets[p])];
      ax[u] = s;
    }
  };
  auto normalize = [&] {
    const real mx = *std::max_element(x.begin(), x.end());
    for (auto& e : x) e /= mx;
  };
  normalize();
  double best_residual = std::numeric_limits<double>::infinity();
  for (long it = 0; it < opt.max_iterations; ++it) {
    multiply();
    real num = 0.0L, den = 0.0L;
    for (std::size_t u = 0; u < n; ++u) {
      num += x[u] * ax[u];
      den += x[u] * x[u];
    }
    const real lam = num / den;
    real res = 0.0L;
    for (std::size_t u = 0; u < n; ++u) res = std::max(res, std::abs(ax[u] - lam * x[u]));
    if (static_cast<double>(res) < best_residual || it == 0) {
      best_residual = static_cast<double>(res);
      out.lambda = static_cast<double>(lam);
      out.vec.assign(x.begin(), x.end());
      out.residual = static_cast<double>(res);
    }
    out.iterations = it + 1;
    if (res <= opt.tol) {
      out.converged = true;
      return out;
    }
    for (std::size_t u = 0; u < n; ++u) x[u] += ax[u];
    normalize();
  }
  return out;
}

}  // namespace detail

// Dominant eigenpair of A(G). Each connected component is solved separately
// and the largest component value is reported. Ties keep the component with
// the smallest vertex.
inline SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opt = {}) {
  if (g.order() < 1) throw ParameterError("spectral_radius: graph must have at least one vertex");
  if (!(opt.tol > 0.0)) throw ParameterError("spectral_radius: tol must be > 0");
  if (!opt.warm_start.empty() && opt.warm_start.size() != static_cast<std::size_t>(g.order())) {
    throw ParameterError("spectral_radius: warm start length mismatch");
  }
  const auto n = static_cast<std::size_t>(g.order());
  SpectralResult best;
  best.perron.assign(n, 0.0);
  bool have = false;
  bool failed = false;
  long total_iterations = 0;
  std::vector<int> local(n, -1);
  for (const auto& comp : connected_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
    std::vector<std::size_t> offsets{0};
    std::vector<int> targets;
    std::vector<double> start(comp.size(), 1.0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto w : g.neighbors(comp[i])) targets.push_back(local[static_cast<std::size_t>(w)]);
      offsets.push_back(targets.size());
      if (!opt.warm_start.empty()) {
        start[i] = std::max(opt.warm_start[static_cast<std::size_t>(comp[i])], 0.0) + 1e-3;
      }
    }
    auto eig = detail::component_power_iteration(offsets, targets, start, opt);
    total_iterations += eig.iterations;
    if (!have || eig.lambda > best.lambda + opt.tol) {
      have = true;
      failed = !eig.converged;
      best.lambda = eig.lambda;
      best.residual = eig.residual;
      std::fill(best.perron.begin(), best.perron.end(), 0.0);
      std::size_t arg = 0;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        best.perron[static_cast<std::size_t>(comp[i])] = eig.vec[i];
        if (eig.vec[i] > eig.vec[arg]) arg = i;
      }
      best.argmax_vertex = comp[arg];
      // Pin the maximum to exactly 1.
      const double mx = eig.vec[arg];
      for (auto v : comp) best.perron[static_cast<std::size_t>(v)] /= mx;
      best.perron[static_cast<std::size_t>(comp[arg])] = 1.0;
    } else if (!eig.converged) {
      failed = true;
    }
  }
  best.iterations = total_iterations;
  if (failed) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "power iteration did not reach tol %.3g; residual %.3g", opt.tol, best.residual);
    throw ConvergenceError(buf, best);
  }
  return best;
}

// lambda(S_{n,k}) = (k - 1 + sqrt((k-1)^2 + 4k(n-k))) / 2.
inline double s_nk_lambda_closed_form(int n, int k) {
  if (k < 1 || n <= k) throw ParameterError("s_nk_lambda_closed_form: requires n > k >= 1");
  const double km1 = k - 1.0;
  return (km1 + std::sqrt(km1 * km1 + 4.0 * k * static_cast<double>(n - k))) / 2.0;
}

struct LambdaBounds {
  double lower = 0.0;  // lambda(S_{n,k})
  double upper = 0.0;  // sqrt(2k(n-1))
};

// Window for the spectral radius of an extremal C_{2k+2}-free graph.
inline LambdaBounds lambda_bounds(int n, int k) {
  if (k < 2 || n <= k) throw ParameterError("lambda_bounds: requires n > k >= 2");
  return {s_nk_lambda_closed_form(n, k), std::sqrt(2.0 * k * static_cast<double>(n - 1))};
}

struct RayleighCertificate {
  double ratio_bound = 0.0;        // min over supp(y) of (Ay)_u / y_u
  double rayleigh_quotient = 0.0;  // y^T A y / y^T y
};

// Both fields are certified lower bounds on lambda(G) for nonnegative y != 0.
inline RayleighCertificate rayleigh_certificate(const Graph& g, std::span<const double> y) {
  if (y.size() != static_cast<std::size_t>(g.order())) throw ParameterError("rayleigh_certificate: length mismatch");
  bool nonzero = false;
  for (auto e : y) {
    if (e < 0.0 || !std::isfinite(e)) throw ParameterError("rayleigh_certificate: y must be finite and nonnegative");
    if (e > 0.0) nonzero = true;
  }
  if (!nonzero) throw ParameterError("rayleigh_certificate: y must not be the zero vector");
  RayleighCertificate out;
  out.ratio_bound = std::numeric_limits<double>::infinity();
  double num = 0.0, den = 0.0;
  for (Vertex u = 0; u < g.order(); ++u) {
    double ay = 0.0;
    for (auto w : g.neighbors(u)) ay += y[static_cast<std::size_t>(w)];
    const double yu = y[static_cast<std::size_t>(u)];
    num += yu * ay;
    den += yu * yu;
    if (yu > 0.0) out.ratio_bound = std::min(out.ratio_bound, ay / yu);
  }
  out.rayleigh_quotient = num / den;
  return out;
}

// ---------------------------------------------------------------------------
// Constants and weight classes

struct Constants {
  int k = 2;
  double eta = 0.0;
  double epsilon = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
};

inline double eta_bound(int k) {
  const double kk = k;
  return std::min({1.0 / (kk + 1.0), 1.0 - 1.0 / (16.0 * kk * kk * kk), 0.25 - 1.0 / (16.0 * kk * kk)});
}

inline double epsilon_bound(int k, double eta) {
  const double k3 = static_cast<double>(k) * k * k;
  return std::min({1.0 / (16.0 * k3), eta / 2.0, eta / (32.0 * k3 + 2.0)});
}

inline double alpha_bound(int k, double epsilon) { return epsilon * epsilon / (10.0 * k); }

inline double delta_for(int k, double epsilon, double alpha) {
  const double a = alpha / (20.0 * k);
  return epsilon * a * a / (k + 1.0);
}

// Each constant is half of its upper bound, chosen in the order eta,
// epsilon, alpha; delta follows by definition.
inline Constants choose_constants(int k) {
  if (k < 2) throw ParameterError("choose_constants: requires k >= 2");
  Constants c;
  c.k = k;
  c.eta = eta_bound(k) / 2.0;
  c.epsilon = epsilon_bound(k, c.eta) / 2.0;
  c.alpha = alpha_bound(k, c.epsilon) / 2.0;
  c.delta = delta_for(k, c.epsilon, c.alpha);
  return c;
}

inline bool constants_valid(const Constants& c) {
  return c.k >= 2 && c.eta > 0 && c.epsilon > 0 && c.alpha > 0 && c.eta < eta_bound(c.k) &&
         c.epsilon < epsilon_bound(c.k, c.eta) && c.alpha < alpha_bound(c.k, c.epsilon) &&
         c.delta == delta_for(c.k, c.epsilon, c.alpha);
}

struct LayerClasses {
  Vertex root = 0;
  NeighborhoodLayers layers;
  std::vector<VertexSet> large;   // L_i
  std::vector<VertexSet> small;   // S_i
  std::vector<VertexSet> medium;  // M_i
};

struct WeightClassification {
  Constants constants;
  VertexSet large;        // L  = {v_u > alpha}
  VertexSet small;        // S  = V \ L
  VertexSet medium;       // M  = {v_u >= alpha/3}
  VertexSet heavy;        // L' = {v_u >= eta}
  VertexSet exceptional;  // E  = vertices outside L' with at most k-1 neighbors in L'
  VertexSet remaining;    // R  = V \ (L' u E)
  std::optional<LayerClasses> rooted;
};

inline WeightClassification classify_vertices(const Graph& g, const SpectralResult& sr, const Constants& c,
                                              std::optional<Vertex> root = std::nullopt) {
  const int n = g.order();
  if (sr.perron.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("classify_vertices: spectral result does not match graph");
  }
  WeightClassification out;
  out.constants = c;
  out.large = VertexSet(n);
  out.medium = VertexSet(n);
  out.heavy = VertexSet(n);
  for (Vertex u = 0; u < n; ++u) {
    const double w = sr.perron[static_cast<std::size_t>(u)];
    if (w > c.alpha) out.large.insert(u);
    if (w >= c.alpha / 3.0) out.medium.insert(u);
    if (w >= c.eta) out.heavy.insert(u);
  }
  out.small = out.large.complement();
  out.exceptional = VertexSet(n);
  for (Vertex u = 0; u < n; ++u) {
    if (out.heavy.contains(u)) continue;
    if (detail::popcount_and(g.row(u), out.heavy.words()) <= static_cast<std::size_t>(c.k - 1)) {
      out.exceptional.insert(u);
    }
  }
  out.remaining = (out.heavy | out.exceptional).complement();
  if (root) {
    LayerClasses lc;
    lc.root = *root;
    lc.layers = bfs_layers(g, *root);
    for (const auto& layer : lc.layers.layers) {
      VertexSet ni(n, layer);
      lc.large.push_back(ni & out.large);
      lc.small.push_back(ni & out.small);
      lc.medium.push_back(ni & out.medium);
    }
    out.rooted = std::move(lc);
  }
  return out;
}

}  // namespace spexgraph
