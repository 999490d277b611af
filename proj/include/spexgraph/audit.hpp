#pragma once

// Executable inequality and structure checks for C_{2k+2}-free graphs and
// their spectral extremal candidates.
//
// Every check has a stable id. HARD checks decide the aggregate pass flag;
// REPORT-ONLY checks rest on "n sufficiently large" hypotheses and are
// evaluated for information. A check whose hypothesis does not hold on the
// given graph is VACUOUS, never PASS. Floating-point comparisons whose sides
// differ by less than `boundary_margin` are reported as BOUNDARY.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spexgraph/errors.hpp"
#include "spexgraph/forbidden.hpp"
#include "spexgraph/graph.hpp"
#include "spexgraph/graph6.hpp"
#include "spexgraph/spectral.hpp"

namespace spexgraph {

inline constexpr double boundary_margin = 1e-9;

enum class CheckStatus { pass, fail, vacuous, report_only, boundary };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::report_only: return "report_only";
    case CheckStatus::boundary: return "boundary";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::vacuous;
  bool hard = true;
  std::optional<bool> holds;  // evaluated truth of a report-only check
  double lhs = 0.0;           // evaluated sides at the worst (or violating) instance
  double rhs = 0.0;
  std::string relation;       // "<=", "<", ">=", "==", ">"
  std::string detail;
  std::optional<Vertex> vertex;
  std::optional<SubgraphWitness> witness;
};

struct LemmaAuditReport {
  std::string graph_id;  // graph6
  int k = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.hard && c.status == CheckStatus::fail) return false;
    return true;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const LemmaAuditReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace detail {

inline CheckResult vacuous(std::string name, std::string why, bool hard = true) {
  CheckResult c;
  c.name = std::move(name);
  c.status = CheckStatus::vacuous;
  c.hard = hard;
  c.detail = std::move(why);
  return c;
}

// Status for a hard comparison of computed reals.
inline CheckStatus compare_real(double lhs, const std::string& rel, double rhs) {
  if (std::abs(lhs - rhs) < boundary_margin) return CheckStatus::boundary;
  bool ok = false;
  if (rel == "<=" || rel == "<") ok = lhs < rhs;
  else if (rel == ">=" || rel == ">") ok = lhs > rhs;
  else ok = false;
  return ok ? CheckStatus::pass : CheckStatus::fail;
}

inline bool holds_real(double lhs, const std::string& rel, double rhs) {
  if (rel == "<=") return lhs <= rhs + boundary_margin;
  if (rel == "<") return lhs < rhs;
  if (rel == ">=") return lhs >= rhs - boundary_margin;
  if (rel == ">") return lhs > rhs;
  return std::abs(lhs - rhs) < boundary_margin;
}

inline CheckResult report_only(std::string name, bool holds, double lhs, std::string rel, double rhs,
                               std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.status = CheckStatus::report_only;
  c.hard = false;
  c.holds = holds;
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = std::move(rel);
  c.detail = std::move(detail);
  return c;
}

inline std::string graph_id(const Graph& g) {
  return g.order() <= graph6_max_order ? graph6_encode(g) : std::string("?");
}

}  // namespace detail

// Per-vertex bounds on e(N_1(u)) and e(N_1(u), N_2(u)) in a C_{2k+2}-free
// graph:
//   e(N_1(u)) <= (2k-1)/2 d(u) < kn
//   e(N_1(u), N_2(u)) <= min{(2k+1)/2 n, (2k-1)d(u) + k(n - d(u) - 1)}
// All quantities are integers after doubling, so comparisons are exact.
inline LemmaAuditReport audit_neighborhood_bounds(const Graph& g, int k) {
  if (k < 1) throw ParameterError("audit_neighborhood_bounds: k must be >= 1");
  LemmaAuditReport rep;
  rep.graph_id = detail::graph_id(g);
  rep.k = k;
  const int cyc = 2 * k + 2;
  if (auto w = g.order() >= cyc ? contains_cycle(g, cyc) : std::nullopt) {
    auto a = detail::vacuous("eq.N1-edge-bound", "graph contains C" + std::to_string(cyc));
    a.witness = w;
    auto b = detail::vacuous("eq.N1-N2-edge-bound", "graph contains C" + std::to_string(cyc));
    b.witness = w;
    rep.checks = {a, b};
    return rep;
  }
  const long n = g.order();
  CheckResult inner{"eq.N1-edge-bound", CheckStatus::pass, true, {}, 0, 0, "<=", {}, {}, {}};
  CheckResult cross{"eq.N1-N2-edge-bound", CheckStatus::pass, true, {}, 0, 0, "<=", {}, {}, {}};
  double inner_gap = -1e300, cross_gap = -1e300;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto layers = bfs_layers(g, u);
    const long d = g.degree(u);
    VertexSet n1(g.order(), layers.size(1) ? std::span<const Vertex>(layers.layer(1)) : std::span<const Vertex>{});
    VertexSet n2(g.order(), layers.size(2) ? std::span<const Vertex>(layers.layer(2)) : std::span<const Vertex>{});
    const long e1 = static_cast<long>(edges_inside(g, n1));
    const long e12 = static_cast<long>(edges_between(g, n1, n2));

    const bool ok_inner = 2 * e1 <= (2 * k - 1) * d && e1 < k * n;
    const double rhs_inner = std::min((2.0 * k - 1.0) / 2.0 * static_cast<double>(d), static_cast<double>(k * n));
    const double gap_inner = static_cast<double>(e1) - rhs_inner;
    if (inner.status == CheckStatus::pass && (!ok_inner || gap_inner > inner_gap)) {
      inner_gap = gap_inner;
      inner.lhs = static_cast<double>(e1);
      inner.rhs = rhs_inner;
      inner.vertex = u;
      if (!ok_inner) inner.status = CheckStatus::fail;
    }

    const long bound_b = (2 * k - 1) * d + k * (n - d - 1);
    const bool ok_cross = 2 * e12 <= (2 * k + 1) * n && e12 <= bound_b;
    const double rhs_cross = std::min((2.0 * k + 1.0) / 2.0 * static_cast<double>(n), static_cast<double>(bound_b));
    const double gap_cross = static_cast<double>(e12) - rhs_cross;
    if (cross.status == CheckStatus::pass && (!ok_cross || gap_cross > cross_gap)) {
      cross_gap = gap_cross;
      cross.lhs = static_cast<double>(e12);
      cross.rhs = rhs_cross;
      cross.vertex = u;
      if (!ok_cross) cross.status = CheckStatus::fail;
    }
  }
  inner.detail = "tightest vertex shown; rhs = min{(2k-1)d/2, kn}";
  cross.detail = "tightest vertex shown; rhs = min{(2k+1)n/2, (2k-1)d + k(n-d-1)}";
  rep.checks = {inner, cross};
  return rep;
}

// Bipartition lemma. With U, W a partition of V and
//   (A) 2e(U) + e(U,W) > (2k-2)|U| + k|W|  => path of order 2k or 2k+1, ends in U
//   (B) 2e(U) + e(U,W) > (2k-1)|U| + k|W|  => path of order 2k+1, ends in U
inline LemmaAuditReport audit_bipartition_lemma(const Graph& g, const VertexSet& u_set, const VertexSet& w_set, int k) {
  if (k < 1) throw ParameterError("audit_bipartition_lemma: k must be >= 1");
  if (u_set.universe() != g.order() || w_set.universe() != g.order()) {
    throw ParameterError("audit_bipartition_lemma: vertex set universe does not match graph order");
  }
  if (u_set.intersects(w_set) || (u_set | w_set).size() != static_cast<std::size_t>(g.order())) {
    throw ParameterError("audit_bipartition_lemma: U and W must partition V");
  }
  LemmaAuditReport rep;
  rep.graph_id = detail::graph_id(g);
  rep.k = k;
  auto counts = edge_counts(g, VertexSetPair{u_set, w_set});
  const long lhs = 2 * static_cast<long>(counts.inside_x) + static_cast<long>(counts.cross);
  const long nu = static_cast<long>(u_set.size());
  const long nw = static_cast<long>(w_set.size());

  auto run = [&](const char* name, long rhs, std::vector<int> orders) {
    CheckResult c;
    c.name = name;
    c.hard = true;
    c.lhs = static_cast<double>(lhs);
    c.rhs = static_cast<double>(rhs);
    c.relation = ">";
    if (!(lhs > rhs)) {
      c.status = CheckStatus::vacuous;
      c.detail = "premise does not hold";
      return c;
    }
    for (int ell : orders) {
      if (auto w = contains_path_with_endpoints_in(g, u_set, ell)) {
        c.status = CheckStatus::pass;
        c.witness = std::move(w);
        c.detail = "path of order " + std::to_string(ell) + " with both ends in U";
        return c;
      }
    }
    c.status = CheckStatus::fail;
    c.detail = "premise holds but no promised path exists";
    return c;
  };
  rep.checks.push_back(run("lem.bipartition-A", (2L * k - 2) * nu + k * nw, {2 * k, 2 * k + 1}));
  rep.checks.push_back(run("lem.bipartition-B", (2L * k - 1) * nu + k * nw, {2 * k + 1}));
  return rep;
}

// Whole-graph bounds: Erdos-Gallai path bound, spectral upper bound, even
// circuit bound and degree-power bound. Each self-gates on its hypothesis.
inline LemmaAuditReport audit_global_bounds(const Graph& g, int k, double spectral_tol = 1e-12) {
  if (k < 1) throw ParameterError("audit_global_bounds: k must be >= 1");
  LemmaAuditReport rep;
  rep.graph_id = detail::graph_id(g);
  rep.k = k;
  const long n = g.order();
  const long m = static_cast<long>(g.edge_count());

  // Smallest ell with no P_ell gives the strongest bound m <= (ell-2)n/2.
  {
    int ell = 2;
    while (ell <= n && contains_path(g, ell)) ++ell;
    if (ell > n) {
      rep.checks.push_back(detail::vacuous("lem.path-edge-bound", "graph has a Hamiltonian path"));
    } else {
      CheckResult c;
      c.name = "lem.path-edge-bound";
      c.lhs = static_cast<double>(m);
      c.rhs = static_cast<double>(ell - 2) * static_cast<double>(n) / 2.0;
      c.relation = "<=";
      c.status = 2 * m <= (ell - 2) * n ? CheckStatus::pass : CheckStatus::fail;
      c.detail = "no path on " + std::to_string(ell) + " vertices";
      rep.checks.push_back(c);
    }
  }

  const int cyc = 2 * k + 2;
  auto witness = n >= cyc ? contains_cycle(g, cyc) : std::nullopt;
  const std::string why = "graph contains C" + std::to_string(cyc);
  if (witness) {
    for (const char* name : {"lem.lambda-upper", "lem.even-circuit", "lem.degree-powers"}) {
      auto c = detail::vacuous(name, why);
      c.witness = witness;
      rep.checks.push_back(c);
    }
    return rep;
  }

  {
    CheckResult c;
    c.name = "lem.lambda-upper";
    SpectralOptions so;
    so.tol = spectral_tol;
    c.lhs = n >= 1 ? spectral_radius(g, so).lambda : 0.0;
    c.rhs = std::sqrt(2.0 * k * static_cast<double>(n - 1 > 0 ? n - 1 : 0));
    c.relation = "<=";
    c.status = detail::compare_real(c.lhs, "<=", c.rhs);
    c.detail = "lambda <= sqrt(2k(n-1))";
    rep.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "lem.even-circuit";
    c.lhs = static_cast<double>(m);
    c.rhs = 8.0 * k * std::pow(static_cast<double>(n), (k + 2.0) / (k + 1.0));
    c.relation = "<=";
    c.status = detail::compare_real(c.lhs, "<=", c.rhs);
    c.detail = "m <= 8k n^((k+2)/(k+1))";
    rep.checks.push_back(c);
  }
  {
    long sum_sq = 0;
    for (Vertex u = 0; u < g.order(); ++u) sum_sq += static_cast<long>(g.degree(u)) * g.degree(u);
    const long rhs = 2L * k * m + k * (n - 1) * n;
    CheckResult c;
    c.name = "lem.degree-powers";
    c.lhs = static_cast<double>(sum_sq);
    c.rhs = static_cast<double>(rhs);
    c.relation = "<=";
    c.status = sum_sq <= rhs ? CheckStatus::pass : CheckStatus::fail;
    c.detail = "sum d(u)^2 <= 2km + k(n-1)n";
    rep.checks.push_back(c);
  }
  return rep;
}

enum class SpexMode { even_only, both_cycles };

// How the audited graph was obtained. The Perron floor is a hard check only
// for graphs proven extremal by exhaustive search.
enum class GraphProvenance { exhaustive, constructed, heuristic };

struct SpexAuditOptions {
  double spectral_tol = 1e-12;
  GraphProvenance provenance = GraphProvenance::constructed;
};

// Structure checks for a presumed spectral extremal graph. Requires a graph
// on >= 2 vertices that is free of the mode's family.
inline LemmaAuditReport audit_spex_graph(const Graph& g, int k, SpexMode mode, const SpexAuditOptions& opt = {}) {
  if (k < 2) throw ParameterError("audit_spex_graph: k must be >= 2");
  const auto family = mode == SpexMode::even_only ? ForbiddenFamily::even_only(k) : ForbiddenFamily::both_cycles(k);
  if (auto fr = is_family_free(g, family); !fr.free) {
    std::string seq;
    for (auto v : fr.witness->vertices) seq += (seq.empty() ? "" : "-") + std::to_string(v);
    throw ParameterError("audit_spex_graph: graph is not " + family.to_string() + "-free; witness cycle " + seq);
  }
  if (g.order() < 2) throw ParameterError("audit_spex_graph: graph needs at least 2 vertices");

  LemmaAuditReport rep;
  rep.graph_id = detail::graph_id(g);
  rep.k = k;
  const int n_int = g.order();
  const double n = n_int;
  const double kk = k;
  SpectralOptions so;
  so.tol = opt.spectral_tol;
  const auto sr = spectral_radius(g, so);
  const auto& v = sr.perron;
  const double lambda = sr.lambda;
  const auto c = choose_constants(k);
  const auto cls = classify_vertices(g, sr, c);
  auto neighbor_weight = [&](Vertex u) {
    double s = 0.0;
    for (auto w : g.neighbors(u)) s += v[static_cast<std::size_t>(w)];
    return s;
  };

  // Eigen-equation lambda v_u = sum_{w ~ u} v_w.
  {
    CheckResult r;
    r.name = "eq.eigen-equation";
    r.relation = "<=";
    r.rhs = 10.0 * opt.spectral_tol;
    double worst = 0.0;
    Vertex at = 0;
    for (Vertex u = 0; u < n_int; ++u) {
      const double diff = std::abs(lambda * v[static_cast<std::size_t>(u)] - neighbor_weight(u));
      if (diff > worst) {
        worst = diff;
        at = u;
      }
    }
    r.lhs = worst;
    r.vertex = at;
    r.status = worst <= r.rhs ? CheckStatus::pass : CheckStatus::fail;
    r.detail = "max_u |lambda v_u - sum_{w~u} v_w|";
    rep.checks.push_back(r);
  }

  // Perron floor v_u >= 1/lambda.
  {
    double mn = 2.0;
    Vertex at = 0;
    for (Vertex u = 0; u < n_int; ++u) {
      if (v[static_cast<std::size_t>(u)] < mn) {
        mn = v[static_cast<std::size_t>(u)];
        at = u;
      }
    }
    const double rhs = 1.0 / lambda;
    if (opt.provenance == GraphProvenance::exhaustive) {
      CheckResult r;
      r.name = "lem.perron-floor";
      r.lhs = mn;
      r.rhs = rhs;
      r.relation = ">=";
      r.vertex = at;
      r.status = mn >= rhs - boundary_margin ? CheckStatus::pass : CheckStatus::fail;
      r.detail = "min_u v_u >= 1/lambda";
      rep.checks.push_back(r);
    } else {
      auto r = detail::report_only("lem.perron-floor", mn >= rhs - boundary_margin, mn, ">=", rhs,
                                   "min_u v_u >= 1/lambda (graph not proven extremal)");
      r.vertex = at;
      rep.checks.push_back(r);
    }
  }

  // Loose bounds on |L| and |M|.
  {
    const double base = 16.0 * std::sqrt(kk) * std::pow(n, (kk + 3.0) / (2.0 * kk + 2.0)) / c.alpha;
    const double nl = static_cast<double>(cls.large.size());
    const double nm = static_cast<double>(cls.medium.size());
    rep.checks.push_back(detail::report_only("lem.L-size", nl <= base, nl, "<=", base, "|L| <= 16 k^(1/2) n^((k+3)/(2k+2)) / alpha"));
    rep.checks.push_back(detail::report_only("lem.M-size", nm <= 3.0 * base, nm, "<=", 3.0 * base,
                                             "|M| <= 48 k^(1/2) n^((k+3)/(2k+2)) / alpha"));
  }

  // Degree floor on L and the resulting bound on |L|.
  {
    const double floor_deg = c.alpha / (20.0 * kk) * n;
    double worst = 1e300;
    Vertex at = 0;
    for (auto z : cls.large.members()) {
      if (g.degree(z) < worst) {
        worst = g.degree(z);
        at = z;
      }
    }
    auto r = detail::report_only("lem.L-degree-floor", worst >= floor_deg, worst, ">=", floor_deg,
                                 "min_{z in L} d(z) >= (alpha/20k) n");
    r.vertex = at;
    rep.checks.push_back(r);
    const double a = c.alpha / (20.0 * kk);
    const double cap = (kk + 1.0) / (a * a);
    const double nl = static_cast<double>(cls.large.size());
    rep.checks.push_back(detail::report_only("lem.L-count", nl <= cap, nl, "<=", cap, "|L| <= (k+1)/(alpha/20k)^2"));
  }

  // Degrees of heavy vertices: d(z) >= v_z n - eps n.
  {
    double worst_gap = 1e300;
    double lhs = 0, rhs = 0;
    Vertex at = 0;
    for (auto z : cls.heavy.members()) {
      const double need = (v[static_cast<std::size_t>(z)] - c.epsilon) * n;
      const double gap = g.degree(z) - need;
      if (gap < worst_gap) {
        worst_gap = gap;
        lhs = g.degree(z);
        rhs = need;
        at = z;
      }
    }
    auto r = detail::report_only("lem.Lprime-degree", worst_gap >= -boundary_margin, lhs, ">=", rhs,
                                 "d(z) >= v_z n - eps n for z in L'");
    r.vertex = at;
    rep.checks.push_back(r);
  }

  // Window for e(S_1(z), L) when v_z >= 1 - eps.
  {
    bool all = true;
    double lhs = 0, lo = (kk - 2.0 * c.epsilon) * n, hi = (kk + c.epsilon) * n;
    Vertex at = sr.argmax_vertex;
    bool first = true;
    for (auto z : cls.heavy.members()) {
      if (v[static_cast<std::size_t>(z)] < 1.0 - c.epsilon) continue;
      const VertexSet s1 = g.neighborhood(z) & cls.small;
      const double e = static_cast<double>(edges_between(g, s1, cls.large));
      const bool ok = e >= lo - boundary_margin && e <= hi + boundary_margin;
      if (first || !ok) {
        lhs = e;
        at = z;
        first = false;
      }
      if (!ok) {
        all = false;
        break;
      }
    }
    auto r = detail::report_only("lem.S1-L-window", all, lhs, "in", lo,
                                 "(k-2eps)n <= e(S_1(z), L) <= (k+eps)n for v_z >= 1-eps; upper end " +
                                     std::to_string(hi));
    r.vertex = at;
    rep.checks.push_back(r);
  }

  // |L'| = k, with degree and weight floors on L'.
  {
    const double k3 = kk * kk * kk;
    bool floors = true;
    for (auto z : cls.heavy.members()) {
      if (g.degree(z) < (1.0 - 1.0 / (8.0 * k3)) * n || v[static_cast<std::size_t>(z)] < 1.0 - 1.0 / (16.0 * k3)) {
        floors = false;
      }
    }
    const double size = static_cast<double>(cls.heavy.size());
    rep.checks.push_back(detail::report_only("lem.Lprime-size", size == kk, size, "==", kk, "|L'| = k"));
    rep.checks.push_back(detail::report_only("lem.Lprime-floors", floors, floors ? 1.0 : 0.0, "==", 1.0,
                                             "d(z) >= (1-1/8k^3)n and v_z >= 1-1/16k^3 for z in L'"));
  }

  // Neighborhood Perron weight.
  {
    double mn = 1e300;
    Vertex at = 0;
    for (Vertex u = 0; u < n_int; ++u) {
      const double s = neighbor_weight(u);
      if (s < mn) {
        mn = s;
        at = u;
      }
    }
    const double rhs = kk - 1.0 / (16.0 * kk * kk);
    auto r = detail::report_only("lem.neighborhood-weight", mn >= rhs - boundary_margin, mn, ">=", rhs,
                                 "min_u sum_{w~u} v_w >= k - 1/16k^2");
    r.vertex = at;
    rep.checks.push_back(r);
  }

  // E is empty and K_{k,n-k} spans L' and the rest.
  {
    const double ne = static_cast<double>(cls.exceptional.size());
    rep.checks.push_back(detail::report_only("lem.E-empty", ne == 0.0, ne, "==", 0.0, "|E| = 0"));
    bool contains = cls.heavy.size() == static_cast<std::size_t>(k);
    const VertexSet rest = cls.heavy.complement();
    for (auto z : cls.heavy.members()) {
      if (!rest.subset_of(g.neighborhood(z))) contains = false;
    }
    rep.checks.push_back(detail::report_only("lem.K-k-n-k", contains, contains ? 1.0 : 0.0, "==", 1.0,
                                             "K_{k,n-k} with parts L' and V \\ L' is a subgraph"));
  }

  // Edges inside R.
  {
    const double er = static_cast<double>(edges_inside(g, cls.remaining));
    if (mode == SpexMode::even_only) {
      rep.checks.push_back(detail::report_only("struct.R-edges", er <= 1.0, er, "<=", 1.0, "e(R) <= 1"));
    } else {
      rep.checks.push_back(detail::report_only("struct.R-edges", er == 0.0, er, "==", 0.0, "e(R) = 0"));
    }
  }
  return rep;
}

// Every check id the audits can emit.
inline const std::vector<std::string>& audit_check_ids() {
  static const std::vector<std::string> ids{
      "eq.N1-edge-bound",  "eq.N1-N2-edge-bound", "lem.bipartition-A", "lem.bipartition-B",
      "lem.path-edge-bound", "lem.lambda-upper",  "lem.even-circuit",  "lem.degree-powers",
      "eq.eigen-equation", "lem.perron-floor",    "lem.L-size",        "lem.M-size",
      "lem.L-degree-floor", "lem.L-count",        "lem.Lprime-degree", "lem.S1-L-window",
      "lem.Lprime-size",   "lem.Lprime-floors",   "lem.neighborhood-weight", "lem.E-empty",
      "lem.K-k-n-k",       "struct.R-edges"};
  return ids;
}

// ---------------------------------------------------------------------------
// Export

inline nlohmann::ordered_json check_json(const LemmaAuditReport& rep, const CheckResult& c) {
  nlohmann::ordered_json j;
  j["graph"] = rep.graph_id;
  j["k"] = rep.k;
  j["check"] = c.name;
  j["status"] = to_string(c.status);
  j["hard"] = c.hard;
  if (c.holds) j["holds"] = *c.holds;
  j["lhs"] = c.lhs;
  j["relation"] = c.relation;
  j["rhs"] = c.rhs;
  if (c.vertex) j["vertex"] = *c.vertex;
  if (c.witness) j["witness"] = c.witness->vertices;
  j["detail"] = c.detail;
  return j;
}

// One JSON object per line per check.
inline std::string audit_json_lines(const LemmaAuditReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) out += check_json(rep, c).dump() + "\n";
  return out;
}

inline std::string audit_table(const LemmaAuditReport& rep) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %-12s %-5s %16s %3s %16s\n", "check", "status", "hard", "lhs", "", "rhs");
  os << "graph " << rep.graph_id << "  k=" << rep.k << "\n" << buf;
  for (const auto& c : rep.checks) {
    std::string status = to_string(c.status);
    if (c.holds) status += *c.holds ? "(holds)" : "(fails)";
    std::snprintf(buf, sizeof buf, "%-24s %-12s %-5s %16.9g %3s %16.9g\n", c.name.c_str(), status.c_str(),
                  c.hard ? "yes" : "no", c.lhs, c.relation.c_str(), c.rhs);
    os << buf;
  }
  os << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace spexgraph
