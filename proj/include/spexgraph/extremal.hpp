#pragma once

// Exact ex/EX and spex/SPEX at small n by exhaustive isomorph-free
// enumeration or by scanning a supplied graph6 corpus.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spexgraph/enumerate.hpp"
#include "spexgraph/errors.hpp"
#include "spexgraph/forbidden.hpp"
#include "spexgraph/graph.hpp"
#include "spexgraph/graph6.hpp"
#include "spexgraph/spectral.hpp"

namespace spexgraph {

enum class Objective { edges, lambda };

inline Objective parse_objective(std::string_view s) {
  if (s == "edges") return Objective::edges;
  if (s == "lambda") return Objective::lambda;
  throw ParameterError("unknown objective '" + std::string(s) + "' (expected edges or lambda)");
}

inline std::string to_string(Objective o) { return o == Objective::edges ? "edges" : "lambda"; }

struct ExtremalOptions {
  double lambda_tie_tolerance = 1e-9;
  double spectral_tol = 1e-12;
  EnumerationOptions enumeration{};
};

struct ExtremalRecord {
  int n = 0;
  ForbiddenFamily family;
  Objective objective = Objective::edges;
  double best_value = 0.0;           // edge count (exact integer) or spectral radius
  std::vector<Graph> argmax;         // canonical forms, in discovery order
  std::vector<double> argmax_values;  // objective value of each argmax graph
  std::size_t graphs_scanned = 0;    // family-free graphs evaluated
  double seconds = 0.0;
};

namespace detail {

class ExtremalAccumulator {
 public:
  ExtremalAccumulator(Objective objective, const ExtremalOptions& opt) : objective_(objective), opt_(opt) {}

  void offer(const Graph& canonical) {
    ++scanned_;
    double value = 0.0;
    if (objective_ == Objective::edges) {
      value = static_cast<double>(canonical.edge_count());
    } else {
      SpectralOptions so;
      so.tol = opt_.spectral_tol;
      value = spectral_radius(canonical, so).lambda;
    }
    const double slack = objective_ == Objective::edges ? 0.0 : opt_.lambda_tie_tolerance;
    if (!have_ || value > best_ + slack) {
      if (!have_ || value > best_) best_ = value;
      have_ = true;
      std::vector<std::pair<double, Graph>> kept;
      for (auto& entry : candidates_)
        if (entry.first >= best_ - slack) kept.push_back(std::move(entry));
      candidates_ = std::move(kept);
      candidates_.emplace_back(value, canonical);
    } else if (value >= best_ - slack) {
      if (value > best_) best_ = value;
      candidates_.emplace_back(value, canonical);
    }
  }

  void finish(ExtremalRecord& rec) const {
    const double slack = objective_ == Objective::edges ? 0.0 : opt_.lambda_tie_tolerance;
    rec.best_value = best_;
    rec.graphs_scanned = scanned_;
    for (const auto& [value, g] : candidates_) {
      if (value >= best_ - slack) {
        rec.argmax.push_back(g);
        rec.argmax_values.push_back(value);
      }
    }
  }

 private:
  Objective objective_;
  const ExtremalOptions& opt_;
  bool have_ = false;
  double best_ = 0.0;
  std::size_t scanned_ = 0;
  std::vector<std::pair<double, Graph>> candidates_;
};

}  // namespace detail

// Exhaustive search over every family-free isomorphism class on n vertices.
inline ExtremalRecord compute_extremal(int n, const ForbiddenFamily& family, Objective objective,
                                       const ExtremalOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  ExtremalRecord rec;
  rec.n = n;
  rec.family = family;
  rec.objective = objective;
  EnumerationOptions eo = opt.enumeration;
  eo.prune_family = family;
  detail::ExtremalAccumulator acc(objective, opt);
  for_each_graph(n, eo, [&](const Graph& g) { acc.offer(g); });
  acc.finish(rec);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// Same search over a supplied corpus. Graphs containing a forbidden cycle are
// skipped; isomorphic duplicates collapse to one canonical form.
inline ExtremalRecord compute_extremal(int n, const ForbiddenFamily& family, Objective objective,
                                       std::span<const Graph> source, const ExtremalOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i].order() != n) {
      throw DataError("record " + std::to_string(i) + " has " + std::to_string(source[i].order()) +
                      " vertices, expected " + std::to_string(n));
    }
  }
  ExtremalRecord rec;
  rec.n = n;
  rec.family = family;
  rec.objective = objective;
  detail::ExtremalAccumulator acc(objective, opt);
  std::vector<std::string> seen;
  for (const auto& g : source) {
    if (!is_family_free(g, family).free) continue;
    auto canon = canonical_form(g);
    auto key = graph6_encode(canon);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    acc.offer(canon);
  }
  acc.finish(rec);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ---------------------------------------------------------------------------
// Report export

inline std::string format_value(Objective o, double v) {
  if (o == Objective::edges) return std::to_string(static_cast<long long>(std::llround(v)));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

inline std::string extremal_csv_header() {
  return "n,family,objective,best_value,num_argmax,graphs_scanned,seconds,argmax_graph6";
}

// `with_timing` false leaves the seconds column empty so repeated runs are
// byte-identical.
inline std::string extremal_csv_row(const ExtremalRecord& r, bool with_timing) {
  std::string row = std::to_string(r.n) + ",\"" + r.family.to_string() + "\"," + to_string(r.objective) + "," +
                    format_value(r.objective, r.best_value) + "," + std::to_string(r.argmax.size()) + "," +
                    std::to_string(r.graphs_scanned) + ",";
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    row += buf;
  }
  row += ",";
  for (std::size_t i = 0; i < r.argmax.size(); ++i) {
    if (i) row += ';';
    row += graph6_encode(r.argmax[i]);
  }
  return row;
}

inline nlohmann::ordered_json extremal_json(const ExtremalRecord& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["family"] = r.family.to_string();
  j["objective"] = to_string(r.objective);
  if (r.objective == Objective::edges) {
    j["best_value"] = static_cast<long long>(std::llround(r.best_value));
  } else {
    j["best_value"] = r.best_value;
  }
  j["num_argmax"] = r.argmax.size();
  j["graphs_scanned"] = r.graphs_scanned;
  j["seconds"] = with_timing ? nlohmann::ordered_json(r.seconds) : nlohmann::ordered_json(nullptr);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& g : r.argmax) arr.push_back(graph6_encode(g));
  j["argmax"] = std::move(arr);
  return j;
}

}  // namespace spexgraph
