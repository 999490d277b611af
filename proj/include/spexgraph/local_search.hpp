#pragma once

// Seeded hill-climb maximizing the spectral radius over family-free graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "spexgraph/errors.hpp"
#include "spexgraph/forbidden.hpp"
#include "spexgraph/graph.hpp"
#include "spexgraph/spectral.hpp"

namespace spexgraph {

// splitmix64:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// below(b) returns next() % b.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct LocalSearchOptions {
  int samples_per_iteration = 200;
  // Consecutive non-improving iterations before restarting from a new tree.
  int stagnation_limit = 400;
  double spectral_tol = 1e-12;
};

struct SearchTrace {
  long iterations = 0;
  long accepted_moves = 0;
  long restarts = 0;
  std::vector<double> best_lambda_per_step;
  Graph final_graph;  // best graph seen
  double final_lambda = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

// Vertex v >= 1 attaches to a uniform earlier vertex.
inline Graph random_tree(int n, SplitMix64& rng) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v);
  return Graph(n, e);
}

struct Move {
  enum class Kind { add, remove, rotate };
  Kind kind = Kind::add;
  Vertex a = -1, b = -1;  // edge to add
  Vertex c = -1, d = -1;  // edge to delete
  double score = 0.0;     // first-order change of the Rayleigh quotient numerator

  std::uint64_t key() const {
    auto h = [](Vertex x) { return static_cast<std::uint64_t>(static_cast<std::uint16_t>(x)); };
    return h(a) | (h(b) << 16) | (h(c) << 32) | (h(d) << 48);
  }
};

}  // namespace detail

// Moves: add an edge, delete an edge, or rotate (delete one edge and add
// another, including shifting one endpoint of an edge onto a heavy vertex).
// Added edges pick one endpoint by Perron weight half of the time. Each
// iteration samples `samples_per_iteration` moves, ranks them
// by 2(v_a v_b - v_c v_d), which is the exact change of v^T A v for the
// current Perron vector v, and applies the best-ranked move with positive
// score that keeps the graph family-free. A positive score certifies a
// strict increase of the spectral radius.
inline SearchTrace local_search(int n, const ForbiddenFamily& family, std::uint64_t seed, long max_iters,
                                const LocalSearchOptions& opt = {}) {
  if (n < 4) throw ParameterError("local_search: requires n >= 4");
  if (max_iters < 1) throw ParameterError("local_search: requires max_iters >= 1");
  SplitMix64 rng(seed);
  SpectralOptions so;
  so.tol = opt.spectral_tol;

  SearchTrace trace;
  trace.seed = seed;
  trace.best_lambda_per_step.reserve(static_cast<std::size_t>(max_iters));

  Graph cur = detail::random_tree(n, rng);
  SpectralResult sr = spectral_radius(cur, so);
  trace.final_graph = cur;
  trace.final_lambda = sr.lambda;
  std::unordered_set<std::uint64_t> rejected;
  int stagnant = 0;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::vector<detail::Move> moves;

  for (long it = 0; it < max_iters; ++it) {
    const auto& v = sr.perron;
    auto w = [&](Vertex x) { return v[static_cast<std::size_t>(x)]; };
    const auto edges = cur.edges();
    const bool complete = edges.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::vector<double> cumulative(static_cast<std::size_t>(n));
    double total = 0.0;
    for (Vertex x = 0; x < n; ++x) cumulative[static_cast<std::size_t>(x)] = total += w(x);
    // Half the samples pick one endpoint with probability proportional to
    // its Perron weight.
    auto weighted_vertex = [&]() {
      const double r = rng.uniform() * total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
      return static_cast<Vertex>(std::min<std::ptrdiff_t>(it - cumulative.begin(), n - 1));
    };
    auto random_non_edge = [&](Vertex& a, Vertex& b) {
      for (;;) {
        if (rng.below(2) == 0 && total > 0.0) {
          a = weighted_vertex();
          b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        } else {
          auto p = rng.below(pairs);
          a = static_cast<Vertex>(p / static_cast<std::uint64_t>(n));
          b = static_cast<Vertex>(p % static_cast<std::uint64_t>(n));
        }
        if (a != b && !cur.adjacent(a, b)) {
          if (a > b) std::swap(a, b);
          return;
        }
      }
    };

    moves.clear();
    for (int s = 0; s < opt.samples_per_iteration; ++s) {
      detail::Move m;
      const auto kind = rng.below(4);
      if (kind == 0 && !complete) {
        m.kind = detail::Move::Kind::add;
        random_non_edge(m.a, m.b);
        m.score = 2.0 * w(m.a) * w(m.b);
      } else if (kind == 1 && !edges.empty()) {
        m.kind = detail::Move::Kind::remove;
        const auto& e = edges[rng.below(edges.size())];
        m.c = e.first;
        m.d = e.second;
        m.score = -2.0 * w(m.c) * w(m.d);
      } else if (kind == 2 && !edges.empty() && !complete) {
        m.kind = detail::Move::Kind::rotate;
        const auto& e = edges[rng.below(edges.size())];
        m.c = e.first;
        m.d = e.second;
        random_non_edge(m.a, m.b);
        m.score = 2.0 * (w(m.a) * w(m.b) - w(m.c) * w(m.d));
      } else if (kind == 3 && !edges.empty() && !complete) {
        // Shift one endpoint of an edge onto a vertex drawn by Perron weight.
        m.kind = detail::Move::Kind::rotate;
        const auto& e = edges[rng.below(edges.size())];
        const bool flip = rng.below(2) == 1;
        const Vertex keep = flip ? e.first : e.second;
        const Vertex drop = flip ? e.second : e.first;
        const Vertex to = total > 0.0 ? weighted_vertex() : static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (to == keep || to == drop || cur.adjacent(to, keep)) continue;
        m.c = std::min(keep, drop);
        m.d = std::max(keep, drop);
        m.a = std::min(keep, to);
        m.b = std::max(keep, to);
        m.score = 2.0 * w(keep) * (w(to) - w(drop));
      } else {
        continue;
      }
      moves.push_back(m);
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](const detail::Move& x, const detail::Move& y) { return x.score > y.score; });

    bool accepted = false;
    for (const auto& m : moves) {
      if (!(m.score > 0.0)) break;
      if (rejected.count(m.key())) continue;
      Graph next;
      if (m.kind == detail::Move::Kind::add) {
        if (!edge_addition_keeps_free(cur, m.a, m.b, family)) {
          rejected.insert(m.key());
          continue;
        }
        next = cur.with_edge(m.a, m.b);
      } else if (m.kind == detail::Move::Kind::rotate) {
        Graph removed = cur.without_edge(m.c, m.d);
        if (!edge_addition_keeps_free(removed, m.a, m.b, family)) {
          rejected.insert(m.key());
          continue;
        }
        next = removed.with_edge(m.a, m.b);
      } else {
        continue;
      }
      SpectralOptions warm = so;
      warm.warm_start = sr.perron;
      auto nsr = spectral_radius(next, warm);
      if (!(nsr.lambda > sr.lambda)) {
        rejected.insert(m.key());
        continue;
      }
      cur = std::move(next);
      sr = std::move(nsr);
      accepted = true;
      break;
    }

    if (accepted) {
      ++trace.accepted_moves;
      stagnant = 0;
      rejected.clear();
      if (sr.lambda > trace.final_lambda) {
        trace.final_lambda = sr.lambda;
        trace.final_graph = cur;
      }
    } else if (++stagnant >= opt.stagnation_limit) {
      cur = detail::random_tree(n, rng);
      sr = spectral_radius(cur, so);
      rejected.clear();
      stagnant = 0;
      ++trace.restarts;
    }
    trace.best_lambda_per_step.push_back(trace.final_lambda);
    trace.iterations = it + 1;
  }
  return trace;
}

struct TensionReport {
  bool applicable = false;  // family is {C_{2k+2}} or {C_{2k+1}, C_{2k+2}} with n large enough to build the reference
  int k = 0;
  double reference = 0.0;   // lambda(S_{n,k}^+) or lambda(S_{n,k})
  double found = 0.0;
  bool tension = false;     // found > reference + margin
};

// Compares a search result with the conjectured extremal graph for the
// family. An exceedance is a counterexample-shaped event, never an accepted
// result.
inline TensionReport check_theorem_tension(const SearchTrace& trace, const ForbiddenFamily& family,
                                           double margin = 1e-9) {
  TensionReport r;
  r.found = trace.final_lambda;
  const auto& ls = family.lengths();
  const int n = trace.final_graph.order();
  if (ls.size() == 1 && ls[0] % 2 == 0 && ls[0] >= 6) {
    r.k = (ls[0] - 2) / 2;
    if (n < r.k + 2) return r;
    r.reference = spectral_radius(s_nk_plus(n, r.k)).lambda;
  } else if (ls.size() == 2 && ls[0] % 2 == 1 && ls[1] == ls[0] + 1 && ls[0] >= 5) {
    r.k = (ls[0] - 1) / 2;
    if (n <= r.k) return r;
    r.reference = s_nk_lambda_closed_form(n, r.k);
  } else {
    return r;
  }
  r.applicable = true;
  r.tension = r.found > r.reference + margin;
  return r;
}

}  // namespace spexgraph
