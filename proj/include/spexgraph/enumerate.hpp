#pragma once

// Isomorph-free generation of simple graphs by orderly vertex augmentation.
//
// A labeled graph is canonical when its column-major upper-triangle bit
// string (the graph6 payload order) is the lexicographic minimum over all
// vertex relabelings. Deleting the last vertex of a canonical graph leaves a
// canonical graph, so every class on n vertices is reached exactly once by
// appending a vertex to each canonical graph on n-1 vertices and keeping the
// canonical results.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spexgraph/errors.hpp"
#include "spexgraph/forbidden.hpp"
#include "spexgraph/graph.hpp"
#include "spexgraph/graph6.hpp"

namespace spexgraph {

inline constexpr int enumeration_hard_limit = 10;

struct EnumerationOptions {
  int cap = 9;
  // Discard any partial graph that already contains a listed cycle.
  std::optional<ForbiddenFamily> prune_family;
  unsigned threads = 1;
  // Called with the running count every `progress_every` graphs.
  std::function<void(std::size_t)> progress;
  std::size_t progress_every = 100000;
};

namespace detail {

struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};
};

inline Graph to_graph(const SmallGraph& s) {
  std::vector<Edge> e;
  for (int j = 1; j < s.n; ++j)
    for (int i = 0; i < j; ++i)
      if ((s.adj[static_cast<std::size_t>(j)] >> i) & 1U) e.emplace_back(i, j);
  return Graph(s.n, e);
}

class CanonicalTester {
 public:
  explicit CanonicalTester(const SmallGraph& g) : g_(g) {
    for (int j = 0; j < g.n; ++j) {
      column_[static_cast<std::size_t>(j)] =
          static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(j)] & ((1U << j) - 1U));
    }
    for (int a = 0; a < g.n; ++a) {
      twins_[static_cast<std::size_t>(a)] = 0;
      for (int b = 0; b < g.n; ++b) {
        if (a == b) continue;
        const std::uint16_t mask = static_cast<std::uint16_t>(~((1U << a) | (1U << b)));
        if ((g.adj[static_cast<std::size_t>(a)] & mask) == (g.adj[static_cast<std::size_t>(b)] & mask)) {
          twins_[static_cast<std::size_t>(a)] |= static_cast<std::uint16_t>(1U << b);
        }
      }
    }
  }

  // True iff no relabeling yields a lexicographically smaller bit string.
  bool canonical() {
    std::array<std::uint16_t, 16> pos{};
    return !search(0, pos, static_cast<std::uint16_t>((1U << g_.n) - 1U));
  }

 private:
  // pos[c]: bit i set iff the vertex placed at position i is adjacent to c.
  bool search(int j, const std::array<std::uint16_t, 16>& pos, std::uint16_t unused) {
    if (j == g_.n) return false;
    std::uint16_t tried = 0;
    for (std::uint16_t rest = unused; rest != 0; rest &= static_cast<std::uint16_t>(rest - 1)) {
      const int c = std::countr_zero(rest);
      // Swapping twins is an automorphism; their subtrees coincide.
      if (twins_[static_cast<std::size_t>(c)] & tried) continue;
      tried |= static_cast<std::uint16_t>(1U << c);
      const std::uint16_t col = pos[static_cast<std::size_t>(c)];
      const std::uint16_t diff = col ^ column_[static_cast<std::size_t>(j)];
      if (diff != 0) {
        if ((col & (diff & (~diff + 1))) == 0) return true;
        continue;
      }
      auto next = pos;
      for (std::uint16_t nb = static_cast<std::uint16_t>(g_.adj[static_cast<std::size_t>(c)] & unused); nb != 0;
           nb &= static_cast<std::uint16_t>(nb - 1)) {
        next[static_cast<std::size_t>(std::countr_zero(nb))] |= static_cast<std::uint16_t>(1U << j);
      }
      if (search(j + 1, next, static_cast<std::uint16_t>(unused & ~(1U << c)))) return true;
    }
    return false;
  }

  const SmallGraph& g_;
  std::array<std::uint16_t, 16> column_{};
  std::array<std::uint16_t, 16> twins_{};
};

inline bool small_is_canonical(const SmallGraph& g) { return CanonicalTester(g).canonical(); }

// Cycle on exactly `ell` vertices through v.
inline bool small_cycle_through(const SmallGraph& g, int v, int ell) {
  struct Dfs {
    const SmallGraph& g;
    int v;
    int ell;
    bool run(int cur, std::uint16_t used, int len) const {
      if (len == ell) return (g.adj[static_cast<std::size_t>(cur)] >> v) & 1U;
      for (std::uint16_t nb = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(cur)] & ~used); nb != 0;
           nb &= static_cast<std::uint16_t>(nb - 1)) {
        const int w = std::countr_zero(nb);
        if (run(w, static_cast<std::uint16_t>(used | (1U << w)), len + 1)) return true;
      }
      return false;
    }
  };
  if (ell > g.n) return false;
  return Dfs{g, v, ell}.run(v, static_cast<std::uint16_t>(1U << v), 1);
}

inline std::vector<SmallGraph> children_of(const SmallGraph& parent, const EnumerationOptions& opt) {
  std::vector<SmallGraph> out;
  const int v = parent.n;
  for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
    SmallGraph child = parent;
    child.n = v + 1;
    child.adj[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(mask);
    for (int i = 0; i < v; ++i)
      if ((mask >> i) & 1U) child.adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1U << v);
    if (opt.prune_family) {
      bool bad = false;
      for (auto ell : opt.prune_family->lengths()) {
        if (small_cycle_through(child, v, ell)) {
          bad = true;
          break;
        }
      }
      if (bad) continue;
    }
    if (small_is_canonical(child)) out.push_back(child);
  }
  return out;
}

// Children of every parent, concatenated in parent order.
inline std::vector<SmallGraph> next_level(const std::vector<SmallGraph>& parents, const EnumerationOptions& opt,
                                          const std::function<void(const SmallGraph&)>* sink) {
  const unsigned threads = std::max(1U, opt.threads);
  std::vector<std::vector<SmallGraph>> per_parent(parents.size());
  if (threads == 1 || parents.size() < 2) {
    for (std::size_t i = 0; i < parents.size(); ++i) per_parent[i] = children_of(parents[i], opt);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < parents.size(); i += threads) per_parent[i] = children_of(parents[i], opt);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<SmallGraph> out;
  for (auto& kids : per_parent) {
    for (auto& k : kids) {
      if (sink) {
        (*sink)(k);
      } else {
        out.push_back(k);
      }
    }
    kids.clear();
    kids.shrink_to_fit();
  }
  return out;
}

}  // namespace detail

// Visits one representative per isomorphism class of graphs on n vertices
// (only family-free classes when opt.prune_family is set), in a fixed
// order independent of opt.threads.
inline std::size_t for_each_graph(int n, const EnumerationOptions& opt, const std::function<void(const Graph&)>& visit) {
  if (opt.cap > enumeration_hard_limit) {
    throw ParameterError("enumeration cap may not exceed " + std::to_string(enumeration_hard_limit));
  }
  if (n < 1) throw ParameterError("enumerate_graphs: n must be >= 1");
  if (n > opt.cap) {
    throw CapacityError("enumerate_graphs: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(opt.cap) + "; import a graph6 corpus instead");
  }
  std::vector<detail::SmallGraph> level{detail::SmallGraph{1, {}}};
  for (int order = 2; order < n; ++order) level = detail::next_level(level, opt, nullptr);
  std::size_t count = 0;
  std::function<void(const detail::SmallGraph&)> sink = [&](const detail::SmallGraph& s) {
    visit(detail::to_graph(s));
    ++count;
    if (opt.progress && opt.progress_every && count % opt.progress_every == 0) opt.progress(count);
  };
  if (n == 1) {
    sink(level.front());
  } else {
    detail::next_level(level, opt, &sink);
  }
  return count;
}

inline std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opt = {}) {
  std::vector<Graph> out;
  for_each_graph(n, opt, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling for arbitrary graphs (branch and bound over
// relabelings, same string order as the generator).

namespace detail {

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const Graph& g) : g_(g), n_(g.order()) {
    const auto nn = static_cast<std::size_t>(n_);
    twins_.assign(nn, std::vector<char>(nn, 0));
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = a + 1; b < n_; ++b) {
        bool same = true;
        for (Vertex w = 0; w < n_ && same; ++w) {
          if (w == a || w == b) continue;
          same = g.adjacent(a, w) == g.adjacent(b, w);
        }
        twins_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = same;
        twins_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = same;
      }
    }
  }

  // order[i] = original vertex placed at position i.
  std::vector<Vertex> run() {
    std::vector<Vertex> identity(static_cast<std::size_t>(n_));
    for (Vertex i = 0; i < n_; ++i) identity[static_cast<std::size_t>(i)] = i;
    best_order_ = identity;
    best_cols_ = columns_of(identity);
    cur_.clear();
    cur_cols_.clear();
    used_.assign(static_cast<std::size_t>(n_), 0);
    search();
    return best_order_;
  }

 private:
  using Column = std::vector<char>;

  std::vector<Column> columns_of(const std::vector<Vertex>& order) const {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < order.size(); ++j) {
      Column c(j);
      for (std::size_t i = 0; i < j; ++i) c[i] = g_.adjacent(order[i], order[j]) ? 1 : 0;
      cols.push_back(std::move(c));
    }
    return cols;
  }

  // <0, 0, >0 comparing current prefix with best prefix of the same length.
  int compare_prefix() const {
    for (std::size_t j = 0; j < cur_cols_.size(); ++j) {
      if (cur_cols_[j] != best_cols_[j]) return cur_cols_[j] < best_cols_[j] ? -1 : 1;
    }
    return 0;
  }

  void search() {
    const std::size_t j = cur_.size();
    if (j == static_cast<std::size_t>(n_)) {
      if (compare_prefix() < 0) {
        best_order_ = cur_;
        best_cols_ = cur_cols_;
      }
      return;
    }
    struct Candidate {
      Column col;
      Vertex v;
    };
    std::vector<Candidate> cands;
    for (Vertex c = 0; c < n_; ++c) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      Column col(j);
      for (std::size_t i = 0; i < j; ++i) col[i] = g_.adjacent(cur_[i], c) ? 1 : 0;
      cands.push_back({std::move(col), c});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.col < b.col; });
    std::vector<Vertex> tried;
    for (auto& cand : cands) {
      bool twin = false;
      for (auto t : tried) twin = twin || twins_[static_cast<std::size_t>(t)][static_cast<std::size_t>(cand.v)];
      if (twin) continue;
      tried.push_back(cand.v);
      cur_.push_back(cand.v);
      cur_cols_.push_back(cand.col);
      used_[static_cast<std::size_t>(cand.v)] = 1;
      if (compare_prefix() <= 0) search();
      used_[static_cast<std::size_t>(cand.v)] = 0;
      cur_cols_.pop_back();
      cur_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<char>> twins_;
  std::vector<Vertex> cur_;
  std::vector<Column> cur_cols_;
  std::vector<char> used_;
  std::vector<Vertex> best_order_;
  std::vector<Column> best_cols_;
};

}  // namespace detail

// The relabeling of g with the lexicographically smallest bit string.
inline Graph canonical_form(const Graph& g) {
  auto order = detail::CanonicalLabeler(g).run();
  std::vector<Vertex> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  return g.relabeled(perm);
}

inline std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

}  // namespace spexgraph
