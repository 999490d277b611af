#pragma once

// Simple undirected graphs on vertices 0..n-1, stored as sorted neighbor
// lists plus packed bit rows. Graphs are immutable once built.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spexgraph/errors.hpp"

namespace spexgraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

namespace detail {

inline std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace detail

// Subset of {0..universe-1} backed by a bit array.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(detail::word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }
  VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(Vertex v) {
    check(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  bool contains(Vertex v) const noexcept {
    if (v < 0 || v >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  std::size_t size() const noexcept { return detail::popcount(words_); }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    return detail::popcount_and(words_, other.words_) != 0;
  }

  VertexSet operator&(const VertexSet& other) const { return combine(other, [](auto a, auto b) { return a & b; }); }
  VertexSet operator|(const VertexSet& other) const { return combine(other, [](auto a, auto b) { return a | b; }); }
  VertexSet operator-(const VertexSet& other) const { return combine(other, [](auto a, auto b) { return a & ~b; }); }

  VertexSet complement() const { return full(universe_) - *this; }

  bool subset_of(const VertexSet& other) const { return (*this - other).empty(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= universe_) {
      throw ParameterError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
    }
  }
  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_) throw ParameterError("vertex sets over different universes");
  }
  template <typename Op>
  VertexSet combine(const VertexSet& other, Op op) const {
    same_universe(other);
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = op(words_[i], other.words_[i]);
    return out;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;

  // Throws ParameterError on self-loops or out-of-range endpoints. Duplicate
  // edges collapse.
  Graph(int n, std::span<const Edge> edges) : n_(n), words_(detail::word_count(n)) {
    if (n < 0) throw ParameterError("vertex count must be >= 0");
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                             std::to_string(n - 1));
      }
      if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
      set_bit(u, v);
      set_bit(v, u);
    }
    rebuild_lists();
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }

  int degree(Vertex u) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(u)).size()); }
  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(static_cast<std::size_t>(u)); }

  // Packed adjacency row of u; bit v is set iff u ~ v.
  std::span<const std::uint64_t> row(Vertex u) const {
    return std::span<const std::uint64_t>(bits_).subspan(static_cast<std::size_t>(u) * words_, words_);
  }
  std::size_t row_words() const noexcept { return words_; }

  VertexSet neighborhood(Vertex u) const {
    return VertexSet(n_, neighbors(u));
  }

  // Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (auto v : adj_[static_cast<std::size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    auto e = edges();
    e.emplace_back(u, v);
    return Graph(n_, e);
  }

  Graph without_edge(Vertex u, Vertex v) const {
    auto e = edges();
    std::erase_if(e, [&](const Edge& x) { return (x.first == u && x.second == v) || (x.first == v && x.second == u); });
    return Graph(n_, e);
  }

  // perm[old] = new label.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw ParameterError("permutation length mismatch");
    std::vector<Edge> e;
    e.reserve(m_);
    for (auto [u, v] : edges()) e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(n_, e);
  }

  // Subgraph induced by `keep`, relabeled 0.. in increasing vertex order.
  Graph induced(const VertexSet& keep) const {
    auto vs = keep.members();
    std::vector<Vertex> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) index[static_cast<std::size_t>(vs[i])] = static_cast<Vertex>(i);
    std::vector<Edge> e;
    for (auto [u, v] : edges()) {
      auto a = index[static_cast<std::size_t>(u)];
      auto b = index[static_cast<std::size_t>(v)];
      if (a >= 0 && b >= 0) e.emplace_back(a, b);
    }
    return Graph(static_cast<int>(vs.size()), e);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }

  void rebuild_lists() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    std::size_t deg_sum = 0;
    for (Vertex u = 0; u < n_; ++u) {
      auto r = row(u);
      auto& list = adj_[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
          list.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        }
      }
      deg_sum += list.size();
    }
    m_ = deg_sum / 2;
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Constructions

inline Graph empty_graph(int n) {
  if (n < 0) throw ParameterError("empty: n must be >= 0");
  return Graph(n);
}

inline Graph complete_graph(int n) {
  if (n < 0) throw ParameterError("complete: n must be >= 0");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  if (n < 0) throw ParameterError("path: n must be >= 0");
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle: n must be >= 3");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw ParameterError("complete_bipartite: part sizes must be >= 0");
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph(a + b, e);
}

// Balanced complete r-partite graph; parts are consecutive blocks, larger
// blocks first.
inline Graph turan_graph(int n, int r) {
  if (n < 0) throw ParameterError("turan: n must be >= 0");
  if (r < 1) throw ParameterError("turan: r must be >= 1");
  std::vector<int> part(static_cast<std::size_t>(n));
  int v = 0;
  for (int p = 0; p < r; ++p) {
    int size = n / r + (p < n % r ? 1 : 0);
    for (int i = 0; i < size; ++i) part[static_cast<std::size_t>(v++)] = p;
  }
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) e.emplace_back(a, b);
  return Graph(n, e);
}

inline std::size_t turan_edge_count(int n, int r) {
  std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  for (int p = 0; p < r; ++p) {
    auto size = static_cast<std::size_t>(n / r + (p < n % r ? 1 : 0));
    total -= size * size;
  }
  return total / 2;
}

// Disjoint copies of g (labels kept) and h (labels shifted by |g|), plus
// every edge between them.
inline Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) e.emplace_back(u, v + shift);
  return Graph(g.order() + h.order(), e);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(g.order() + h.order(), e);
}

// K_k joined with an independent set on n-k vertices. Clique = {0..k-1}.
inline Graph s_nk(int n, int k) {
  if (k < 1) throw ParameterError("s_nk: requires k >= 1");
  if (n <= k) throw ParameterError("s_nk: requires n > k");
  return join(complete_graph(k), empty_graph(n - k));
}

// s_nk plus the edge {k, k+1} inside the independent part.
inline Graph s_nk_plus(int n, int k) {
  if (k < 1) throw ParameterError("s_nk_plus: requires k >= 1");
  if (n < k + 2) throw ParameterError("s_nk_plus: requires n >= k + 2");
  return join(complete_graph(k), disjoint_union(complete_graph(2), empty_graph(n - k - 2)));
}

enum class Family { empty, complete, path, cycle, complete_bipartite, turan, s_nk, s_nk_plus };

inline Family parse_family(std::string_view name) {
  if (name == "empty") return Family::empty;
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "turan") return Family::turan;
  if (name == "s_nk") return Family::s_nk;
  if (name == "s_nk_plus") return Family::s_nk_plus;
  throw ParameterError("unknown family '" + std::string(name) + "'");
}

inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::complete_bipartite:
    case Family::turan:
    case Family::s_nk:
    case Family::s_nk_plus:
      return 2;
    default:
      return 1;
  }
}

// params: (n) for empty/complete/path/cycle, (a, b) for complete_bipartite,
// (n, r) for turan, (n, k) for s_nk and s_nk_plus.
inline Graph construct_named(Family family, std::span<const int> params) {
  if (params.size() != family_arity(family)) {
    throw ParameterError("expected " + std::to_string(family_arity(family)) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
  switch (family) {
    case Family::empty: return empty_graph(params[0]);
    case Family::complete: return complete_graph(params[0]);
    case Family::path: return path_graph(params[0]);
    case Family::cycle: return cycle_graph(params[0]);
    case Family::complete_bipartite: return complete_bipartite(params[0], params[1]);
    case Family::turan: return turan_graph(params[0], params[1]);
    case Family::s_nk: return s_nk(params[0], params[1]);
    case Family::s_nk_plus: return s_nk_plus(params[0], params[1]);
  }
  throw ParameterError("unknown family");
}

inline Graph construct_named(Family family, std::initializer_list<int> params) {
  return construct_named(family, std::span<const int>(params.begin(), params.size()));
}

// ---------------------------------------------------------------------------
// Distance layers and edge counts

struct NeighborhoodLayers {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> layers;  // layers[i] = N_i(root), sorted

  std::size_t size(std::size_t i) const { return i < layers.size() ? layers[i].size() : 0; }
  const std::vector<Vertex>& layer(std::size_t i) const { return layers.at(i); }
};

inline NeighborhoodLayers bfs_layers(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) {
    throw ParameterError("root " + std::to_string(root) + " outside 0.." + std::to_string(g.order() - 1));
  }
  NeighborhoodLayers out;
  out.root = root;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  std::vector<Vertex> frontier{root};
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (auto u : frontier) {
      for (auto w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          next.push_back(w);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    out.layers.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  return out;
}

// BFS distances from root, -1 if unreachable.
inline std::vector<int> bfs_distances(const Graph& g, Vertex root) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  auto layers = bfs_layers(g, root);
  for (std::size_t i = 0; i < layers.layers.size(); ++i)
    for (auto v : layers.layers[i]) dist[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return dist;
}

// Two disjoint vertex subsets of a host graph.
struct VertexSetPair {
  VertexSet x;
  VertexSet y;
};

struct EdgeCounts {
  std::size_t inside_x = 0;  // e(X)
  std::size_t inside_y = 0;  // e(Y)
  std::size_t cross = 0;     // e(X, Y)
};

inline std::size_t edges_inside(const Graph& g, const VertexSet& x) {
  std::size_t twice = 0;
  for (auto u : x.members()) twice += detail::popcount_and(g.row(u), x.words());
  return twice / 2;
}

inline std::size_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::size_t c = 0;
  for (auto u : x.members()) c += detail::popcount_and(g.row(u), y.words());
  return c;
}

inline EdgeCounts edge_counts(const Graph& g, const VertexSetPair& p) {
  if (p.x.universe() != g.order() || p.y.universe() != g.order()) {
    throw ParameterError("vertex set universe does not match graph order");
  }
  if (p.x.intersects(p.y)) throw ParameterError("X and Y overlap");
  return EdgeCounts{edges_inside(g, p.x), edges_inside(g, p.y), edges_between(g, p.x, p.y)};
}

// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    auto layers = bfs_layers(g, s);
    std::vector<Vertex> comp;
    for (auto& l : layers.layers)
      for (auto v : l) {
        seen[static_cast<std::size_t>(v)] = 1;
        comp.push_back(v);
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace spexgraph
