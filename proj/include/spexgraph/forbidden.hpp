#pragma once

// Exact, witness-producing detection of fixed-length paths and cycles by
// depth-first backtracking over simple paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spexgraph/errors.hpp"
#include "spexgraph/graph.hpp"

namespace spexgraph {

// Sorted, deduplicated set of forbidden cycle lengths (each >= 3).
class ForbiddenFamily {
 public:
  ForbiddenFamily() = default;
  explicit ForbiddenFamily(std::span<const int> lengths) {
    if (lengths.empty()) throw ParameterError("forbidden family must be nonempty");
    for (auto l : lengths) {
      if (l < 3) throw ParameterError("cycle length " + std::to_string(l) + " must be >= 3");
    }
    std::set<int> s(lengths.begin(), lengths.end());
    lengths_.assign(s.begin(), s.end());
  }
  ForbiddenFamily(std::initializer_list<int> lengths)
      : ForbiddenFamily(std::span<const int>(lengths.begin(), lengths.size())) {}

  // {C_{2k+2}}
  static ForbiddenFamily even_only(int k) {
    if (k < 1) throw ParameterError("k must be >= 1");
    return ForbiddenFamily{2 * k + 2};
  }
  // {C_{2k+1}, C_{2k+2}}
  static ForbiddenFamily both_cycles(int k) {
    if (k < 1) throw ParameterError("k must be >= 1");
    return ForbiddenFamily{2 * k + 1, 2 * k + 2};
  }

  // Comma-separated tokens such as "C5,C6".
  static ForbiddenFamily parse(std::string_view text) {
    std::vector<int> lengths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.size() < 2 || (token[0] != 'C' && token[0] != 'c')) {
        throw ParameterError("bad forbidden-cycle token '" + std::string(token) + "'");
      }
      int value = 0;
      for (auto ch : token.substr(1)) {
        if (ch < '0' || ch > '9' || value > 100000) {
          throw ParameterError("bad forbidden-cycle token '" + std::string(token) + "'");
        }
        value = value * 10 + (ch - '0');
      }
      lengths.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return ForbiddenFamily(lengths);
  }

  const std::vector<int>& lengths() const noexcept { return lengths_; }
  int max_length() const { return lengths_.back(); }
  bool contains(int ell) const { return std::binary_search(lengths_.begin(), lengths_.end(), ell); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (i) out += ',';
      out += 'C' + std::to_string(lengths_[i]);
    }
    return out;
  }

  friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;

 private:
  std::vector<int> lengths_;
};

struct SubgraphWitness {
  enum class Kind { path, cycle };
  Kind kind = Kind::path;
  std::vector<Vertex> vertices;
};

// Checks adjacency along the sequence, distinctness, exact length and, when
// given, that both ends lie in `ends`.
inline bool witness_valid(const Graph& g, const SubgraphWitness& w, int ell, const VertexSet* ends = nullptr) {
  const auto& vs = w.vertices;
  if (static_cast<int>(vs.size()) != ell) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (auto v : vs) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  if (w.kind == SubgraphWitness::Kind::cycle && (vs.size() < 3 || !g.adjacent(vs.back(), vs.front()))) return false;
  if (ends && (vs.empty() || !ends->contains(vs.front()) || !ends->contains(vs.back()))) return false;
  return true;
}

namespace detail {

// Vertices with equal open neighborhoods, or equal closed neighborhoods, are
// swapped by an automorphism fixing every other vertex. Returns the smallest
// member of each vertex's class. Vertices in `fixed` stay alone, and when
// `side` is given all members of a class agree on membership in it.
inline std::vector<Vertex> twin_classes(const Graph& g, std::span<const Vertex> fixed = {},
                                        const VertexSet* side = nullptr) {
  const int n = g.order();
  std::vector<Vertex> cls(static_cast<std::size_t>(n));
  std::vector<char> alone(static_cast<std::size_t>(n), 0);
  for (auto v : fixed) alone[static_cast<std::size_t>(v)] = 1;
  auto key = [&](Vertex v, bool closed) {
    std::vector<std::uint64_t> k(g.row(v).begin(), g.row(v).end());
    if (closed) k[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    k.push_back(side && side->contains(v) ? 1 : 0);
    return k;
  };
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> open_groups, closed_groups;
  for (Vertex v = 0; v < n; ++v) {
    if (alone[static_cast<std::size_t>(v)]) continue;
    open_groups[key(v, false)].push_back(v);
    closed_groups[key(v, true)].push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) cls[static_cast<std::size_t>(v)] = v;
  // A vertex cannot have both a nontrivial open class and a nontrivial
  // closed class, so the two passes never conflict.
  for (auto* groups : {&open_groups, &closed_groups}) {
    for (const auto& [k, members] : *groups) {
      if (members.size() < 2) continue;
      for (auto v : members) cls[static_cast<std::size_t>(v)] = members.front();
    }
  }
  return cls;
}

// Depth-first path growth. At each node only one unused vertex per twin
// class is tried, which is exact as long as `admit` and `accept` are
// invariant under swapping twins.
class PathDfs {
 public:
  PathDfs(const Graph& g, std::vector<Vertex> classes)
      : g_(g), used_(static_cast<std::size_t>(g.order()), 0), classes_(std::move(classes)) {}

  // Grows the path held in `stack` until it has `ell` vertices. `admit(w, i)`
  // decides whether w may occupy position i; `accept(path)` validates a full
  // path.
  template <typename Admit, typename Accept>
  bool run(Vertex start, int ell, Admit&& admit, Accept&& accept) {
    stack_.assign(1, start);
    std::fill(used_.begin(), used_.end(), 0);
    used_[static_cast<std::size_t>(start)] = 1;
    const auto cells = static_cast<std::size_t>(ell) * used_.size();
    if (tried_.size() < cells) tried_.resize(cells, 0);
    return grow(ell, admit, accept);
  }

  const std::vector<Vertex>& path() const noexcept { return stack_; }

 private:
  template <typename Admit, typename Accept>
  bool grow(int ell, Admit& admit, Accept& accept) {
    const int placed = static_cast<int>(stack_.size());
    if (placed == ell) return accept(stack_);
    const std::uint64_t stamp = ++stamp_;
    for (auto w : g_.neighbors(stack_.back())) {
      if (used_[static_cast<std::size_t>(w)] || !admit(w, placed)) continue;
      // Stamps are kept per depth so that deeper nodes cannot clobber them.
      auto& seen = tried_[static_cast<std::size_t>(placed) * used_.size() +
                          static_cast<std::size_t>(classes_[static_cast<std::size_t>(w)])];
      if (seen == stamp) continue;
      seen = stamp;
      used_[static_cast<std::size_t>(w)] = 1;
      stack_.push_back(w);
      if (grow(ell, admit, accept)) return true;
      stack_.pop_back();
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> used_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> classes_;
  std::vector<std::uint64_t> tried_;
  std::uint64_t stamp_ = 0;
};

// Reverses all but the first vertex when the second exceeds the last, so a
// cycle reads in its canonical direction from its starting vertex.
inline SubgraphWitness orient_cycle(std::vector<Vertex> vs) {
  if (vs.size() >= 3 && vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
  return SubgraphWitness{SubgraphWitness::Kind::cycle, std::move(vs)};
}

inline SubgraphWitness orient_path(std::vector<Vertex> vs) {
  if (vs.size() >= 2 && vs.front() > vs.back()) std::reverse(vs.begin(), vs.end());
  return SubgraphWitness{SubgraphWitness::Kind::path, std::move(vs)};
}

// Distances from `source` inside the subgraph induced by vertices >= floor.
inline std::vector<int> restricted_distances(const Graph& g, Vertex source, Vertex floor) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (auto w : g.neighbors(u)) {
      if (w < floor || dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

inline std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<std::size_t> size(static_cast<std::size_t>(g.order()), 0);
  for (const auto& comp : connected_components(g))
    for (auto v : comp) size[static_cast<std::size_t>(v)] = comp.size();
  return size;
}

}  // namespace detail

// A path on exactly `ell` vertices, reported with first vertex < last.
inline std::optional<SubgraphWitness> contains_path(const Graph& g, int ell) {
  if (ell < 1) throw ParameterError("contains_path: ell must be >= 1");
  if (ell > g.order()) return std::nullopt;
  if (ell == 1) return SubgraphWitness{SubgraphWitness::Kind::path, {0}};
  auto comp = detail::component_sizes(g);
  auto classes = detail::twin_classes(g);
  detail::PathDfs dfs(g, classes);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (classes[static_cast<std::size_t>(s)] != s) continue;
    if (comp[static_cast<std::size_t>(s)] < static_cast<std::size_t>(ell)) continue;
    auto admit = [](Vertex, int) { return true; };
    auto accept = [](const std::vector<Vertex>&) { return true; };
    if (dfs.run(s, ell, admit, accept)) return detail::orient_path(dfs.path());
  }
  return std::nullopt;
}

// Cycle on exactly `ell` vertices. The anchor is the cycle's smallest vertex
// and orientation is fixed by second vertex < last vertex.
inline std::optional<SubgraphWitness> contains_cycle(const Graph& g, int ell) {
  if (ell < 3) throw ParameterError("contains_cycle: ell must be >= 3");
  if (ell > g.order()) return std::nullopt;
  auto classes = detail::twin_classes(g);
  detail::PathDfs dfs(g, classes);
  // Anchors run in increasing order and an anchor's cycles avoid all smaller
  // vertices. A twin of a cycle-free anchor is cycle-free too, so only the
  // first member of each class needs to anchor a search.
  for (Vertex s = 0; s + ell <= g.order(); ++s) {
    if (g.degree(s) < 2 || classes[static_cast<std::size_t>(s)] != s) continue;
    auto dist = detail::restricted_distances(g, s, s);
    auto admit = [&](Vertex w, int i) {
      const int d = dist[static_cast<std::size_t>(w)];
      if (w < s || d < 0 || d > ell - i) return false;
      return i < ell - 1 || d == 1;
    };
    auto accept = [](const std::vector<Vertex>&) { return true; };
    if (dfs.run(s, ell, admit, accept)) return detail::orient_cycle(dfs.path());
  }
  return std::nullopt;
}

// Cycle on exactly `ell` vertices passing through v (witness starts at v).
inline std::optional<SubgraphWitness> contains_cycle_through(const Graph& g, Vertex v, int ell) {
  if (ell < 3) throw ParameterError("contains_cycle_through: ell must be >= 3");
  if (v < 0 || v >= g.order()) throw ParameterError("contains_cycle_through: vertex out of range");
  if (ell > g.order() || g.degree(v) < 2) return std::nullopt;
  auto dist = detail::restricted_distances(g, v, 0);
  const Vertex fixed[] = {v};
  detail::PathDfs dfs(g, detail::twin_classes(g, fixed));
  auto admit = [&](Vertex w, int i) {
    const int d = dist[static_cast<std::size_t>(w)];
    if (d < 0 || d > ell - i) return false;
    return i < ell - 1 || d == 1;
  };
  auto accept = [](const std::vector<Vertex>&) { return true; };
  if (dfs.run(v, ell, admit, accept)) return detail::orient_cycle(dfs.path());
  return std::nullopt;
}

// Path on exactly `ell` vertices from a to b.
inline std::optional<SubgraphWitness> path_between(const Graph& g, Vertex a, Vertex b, int ell) {
  if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) throw ParameterError("path_between: vertex out of range");
  if (a == b || ell < 2 || ell > g.order()) return std::nullopt;
  auto dist = detail::restricted_distances(g, b, 0);
  if (dist[static_cast<std::size_t>(a)] < 0 || dist[static_cast<std::size_t>(a)] > ell - 1) return std::nullopt;
  const Vertex fixed[] = {a, b};
  detail::PathDfs dfs(g, detail::twin_classes(g, fixed));
  auto admit = [&](Vertex w, int i) {
    const int d = dist[static_cast<std::size_t>(w)];
    if (i == ell - 1) return w == b;
    return w != b && d >= 0 && d <= ell - 1 - i;
  };
  auto accept = [](const std::vector<Vertex>&) { return true; };
  if (dfs.run(a, ell, admit, accept)) return SubgraphWitness{SubgraphWitness::Kind::path, dfs.path()};
  return std::nullopt;
}

// Path on `ell` vertices whose two ends lie in `ends` (first < last).
inline std::optional<SubgraphWitness> contains_path_with_endpoints_in(const Graph& g, const VertexSet& ends, int ell) {
  if (ell < 2) throw ParameterError("contains_path_with_endpoints_in: ell must be >= 2");
  if (ends.universe() != g.order()) throw ParameterError("endpoint set universe does not match graph order");
  if (ell > g.order()) return std::nullopt;
  auto comp = detail::component_sizes(g);
  auto classes = detail::twin_classes(g, {}, &ends);
  detail::PathDfs dfs(g, classes);
  for (auto s : ends.members()) {
    if (classes[static_cast<std::size_t>(s)] != s) continue;
    if (comp[static_cast<std::size_t>(s)] < static_cast<std::size_t>(ell)) continue;
    auto admit = [&](Vertex w, int i) { return i < ell - 1 || ends.contains(w); };
    auto accept = [](const std::vector<Vertex>&) { return true; };
    if (dfs.run(s, ell, admit, accept)) return detail::orient_path(dfs.path());
  }
  return std::nullopt;
}

struct FreenessResult {
  bool free = true;
  std::optional<SubgraphWitness> witness;
};

inline FreenessResult is_family_free(const Graph& g, const ForbiddenFamily& family) {
  for (auto ell : family.lengths()) {
    if (auto w = contains_cycle(g, ell)) return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

// Whether adding the non-edge {a, b} to a family-free graph keeps it free.
inline bool edge_addition_keeps_free(const Graph& g, Vertex a, Vertex b, const ForbiddenFamily& family) {
  for (auto ell : family.lengths()) {
    if (path_between(g, a, b, ell)) return false;
  }
  return true;
}

}  // namespace spexgraph
