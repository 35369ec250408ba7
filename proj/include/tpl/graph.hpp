#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpl/error.hpp"

namespace tpl {

using Vertex = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic (u, v) order and the adjacency lists are
/// sorted, so two graphs built from the same edge set in any order compare
/// equal. Roles name vertices that a family constructor wants to expose
/// ("center", "cycle", ...).
class Graph {
 public:
  using Roles = std::map<std::string, std::vector<Vertex>>;

  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges, Roles roles = {})
      : n_(n), edges_(std::move(edges)), roles_(std::move(roles)) {
    for (auto& e : edges_) {
      if (e.u == e.v) throw Error(Errc::InvalidParameter, "self-loop at " + std::to_string(e.u));
      if (e.u >= n_ || e.v >= n_) throw Error(Errc::InvalidParameter, "edge endpoint out of range");
      e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw Error(Errc::InvalidParameter, "duplicate edge");
    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    for (const auto& [name, members] : roles_)
      for (Vertex v : members)
        if (v >= n_) throw Error(Errc::InvalidParameter, "role '" + name + "' out of range");
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const Roles& roles() const { return roles_; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
  }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  /// Same graph with the role map replaced.
  Graph with_roles(Roles roles) const {
    Graph copy = *this;
    for (const auto& [name, members] : roles)
      for (Vertex v : members)
        if (v >= n_) throw Error(Errc::InvalidParameter, "role '" + name + "' out of range");
    copy.roles_ = std::move(roles);
    return copy;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.roles_ == b.roles_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  Roles roles_;
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      frontier.push(w);
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// Vertex (a, b) of g x h is indexed a * |V(h)| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw Error(Errc::InvalidParameter, "cartesian product of an empty graph");
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.size() + nh * g.size());
  for (Vertex a = 0; a < g.order(); ++a)
    for (const auto& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v});
  for (const auto& e : g.edges())
    for (Vertex b = 0; b < nh; ++b) edges.push_back({e.u * nh + b, e.v * nh + b});
  return Graph(g.order() * nh, std::move(edges));
}

/// k-th power: u ~ v iff 1 <= dist_g(u, v) <= k.
inline Graph graph_power(const Graph& g, std::size_t k) {
  if (k < 1) throw Error(Errc::InvalidParameter, "graph power exponent must be >= 1");
  std::vector<Edge> edges;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t = s + 1; t < g.order(); ++t)
      if (dist[t] != kUnreachable && dist[t] <= k) edges.push_back({s, t});
  }
  return Graph(g.order(), std::move(edges), g.roles());
}

/// Components are laid out back to back. Roles become "c<i>" (all vertices of
/// part i) and "c<i>.<role>" for each role of part i.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  Graph::Roles roles;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& part = parts[i];
    const std::string prefix = "c" + std::to_string(i);
    auto& all = roles[prefix];
    for (Vertex v = 0; v < part.order(); ++v) all.push_back(offset + v);
    for (const auto& e : part.edges()) edges.push_back({offset + e.u, offset + e.v});
    for (const auto& [name, members] : part.roles()) {
      auto& shifted = roles[prefix + "." + name];
      for (Vertex v : members) shifted.push_back(offset + v);
    }
    offset += part.order();
  }
  return Graph(offset, std::move(edges), std::move(roles));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

/// Relabels vertex v as perm[v].
inline Graph permute_vertices(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw Error(Errc::SizeMismatch, "permutation size");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), std::move(edges));
}

}  // namespace tpl
