#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpl/error.hpp"
#include "tpl/graph.hpp"

namespace tpl {

enum class Family {
  Helm,
  CycleWithChord,
  Wheel,
  Snake,
  Book,
  Complete,
  Windmill,
  Friendship,
  Prism,
  StackedPrism,
  Grid,
  Ladder,
  PathPower,
  CyclePower,
  Bistar,
  Path,
  Cycle,
  Star,
  Tree,
  Union,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 20> kFamilyNames{{
    {Family::Helm, "helm"},
    {Family::CycleWithChord, "cycle-chord"},
    {Family::Wheel, "wheel"},
    {Family::Snake, "snake"},
    {Family::Book, "book"},
    {Family::Complete, "complete"},
    {Family::Windmill, "windmill"},
    {Family::Friendship, "friendship"},
    {Family::Prism, "prism"},
    {Family::StackedPrism, "stacked-prism"},
    {Family::Grid, "grid"},
    {Family::Ladder, "ladder"},
    {Family::PathPower, "path-power"},
    {Family::CyclePower, "cycle-power"},
    {Family::Bistar, "bistar"},
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Tree, "tree"},
    {Family::Union, "union"},
}};

inline std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames)
    if (text == name) return family;
  return std::nullopt;
}

/// A named graph family with its integer parameters.
///
/// Parameter meaning per family:
///   Helm, Wheel, Path, Cycle, Star, Complete, Prism, Ladder: n
///   CycleWithChord: n vertices, chord v_1 v_k (1-based k, default 3)
///   Snake, Book:    k cycle length, n cycles / pages
///   Windmill:       n clique size, m copies;   Friendship: m triangles
///   StackedPrism:   Y_{m,n} = C_m x P_n
///   Grid:           P_m x P_n
///   PathPower, CyclePower: n vertices, power k
///   Bistar:         m leaves on u, n leaves on v
///   Tree:           n vertices and tree_edges
///   Union:          parts
struct FamilySpec {
  Family family = Family::Path;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<Edge> tree_edges;
  std::vector<FamilySpec> parts;

  static FamilySpec of(Family f, std::size_t n = 0, std::size_t m = 0, std::size_t k = 0) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    s.m = m;
    s.k = k;
    return s;
  }

  static FamilySpec helm(std::size_t n) { return of(Family::Helm, n); }
  static FamilySpec wheel(std::size_t n) { return of(Family::Wheel, n); }
  static FamilySpec cycle_with_chord(std::size_t n, std::size_t k = 3) {
    return of(Family::CycleWithChord, n, 0, k);
  }
  static FamilySpec snake(std::size_t k, std::size_t n) { return of(Family::Snake, n, 0, k); }
  static FamilySpec book(std::size_t k, std::size_t n) { return of(Family::Book, n, 0, k); }
  static FamilySpec complete(std::size_t n) { return of(Family::Complete, n); }
  static FamilySpec windmill(std::size_t n, std::size_t m) { return of(Family::Windmill, n, m); }
  static FamilySpec friendship(std::size_t m) { return of(Family::Friendship, 3, m); }
  static FamilySpec prism(std::size_t n) { return of(Family::Prism, n); }
  static FamilySpec stacked_prism(std::size_t m, std::size_t n) {
    return of(Family::StackedPrism, n, m);
  }
  static FamilySpec grid(std::size_t m, std::size_t n) { return of(Family::Grid, n, m); }
  static FamilySpec ladder(std::size_t n) { return of(Family::Ladder, n); }
  static FamilySpec path_power(std::size_t n, std::size_t k) {
    return of(Family::PathPower, n, 0, k);
  }
  static FamilySpec cycle_power(std::size_t n, std::size_t k) {
    return of(Family::CyclePower, n, 0, k);
  }
  static FamilySpec bistar(std::size_t m, std::size_t n) { return of(Family::Bistar, n, m); }
  static FamilySpec path(std::size_t n) { return of(Family::Path, n); }
  static FamilySpec cycle(std::size_t n) { return of(Family::Cycle, n); }
  static FamilySpec star(std::size_t n) { return of(Family::Star, n); }
  static FamilySpec tree(std::size_t n, std::vector<Edge> edges) {
    FamilySpec s = of(Family::Tree, n);
    s.tree_edges = std::move(edges);
    return s;
  }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    FamilySpec s = of(Family::Union);
    s.parts = std::move(parts);
    return s;
  }
  static FamilySpec cycle_union(std::span<const std::size_t> lengths) {
    std::vector<FamilySpec> parts;
    for (std::size_t len : lengths) parts.push_back(cycle(len));
    return disjoint_union(std::move(parts));
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline void require(bool ok, const FamilySpec& spec, std::string_view what) {
  if (!ok)
    throw Error(Errc::InvalidParameter,
                std::string(family_name(spec.family)) + ": " + std::string(what));
}

inline std::vector<Vertex> iota_vertices(Vertex first, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

// Layer roles of a product P/C_m x P_n laid out as a * n + b.
inline Graph::Roles column_roles(std::size_t columns, std::size_t n, std::string_view prefix) {
  Graph::Roles roles;
  for (std::size_t a = 0; a < columns; ++a)
    roles[std::string(prefix) + std::to_string(a)] = iota_vertices(a * n, n);
  return roles;
}

}  // namespace detail

/// Builds the family graph with a fixed vertex ordering: centers / hubs
/// first, then cycle or path vertices in traversal order, then pendants.
inline Graph build_family(const FamilySpec& spec) {
  using detail::iota_vertices;
  using detail::require;
  std::vector<Edge> edges;
  Graph::Roles roles;
  switch (spec.family) {
    case Family::Helm: {
      // 0 = center x, 1..n = rim w_i, n+1..2n = pendant v_i.
      const std::size_t n = spec.n;
      require(n >= 3, spec, "requires n >= 3");
      for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({0, i});
        edges.push_back(make_edge(i, i % n + 1));
        edges.push_back({i, n + i});
      }
      roles = {{"center", {0}}, {"cycle", iota_vertices(1, n)}, {"pendants", iota_vertices(n + 1, n)}};
      return Graph(2 * n + 1, std::move(edges), std::move(roles));
    }
    case Family::Wheel: {
      const std::size_t n = spec.n;
      require(n >= 3, spec, "requires n >= 3");
      for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({0, i});
        edges.push_back(make_edge(i, i % n + 1));
      }
      roles = {{"hub", {0}}, {"cycle", iota_vertices(1, n)}};
      return Graph(n + 1, std::move(edges), std::move(roles));
    }
    case Family::CycleWithChord: {
      // v_i = i - 1; chord v_1 v_k.
      const std::size_t n = spec.n, k = spec.k;
      require(n >= 4, spec, "requires n >= 4");
      require(k > 2 && k < n, spec, "chord index must satisfy 2 < k < n");
      for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
      edges.push_back({0, k - 1});
      roles = {{"cycle", iota_vertices(0, n)}, {"chord", {0, k - 1}}};
      return Graph(n, std::move(edges), std::move(roles));
    }
    case Family::Snake: {
      // Traversal order: v_1, then per cycle i: w_{i,1..k-2}, v_{i+1}.
      const std::size_t k = spec.k, n = spec.n;
      require(k >= 3, spec, "requires k >= 3");
      require(n >= 1, spec, "requires n >= 1");
      std::vector<Vertex> path{0};
      std::vector<Vertex> inner;
      for (std::size_t i = 1; i <= n; ++i) {
        const Vertex base = 1 + (i - 1) * (k - 1);
        const Vertex left = path.back();
        const Vertex right = base + k - 2;
        Vertex prev = left;
        for (std::size_t j = 0; j + 2 < k; ++j) {
          edges.push_back(make_edge(prev, base + j));
          inner.push_back(base + j);
          prev = base + j;
        }
        edges.push_back(make_edge(prev, right));
        edges.push_back(make_edge(left, right));
        path.push_back(right);
      }
      roles = {{"path", path}, {"inner", inner}};
      return Graph(n * (k - 1) + 1, std::move(edges), std::move(roles));
    }
    case Family::Book: {
      // 0 = u, 1 = v, page i vertex x_{i,j} = 2 + (k-2)(i-1) + (j-1).
      const std::size_t k = spec.k, n = spec.n;
      require(k >= 3, spec, "requires k >= 3");
      require(n >= 1, spec, "requires n >= 1");
      edges.push_back({0, 1});
      for (std::size_t i = 1; i <= n; ++i) {
        const Vertex base = 2 + (k - 2) * (i - 1);
        edges.push_back({0, base});
        for (std::size_t j = 0; j + 3 < k; ++j) edges.push_back({base + j, base + j + 1});
        edges.push_back({1, base + k - 3});
      }
      roles = {{"spine", {0, 1}}, {"pages", iota_vertices(2, n * (k - 2))}};
      return Graph(n * (k - 2) + 2, std::move(edges), std::move(roles));
    }
    case Family::Complete: {
      require(spec.n >= 1, spec, "requires n >= 1");
      return complete_graph(spec.n).with_roles({{"vertices", iota_vertices(0, spec.n)}});
    }
    case Family::Windmill:
    case Family::Friendship: {
      // 0 = shared vertex; clique i vertex j at 1 + (n-1)(i-1) + (j-1).
      const std::size_t n = spec.family == Family::Friendship ? 3 : spec.n;
      const std::size_t m = spec.m;
      require(n >= 2, spec, "requires clique size n >= 2");
      require(m >= 1, spec, "requires m >= 1 copies");
      for (std::size_t i = 0; i < m; ++i) {
        const Vertex base = 1 + (n - 1) * i;
        for (std::size_t a = 0; a + 1 < n; ++a) {
          edges.push_back({0, base + a});
          for (std::size_t b = a + 1; b + 1 < n; ++b) edges.push_back({base + a, base + b});
        }
        roles["clique" + std::to_string(i + 1)] = iota_vertices(base, n - 1);
      }
      roles["center"] = {0};
      return Graph(m * (n - 1) + 1, std::move(edges), std::move(roles));
    }
    case Family::Prism: {
      // P_2 x C_n: u_i = i-1, v_i = n+i-1.
      const std::size_t n = spec.n;
      require(n >= 3, spec, "requires n >= 3");
      Graph g = cartesian_product(path_graph(2), cycle_graph(n));
      return g.with_roles({{"u", iota_vertices(0, n)}, {"v", iota_vertices(n, n)}});
    }
    case Family::StackedPrism: {
      // Y_{m,n} = C_m x P_n: vertex (a, b) = a*n + b; column a is one copy of P_n.
      const std::size_t m = spec.m, n = spec.n;
      require(m >= 3, spec, "requires cycle length m >= 3");
      require(n >= 1, spec, "requires height n >= 1");
      Graph g = cartesian_product(cycle_graph(m), path_graph(n));
      return g.with_roles(detail::column_roles(m, n, "column"));
    }
    case Family::Grid: {
      const std::size_t m = spec.m, n = spec.n;
      require(m >= 1 && n >= 1, spec, "requires m, n >= 1");
      Graph g = cartesian_product(path_graph(m), path_graph(n));
      return g.with_roles(detail::column_roles(m, n, "row"));
    }
    case Family::Ladder: {
      // L_n = P_n x P_2: rung a joins 2a and 2a+1.
      const std::size_t n = spec.n;
      require(n >= 1, spec, "requires n >= 1");
      return cartesian_product(path_graph(n), path_graph(2));
    }
    case Family::PathPower: {
      require(spec.n >= 1, spec, "requires n >= 1");
      require(spec.k >= 1, spec, "requires power k >= 1");
      return graph_power(path_graph(spec.n), spec.k);
    }
    case Family::CyclePower: {
      require(spec.n >= 3, spec, "requires n >= 3");
      require(spec.k >= 1, spec, "requires power k >= 1");
      return graph_power(cycle_graph(spec.n), spec.k);
    }
    case Family::Bistar: {
      // 0 = u, 1 = v, w_i = 1+i, x_j = m+1+j.
      const std::size_t m = spec.m, n = spec.n;
      require(m >= 1 && n >= 1, spec, "requires m, n >= 1");
      edges.push_back({0, 1});
      for (std::size_t i = 1; i <= m; ++i) edges.push_back({0, 1 + i});
      for (std::size_t j = 1; j <= n; ++j) edges.push_back({1, m + 1 + j});
      roles = {{"u", {0}}, {"v", {1}}, {"u_leaves", iota_vertices(2, m)},
               {"v_leaves", iota_vertices(m + 2, n)}};
      return Graph(m + n + 2, std::move(edges), std::move(roles));
    }
    case Family::Path:
      require(spec.n >= 1, spec, "requires n >= 1");
      return path_graph(spec.n);
    case Family::Cycle:
      require(spec.n >= 3, spec, "requires n >= 3");
      return cycle_graph(spec.n);
    case Family::Star: {
      require(spec.n >= 1, spec, "requires n >= 1 leaves");
      for (Vertex i = 1; i <= spec.n; ++i) edges.push_back({0, i});
      roles = {{"center", {0}}, {"leaves", iota_vertices(1, spec.n)}};
      return Graph(spec.n + 1, std::move(edges), std::move(roles));
    }
    case Family::Tree: {
      if (spec.n == 0) throw Error(Errc::MalformedTree, "tree needs at least one vertex");
      std::optional<Graph> g;
      try {
        g.emplace(spec.n, spec.tree_edges);
      } catch (const Error& e) {
        throw Error(Errc::MalformedTree, e.what());
      }
      if (!is_tree(*g)) throw Error(Errc::MalformedTree, "edge list is not a tree");
      return *std::move(g);
    }
    case Family::Union: {
      require(!spec.parts.empty(), spec, "requires at least one part");
      std::vector<Graph> graphs;
      for (const auto& part : spec.parts) graphs.push_back(build_family(part));
      return disjoint_union(graphs);
    }
  }
  throw Error(Errc::InvalidParameter, "unknown family");
}

/// Hamiltonian cycle plus (optionally) a chord from cycle position 0 to
/// position chord_offset, 2 <= chord_offset <= n-2. A chordless cycle is only
/// produced when the graph is itself a cycle.
struct HamiltonianData {
  std::vector<Vertex> cycle;
  std::optional<Edge> chord;
  std::size_t chord_offset = 0;

  friend bool operator==(const HamiltonianData&, const HamiltonianData&) = default;
};

inline bool is_valid_hamiltonian(const Graph& g, const HamiltonianData& ham) {
  const std::size_t n = g.order();
  if (n < 3 || ham.cycle.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : ham.cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.has_edge(ham.cycle[i], ham.cycle[(i + 1) % n])) return false;
  if (!ham.chord) return g.size() == n;
  if (ham.chord_offset < 2 || ham.chord_offset + 2 > n) return false;
  return *ham.chord == make_edge(ham.cycle[0], ham.cycle[ham.chord_offset]) &&
         g.has_edge(ham.chord->u, ham.chord->v);
}

/// Rotates a Hamiltonian cycle so that the first vertex owning a chord sits at
/// position 0, and picks that vertex's chord with the smallest offset.
inline HamiltonianData normalize_hamiltonian(const Graph& g, std::vector<Vertex> cycle) {
  const std::size_t n = cycle.size();
  HamiltonianData out;
  for (std::size_t p = 0; p < n && !out.chord; ++p) {
    for (std::size_t j = 2; j + 2 <= n; ++j) {
      if (g.has_edge(cycle[p], cycle[(p + j) % n])) {
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(p), cycle.end());
        out.chord = make_edge(cycle[0], cycle[j]);
        out.chord_offset = j;
        break;
      }
    }
  }
  out.cycle = std::move(cycle);
  if (!is_valid_hamiltonian(g, out))
    throw Error(Errc::InvalidHamiltonianData, "sequence is not a Hamiltonian cycle of the graph");
  return out;
}

namespace detail {

// Boustrophedon cycle of an R x C grid (R even, R, C >= 2) given a cell
// indexer; the last column-0 run closes the cycle.
template <typename Index>
std::vector<Vertex> grid_cycle(std::size_t rows, std::size_t cols, Index index) {
  std::vector<Vertex> cycle{index(0, 0)};
  for (std::size_t r = 0; r < rows; ++r) {
    if (r % 2 == 0) {
      for (std::size_t c = 1; c < cols; ++c) cycle.push_back(index(r, c));
    } else {
      for (std::size_t c = cols - 1; c >= 1; --c) cycle.push_back(index(r, c));
    }
  }
  for (std::size_t r = rows - 1; r >= 1; --r) cycle.push_back(index(r, 0));
  return cycle;
}

inline std::vector<Vertex> stacked_prism_cycle(std::size_t m, std::size_t n) {
  auto at = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<Vertex> cycle;
  if (m % 2 == 0) {
    // Columns alternate up/down; (m-1, 0) closes to (0, 0) around C_m.
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < n; ++t) cycle.push_back(at(a, a % 2 == 0 ? t : n - 1 - t));
    return cycle;
  }
  if (n % 2 == 0) return grid_cycle(n, m, [&](std::size_t r, std::size_t c) { return at(c, r); });
  // m and n odd: zig-zag columns 0..m-3, then sweep the last two columns
  // downward as a ladder, ending at (m-1, 0) which is adjacent to (0, 0).
  for (std::size_t a = 0; a + 2 < m; ++a)
    for (std::size_t t = 0; t < n; ++t) cycle.push_back(at(a, a % 2 == 0 ? t : n - 1 - t));
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t b = n - 1 - t;
    if (t % 2 == 0) {
      cycle.push_back(at(m - 2, b));
      cycle.push_back(at(m - 1, b));
    } else {
      cycle.push_back(at(m - 1, b));
      cycle.push_back(at(m - 2, b));
    }
  }
  return cycle;
}

}  // namespace detail

/// The Hamiltonian cycle each construction uses, with its chord normalized to
/// start at position 0. Complete: identity; Prism: u-cycle then v-cycle
/// reversed; StackedPrism with even m: columns alternately up and down.
inline HamiltonianData canonical_hamiltonian(const Graph& g, const FamilySpec& spec) {
  auto unsupported = [&](std::string_view why) -> HamiltonianData {
    throw Error(Errc::NoCanonicalCycle,
                std::string(family_name(spec.family)) + ": " + std::string(why));
  };
  std::vector<Vertex> cycle;
  switch (spec.family) {
    case Family::Complete:
    case Family::Cycle:
    case Family::CycleWithChord:
    case Family::CyclePower:
      if (g.order() < 3) return unsupported("fewer than 3 vertices");
      cycle = detail::iota_vertices(0, g.order());
      break;
    case Family::Wheel:
      cycle = detail::iota_vertices(0, g.order());
      break;
    case Family::Prism: {
      const std::size_t n = spec.n;
      cycle = detail::iota_vertices(0, n);
      for (std::size_t i = 0; i < n; ++i) cycle.push_back(2 * n - 1 - i);
      break;
    }
    case Family::StackedPrism:
      if (spec.m * spec.n < 3) return unsupported("fewer than 3 vertices");
      cycle = detail::stacked_prism_cycle(spec.m, spec.n);
      break;
    case Family::Grid: {
      const std::size_t m = spec.m, n = spec.n;
      if (m < 2 || n < 2) return unsupported("grid with a side of length 1");
      if (m % 2 == 0)
        cycle = detail::grid_cycle(m, n, [n](std::size_t r, std::size_t c) { return r * n + c; });
      else if (n % 2 == 0)
        cycle = detail::grid_cycle(n, m, [n](std::size_t r, std::size_t c) { return c * n + r; });
      else
        return unsupported("grid with two odd sides has no Hamiltonian cycle");
      break;
    }
    case Family::Ladder:
      if (spec.n < 2) return unsupported("ladder needs n >= 2");
      cycle = detail::grid_cycle(2, spec.n, [](std::size_t r, std::size_t c) { return c * 2 + r; });
      break;
    case Family::PathPower: {
      if (spec.k < 2 || spec.n < 3) return unsupported("path power needs k >= 2 and n >= 3");
      // Even vertices ascending, odd vertices descending.
      for (Vertex v = 0; v < spec.n; v += 2) cycle.push_back(v);
      const Vertex top_odd = spec.n % 2 == 0 ? spec.n - 1 : spec.n - 2;
      for (Vertex v = top_odd;; v -= 2) {
        cycle.push_back(v);
        if (v == 1) break;
      }
      break;
    }
    default:
      return unsupported("no canonical Hamiltonian cycle; use a search instead");
  }
  return normalize_hamiltonian(g, std::move(cycle));
}

}  // namespace tpl
