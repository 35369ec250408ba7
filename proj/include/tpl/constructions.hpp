#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpl/error.hpp"
#include "tpl/families.hpp"
#include "tpl/graph.hpp"
#include "tpl/labeling.hpp"
#include "tpl/numtheory.hpp"

namespace tpl {

/// A graph, a total prime labeling of it, and the choices the construction
/// made (chord offset, swap applied, prime used, ...).
struct ConstructionResult {
  Graph graph;
  Labeling labeling;
  std::map<std::string, Label> notes;
};

namespace detail {

// Accumulates a labeling over a fixed graph and fills the leftovers.
class LabelBuilder {
 public:
  explicit LabelBuilder(Graph g)
      : graph_(std::move(g)),
        vertex_(graph_.order(), 0),
        edge_(graph_.size(), 0),
        used_(graph_.order() + graph_.size() + 1, false) {}

  const Graph& graph() const { return graph_; }
  Label total() const { return static_cast<Label>(graph_.order() + graph_.size()); }

  void vertex(Vertex v, Label label) {
    claim(label);
    vertex_.at(v) = label;
  }

  void edge(Vertex a, Vertex b, Label label) {
    const auto idx = graph_.edge_index(a, b);
    if (!idx) throw std::logic_error("construction labels a non-edge");
    if (edge_[*idx] != 0) throw std::logic_error("construction labels an edge twice");
    claim(label);
    edge_[*idx] = label;
  }

  // Cycle edges get first, first+1, ..., the closing edge first+n-1 and the
  // chord first+n, so every vertex sees two consecutive labels.
  void cycle_and_chord(const HamiltonianData& ham, Label first) {
    const std::size_t n = ham.cycle.size();
    for (std::size_t i = 0; i < n; ++i)
      edge(ham.cycle[i], ham.cycle[(i + 1) % n], first + static_cast<Label>(i));
    if (ham.chord) edge(ham.chord->u, ham.chord->v, first + static_cast<Label>(n));
  }

  // Unused labels, ascending, onto unlabeled edges in canonical edge order.
  void fill_remaining_edges() {
    Label next = 1;
    for (std::size_t i = 0; i < edge_.size(); ++i) {
      if (edge_[i] != 0) continue;
      while (next <= total() && used_[static_cast<std::size_t>(next)]) ++next;
      if (next > total()) throw std::logic_error("construction ran out of labels");
      used_[static_cast<std::size_t>(next)] = true;
      edge_[i] = next;
    }
  }

  ConstructionResult finish(std::map<std::string, Label> notes = {}) && {
    ConstructionResult out;
    out.labeling.vertex_labels = std::move(vertex_);
    for (std::size_t i = 0; i < edge_.size(); ++i)
      out.labeling.edge_labels.emplace(graph_.edges()[i], edge_[i]);
    out.graph = std::move(graph_);
    out.notes = std::move(notes);
    return out;
  }

 private:
  void claim(Label label) {
    if (label < 1 || label > total()) throw std::logic_error("construction label out of range");
    const auto idx = static_cast<std::size_t>(label);
    if (used_[idx]) throw std::logic_error("construction reuses label " + std::to_string(label));
    used_[idx] = true;
  }

  Graph graph_;
  std::vector<Label> vertex_;
  std::vector<Label> edge_;
  std::vector<bool> used_;
};

inline void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidParameter, what);
}

inline Label as_label(std::size_t x) { return static_cast<Label>(x); }

}  // namespace detail

/// Helm H_n, n >= 3.
inline ConstructionResult helm(std::size_t n) {
  detail::require_param(n >= 3, "helm needs n >= 3");
  detail::LabelBuilder b(build_family(FamilySpec::helm(n)));
  const Label N = detail::as_label(n);
  auto w = [](std::size_t i) -> Vertex { return i; };
  auto v = [n](std::size_t i) -> Vertex { return n + i; };
  b.vertex(0, 1);
  b.vertex(w(1), 2);
  b.vertex(v(1), 3);
  for (std::size_t i = 2; i <= n; ++i) {
    b.vertex(v(i), 2 * detail::as_label(i));
    b.vertex(w(i), 2 * detail::as_label(i) + 1);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Label I = detail::as_label(i);
    b.edge(v(i), w(i), 2 * I + 2 * N);
    if (i < n) b.edge(w(i), w(i + 1), 2 * I + 2 * N + 1);
    b.edge(0, w(i), 4 * N + I + 1);
  }
  b.edge(w(n), w(1), 4 * N + 1);
  return std::move(b).finish();
}

/// Cycle C_n with chord v_1 v_k, 2 < k < n.
inline ConstructionResult cycle_with_chord(std::size_t n, std::size_t k = 3) {
  detail::require_param(n >= 4 && k > 2 && k < n, "cycle with chord needs n >= 4 and 2 < k < n");
  detail::LabelBuilder b(build_family(FamilySpec::cycle_with_chord(n, k)));
  for (Vertex i = 0; i < n; ++i) b.vertex(i, detail::as_label(i + 1));
  HamiltonianData ham{detail::iota_vertices(0, n), make_edge(0, k - 1), k - 1};
  b.cycle_and_chord(ham, detail::as_label(n + 1));
  return std::move(b).finish({{"chord_k", detail::as_label(k)}});
}

namespace detail {

inline void require_extendable(const Graph& g, const HamiltonianData& ham, Label first_edge_label) {
  if (!is_valid_hamiltonian(g, ham))
    throw Error(Errc::InvalidHamiltonianData, "not a Hamiltonian cycle (plus chord) of the graph");
  // Without a chord, the vertex at position 0 only sees the first and the
  // closing cycle labels.
  const Label n = as_label(ham.cycle.size());
  if (!ham.chord && std::gcd(first_edge_label, first_edge_label + n - 1) != 1)
    throw Error(Errc::InvalidHamiltonianData,
                "chordless cycle: first and closing edge labels share a factor");
}

}  // namespace detail

/// Extends a prime labeling through a Hamiltonian cycle and chord: cycle
/// edges n+1..2n from position 0, chord 2n+1, leftovers ascending.
inline ConstructionResult extend_prime_hamiltonian(const Graph& g, const Labeling& prime,
                                                   const HamiltonianData& ham) {
  if (!verify_prime(g, prime)) throw Error(Errc::NotPrimeLabeling, "input is not a prime labeling");
  const Label n = detail::as_label(g.order());
  detail::require_extendable(g, ham, n + 1);
  detail::LabelBuilder b(g);
  for (Vertex v = 0; v < g.order(); ++v) b.vertex(v, prime.vertex_labels[v]);
  b.cycle_and_chord(ham, n + 1);
  b.fill_remaining_edges();
  return std::move(b).finish({{"chord_offset", detail::as_label(ham.chord_offset)},
                              {"has_chord", ham.chord ? 1 : 0}});
}

/// Extends a coprime labeling into {1..k} with k <= m-1: cycle and chord take
/// k+1..k+n+1, all other unused values go to the remaining edges ascending.
inline ConstructionResult extend_coprime_hamiltonian(const Graph& g, const Labeling& coprime, Label k,
                                                     const HamiltonianData& ham) {
  if (k + 1 > detail::as_label(g.size()))
    throw Error(Errc::BoundViolated, "coprime bound " + std::to_string(k) + " exceeds m-1 = " +
                                         std::to_string(g.size() - 1));
  if (!verify_coprime(g, coprime, k))
    throw Error(Errc::NotCoprime, "input is not a coprime labeling into {1.." + std::to_string(k) + "}");
  if (!ham.chord) throw Error(Errc::InvalidHamiltonianData, "coprime extension needs a chord");
  detail::require_extendable(g, ham, k + 1);
  detail::LabelBuilder b(g);
  for (Vertex v = 0; v < g.order(); ++v) b.vertex(v, coprime.vertex_labels[v]);
  b.cycle_and_chord(ham, k + 1);
  b.fill_remaining_edges();
  return std::move(b).finish({{"coprime_bound", k}, {"chord_offset", detail::as_label(ham.chord_offset)}});
}

/// Snake S_{k,n}: k >= 3, n >= 2.
inline ConstructionResult snake(std::size_t k, std::size_t n) {
  detail::require_param(k >= 3 && n >= 2, "snake needs k >= 3 and n >= 2");
  detail::LabelBuilder b(build_family(FamilySpec::snake(k, n)));
  // Vertex index + 1 is exactly the label sequence v_1, w_{1,*}, v_2, ...
  for (Vertex v = 0; v < b.graph().order(); ++v) b.vertex(v, detail::as_label(v + 1));
  auto path_vertex = [k](std::size_t i) -> Vertex { return (i - 1) * (k - 1); };  // v_i
  auto inner = [k](std::size_t i, std::size_t j) -> Vertex { return 1 + (i - 1) * (k - 1) + (j - 1); };
  Label next = detail::as_label(n * (k - 1) + 2);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Vertex> walk{path_vertex(i)};
    for (std::size_t j = 1; j + 2 <= k; ++j) walk.push_back(inner(i, j));
    walk.push_back(path_vertex(i + 1));
    b.edge(path_vertex(i), path_vertex(i + 1), next++);
    if (i == n) std::reverse(walk.begin(), walk.end());
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) b.edge(walk[t], walk[t + 1], next++);
  }
  return std::move(b).finish();
}

/// Book B_k^n: k >= 3, n >= 2 (n = 2 is the cycle with chord C_{2k-2}^+).
inline ConstructionResult book(std::size_t k, std::size_t n) {
  detail::require_param(k >= 3 && n >= 2, "book needs k >= 3 and n >= 2");
  Graph g = build_family(FamilySpec::book(k, n));
  auto page = [k](std::size_t i, std::size_t j) -> Vertex { return 2 + (k - 2) * (i - 1) + (j - 1); };

  if (n == 2) {
    // Cycle u, x_{1,1..k-2}, v, x_{2,k-2..1} with the spine as chord v_1 v_k.
    ConstructionResult base = cycle_with_chord(2 * k - 2, k);
    std::vector<Vertex> to_book{0};
    for (std::size_t j = 1; j <= k - 2; ++j) to_book.push_back(page(1, j));
    to_book.push_back(1);
    for (std::size_t j = k - 2; j >= 1; --j) to_book.push_back(page(2, j));
    detail::LabelBuilder b(std::move(g));
    for (Vertex i = 0; i < to_book.size(); ++i) b.vertex(to_book[i], base.labeling.vertex_labels[i]);
    for (const auto& [e, label] : base.labeling.edge_labels) b.edge(to_book[e.u], to_book[e.v], label);
    return std::move(b).finish({{"routed_cycle_with_chord", 1}});
  }

  detail::LabelBuilder b(std::move(g));
  const Label N = detail::as_label(n), K = detail::as_label(k);
  const Label top = 2 * N * K - 3 * N + 3;

  // Trail u -> page 1 -> v -> page 2 (reversed) -> u -> page 3 -> ...
  std::vector<Edge> trail;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Vertex> walk{0};
    for (std::size_t j = 1; j <= k - 2; ++j) walk.push_back(page(i, j));
    walk.push_back(1);
    if (i % 2 == 0) std::reverse(walk.begin(), walk.end());
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) trail.push_back({walk[t], walk[t + 1]});
  }

  std::map<std::string, Label> notes;
  if (k % 2 == 0) {
    b.vertex(0, 2);
    b.vertex(1, 1);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= k - 2; ++j)
        b.vertex(page(i, j), (K - 2) * detail::as_label(i - 1) + detail::as_label(j) + 2);
    Label next = N * (K - 2) + 3;
    for (const auto& e : trail) b.edge(e.u, e.v, next++);
    b.edge(0, 1, top);
    notes["case"] = 1;
    return std::move(b).finish(std::move(notes));
  }

  const Label p = static_cast<Label>(largest_prime_leq(static_cast<std::uint64_t>(top)));
  b.vertex(0, 1);
  b.vertex(1, p);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= k - 2; ++j)
      b.vertex(page(i, j), (K - 2) * detail::as_label(i - 1) + detail::as_label(j) + 1);

  // Skip {p, p+1} (spine gets p+1) when 3 | p+1, else skip {p-1, p} (spine
  // gets p-1). When p is the top label the skip falls past the end of the
  // sequence and p+1 does not exist, so the spine takes p-1.
  const bool high_skip = (p + 1) % 3 == 0 && p + 1 <= top;
  const Label skip_lo = high_skip ? p : p - 1;
  const Label spine = high_skip ? p + 1 : p - 1;
  Label next = N * (K - 2) + 2;
  std::optional<std::pair<Label, Label>> straddle;
  for (const auto& e : trail) {
    if (next == skip_lo) {
      straddle = std::pair{next - 1, next + 2};
      next += 2;
    }
    b.edge(e.u, e.v, next++);
  }
  if (next - 1 > top) throw std::logic_error("book trail overran the label range");
  b.edge(0, 1, spine);

  // The vertex where the trail jumps over the skipped pair sees labels that
  // differ by 3, neither a multiple of 3.
  if (straddle && straddle->first >= N * (K - 2) + 2 && straddle->second <= next - 1 &&
      std::gcd(straddle->first, straddle->second) != 1)
    throw std::logic_error("book skip straddle shares a factor");
  notes["case"] = 2;
  notes["prime"] = p;
  notes["spine_label"] = spine;
  notes["skip_low"] = skip_lo;
  notes["skip_truncated"] = (p + 1 > top) ? 1 : 0;
  return std::move(b).finish(std::move(notes));
}

/// Complete graph K_n, n >= 4.
inline ConstructionResult complete(std::size_t n) {
  if (n == 3) throw Error(Errc::InvalidParameter, "K_3 = C_3 is not total prime");
  detail::require_param(n >= 4, "complete graph needs n >= 4");
  const FamilySpec spec = FamilySpec::complete(n);
  detail::LabelBuilder b(build_family(spec));
  b.vertex(0, 1);
  for (std::size_t i = 2; i <= n; ++i) b.vertex(i - 1, static_cast<Label>(nth_prime(i - 1)));
  const Label N = detail::as_label(n);
  b.cycle_and_chord(canonical_hamiltonian(b.graph(), spec), (N * N - N - 2) / 2 + 1);
  b.fill_remaining_edges();
  return std::move(b).finish();
}

enum class WindmillScheme {
  Auto,         // fixed-clique scheme for n in {4,5,6}, two-copy scheme otherwise
  TwoCopies,    // m = 2, n >= 4
  FixedClique,  // n in {4,5,6}, m >= 2
};

namespace detail {

inline ConstructionResult windmill_two_copies(std::size_t n) {
  detail::LabelBuilder b(build_family(FamilySpec::windmill(n, 2)));
  auto v = [](std::size_t i) -> Vertex { return i; };
  auto w = [n](std::size_t i) -> Vertex { return n - 1 + i; };
  b.vertex(0, 1);
  for (std::size_t i = 1; i < n; ++i) b.vertex(v(i), static_cast<Label>(nth_prime(i)));
  b.vertex(w(1), 4);
  for (std::size_t i = 2; i < n; ++i) b.vertex(w(i), static_cast<Label>(nth_prime(n - 2 + i)));
  const Label N = as_label(n);
  Label next = N * N - N;
  for (Vertex offset : {Vertex{0}, n - 1}) {
    b.edge(0, offset + 1, next++);
    for (std::size_t i = 1; i + 1 < n; ++i) b.edge(offset + i, offset + i + 1, next++);
    b.edge(offset + n - 1, 0, next++);
  }
  b.fill_remaining_edges();
  return std::move(b).finish({{"scheme", 2}});
}

// Labels of the n-1 non-center vertices of copy i (1-based).
inline std::vector<Label> fixed_clique_labels(std::size_t n, std::size_t i) {
  const Label I = as_label(i);
  switch (n) {
    case 4: return {4 * I - 1, 4 * I, 4 * I + 1};
    case 5: return {6 * I - 3, 6 * I - 2, 6 * I - 1, 6 * I + 1};
    case 6:
      switch (i % 3) {
        case 1: return {10 * I - 5, 10 * I - 3, 10 * I - 2, 10 * I - 1, 10 * I + 1};
        case 2: return {10 * I - 7, 10 * I - 4, 10 * I - 3, 10 * I - 1, 10 * I + 1};
        default: return {10 * I - 7, 10 * I - 5, 10 * I - 4, 10 * I - 1, 10 * I + 1};
      }
  }
  throw Error(Errc::UnsupportedCase, "fixed-clique windmill scheme covers n = 4, 5, 6");
}

inline ConstructionResult windmill_fixed_clique(std::size_t n, std::size_t m) {
  detail::LabelBuilder b(build_family(FamilySpec::windmill(n, m)));
  const Label M = as_label(m);
  // First label of the closed trail w, v_{1,*}, w, v_{2,*}, ..., w.
  const Label first = n == 4 ? 4 * M + 2 : n == 5 ? 9 * M + 2 : 14 * M + 2;
  b.vertex(0, 1);
  Label next = first;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto labels = fixed_clique_labels(n, i);
    const Vertex base = 1 + (n - 1) * (i - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) b.vertex(base + j, labels[j]);
    b.edge(0, base, next++);
    for (std::size_t j = 0; j + 2 < n; ++j) b.edge(base + j, base + j + 1, next++);
    b.edge(base + n - 2, 0, next++);
  }
  b.fill_remaining_edges();
  return std::move(b).finish({{"scheme", detail::as_label(n)}, {"trail_first", first}});
}

}  // namespace detail

/// Windmill K_n^(m): m = 2 with n >= 4, or n in {4,5,6} with m >= 2.
/// Friendship graphs (n = 3) are left to the search engine.
inline ConstructionResult windmill(std::size_t n, std::size_t m,
                                   WindmillScheme scheme = WindmillScheme::Auto) {
  detail::require_param(n >= 3 && m >= 2, "windmill needs n >= 3 and m >= 2");
  const bool fixed_ok = n >= 4 && n <= 6;
  const bool two_ok = m == 2 && n >= 4;
  if (scheme == WindmillScheme::Auto)
    scheme = fixed_ok ? WindmillScheme::FixedClique : WindmillScheme::TwoCopies;
  if (scheme == WindmillScheme::FixedClique && fixed_ok) return detail::windmill_fixed_clique(n, m);
  if (scheme == WindmillScheme::TwoCopies && two_ok) return detail::windmill_two_copies(n);
  throw Error(Errc::UnsupportedCase, "no windmill construction for n = " + std::to_string(n) +
                                         ", m = " + std::to_string(m));
}

/// Prism P_2 x C_n, n >= 3.
inline ConstructionResult prism(std::size_t n) {
  detail::require_param(n >= 3, "prism needs n >= 3");
  const FamilySpec spec = FamilySpec::prism(n);
  Graph g = build_family(spec);
  constexpr Label base_u[5] = {1, 4, 5, 9, 10};
  constexpr Label base_v[5] = {2, 3, 7, 8, 11};
  std::vector<Label> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Label shift = 12 * detail::as_label(i / 5);
    u[i] = shift + base_u[i % 5];
    v[i] = shift + base_v[i % 5];
  }
  // n = 5k + j with j in {1, 4} leaves l(v_n) even; swap within the first block.
  const bool swap = n % 5 == 1 || n % 5 == 4;
  if (swap) {
    v[0] = 1;
    u[0] = 2;
    v[1] = 4;
    u[1] = 3;
  }
  HamiltonianData ham = canonical_hamiltonian(g, spec);
  detail::LabelBuilder b(std::move(g));
  for (std::size_t i = 0; i < n; ++i) {
    b.vertex(i, u[i]);
    b.vertex(n + i, v[i]);
  }
  b.cycle_and_chord(ham, 3 * detail::as_label(n));
  b.fill_remaining_edges();
  return std::move(b).finish({{"swap", swap ? 1 : 0}});
}

/// Stacked rectangular prism Y_{4,n} = C_4 x P_n, n >= 2.
inline ConstructionResult stacked_rect_prism(std::size_t n) {
  detail::require_param(n >= 2, "stacked rectangular prism needs n >= 2");
  const FamilySpec spec = FamilySpec::stacked_prism(4, n);
  Graph g = build_family(spec);
  // Columns u, v, w, x; first two layers, then +12 every two layers.
  constexpr Label base[4][2] = {{1, 9}, {2, 11}, {3, 7}, {5, 8}};
  HamiltonianData ham = canonical_hamiltonian(g, spec);
  detail::LabelBuilder b(std::move(g));
  for (std::size_t col = 0; col < 4; ++col)
    for (std::size_t i = 0; i < n; ++i)
      b.vertex(col * n + i, 12 * detail::as_label(i / 2) + base[col][i % 2]);
  const Label N = detail::as_label(n);
  b.cycle_and_chord(ham, 8 * N - 4);
  b.fill_remaining_edges();
  return std::move(b).finish();
}

/// Bistar B_{m,n}, m, n >= 1.
inline ConstructionResult bistar(std::size_t m, std::size_t n) {
  detail::require_param(m >= 1 && n >= 1, "bistar needs m, n >= 1");
  detail::LabelBuilder b(build_family(FamilySpec::bistar(m, n)));
  const Label M = detail::as_label(m);
  b.vertex(0, 1);
  b.vertex(1, 2);
  for (std::size_t i = 1; i <= m; ++i) {
    const Label I = detail::as_label(i);
    b.edge(0, 1 + i, 2 * I + 1);
    b.vertex(1 + i, 2 * I + 2);
  }
  b.edge(0, 1, 2 * M + 3);
  for (std::size_t j = 1; j <= n; ++j) {
    const Label J = detail::as_label(j);
    b.edge(1, m + 1 + j, 2 * M + 2 * J + 2);
    b.vertex(m + 1 + j, 2 * M + 2 * J + 3);
  }
  return std::move(b).finish();
}

/// Edge-disjoint paths covering every internal vertex of a tree as an interior
/// vertex. Each path starts at the smallest internal vertex not yet covered and
/// grows two walks along smallest-index unused edges, stopping at a leaf or at
/// a vertex already on an earlier path.
inline std::vector<std::vector<Vertex>> tree_path_cover(const Graph& tree) {
  if (!is_tree(tree)) throw Error(Errc::NotATree, "path cover needs a tree");
  const std::size_t n = tree.order();
  std::vector<bool> on_path(n, false);
  std::vector<bool> edge_used(tree.size(), false);
  std::vector<std::vector<Vertex>> paths;

  auto walk_from = [&](Vertex start, Vertex first) {
    std::vector<Vertex> walk{first};
    edge_used[*tree.edge_index(start, first)] = true;
    Vertex at = first;
    while (!on_path[at] && tree.degree(at) >= 2) {
      Vertex step = n;
      for (Vertex w : tree.neighbors(at)) {
        if (!edge_used[*tree.edge_index(at, w)]) {
          step = w;
          break;
        }
      }
      if (step == n) break;
      edge_used[*tree.edge_index(at, step)] = true;
      walk.push_back(step);
      at = step;
    }
    return walk;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) < 2 || on_path[v]) continue;
    const auto nbrs = tree.neighbors(v);
    // v is off every earlier path, so none of its edges is used yet.
    auto left = walk_from(v, nbrs[0]);
    auto right = walk_from(v, nbrs[1]);
    std::vector<Vertex> path(left.rbegin(), left.rend());
    path.push_back(v);
    path.insert(path.end(), right.begin(), right.end());
    for (Vertex x : path) on_path[x] = true;
    paths.push_back(std::move(path));
  }
  return paths;
}

/// Extends a prime labeling of a tree: path-cover edges get |V|+1, |V|+2, ...
/// path by path, remaining edges take the leftover labels ascending.
inline ConstructionResult extend_prime_tree(const Graph& tree, const Labeling& prime) {
  if (!is_tree(tree)) throw Error(Errc::NotATree, "input graph is not a tree");
  if (!verify_prime(tree, prime)) throw Error(Errc::NotPrimeLabeling, "input is not a prime labeling");
  const auto paths = tree_path_cover(tree);
  detail::LabelBuilder b(tree);
  for (Vertex v = 0; v < tree.order(); ++v) b.vertex(v, prime.vertex_labels[v]);
  Label next = detail::as_label(tree.order()) + 1;
  for (const auto& path : paths)
    for (std::size_t t = 0; t + 1 < path.size(); ++t) b.edge(path[t], path[t + 1], next++);
  b.fill_remaining_edges();
  return std::move(b).finish({{"paths", detail::as_label(paths.size())}});
}

}  // namespace tpl
