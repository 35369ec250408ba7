#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tpl/error.hpp"
#include "tpl/families.hpp"
#include "tpl/graph.hpp"
#include "tpl/labeling.hpp"
#include "tpl/numtheory.hpp"

namespace tpl {

struct SearchConfig {
  std::uint64_t node_budget = 100'000'000;
  std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
  // Forbids label 1 on every vertex but vertex 0. Only sound for
  // vertex-transitive inputs.
  bool symmetry_breaking = false;
  // Shuffles the value order when set.
  std::optional<std::uint64_t> seed;
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

inline std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNoSolution: return "ExhaustedNoSolution";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::optional<Labeling> labeling;  // set iff Found
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  bool found() const { return status == SearchStatus::Found; }
};

namespace detail {

inline void validate(const SearchConfig& cfg) {
  if (cfg.node_budget == 0) throw Error(Errc::InvalidParameter, "node budget must be positive");
  if (cfg.time_budget.count() <= 0) throw Error(Errc::InvalidParameter, "time budget must be positive");
}

// Independence number of induced subgraphs given as vertex masks (n <= 64).
class IndependenceOracle {
 public:
  explicit IndependenceOracle(const Graph& g) {
    if (g.order() > 64) return;
    nbr_.assign(g.order(), 0);
    for (const auto& e : g.edges()) {
      nbr_[e.u] |= std::uint64_t{1} << e.v;
      nbr_[e.v] |= std::uint64_t{1} << e.u;
    }
    exact_ = true;
  }

  bool exact() const { return exact_; }

  int alpha(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t rest = mask & ~bit;
    int best;
    if (std::popcount(nbr_[v] & rest) <= 1) {
      // Some maximum independent set contains a vertex of degree <= 1.
      best = 1 + alpha(rest & ~nbr_[v]);
    } else {
      best = std::max(alpha(rest), 1 + alpha(rest & ~nbr_[v]));
    }
    if (memo_.size() >= kMemoCap) memo_.clear();
    memo_.emplace(mask, best);
    return best;
  }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;
  std::vector<std::uint64_t> nbr_;
  std::unordered_map<std::uint64_t, int> memo_;
  bool exact_ = false;
};

enum class Mode { Total, Coprime };

// Backtracking over an injective assignment of values 1..max_label to the
// vertices (and, in Total mode, edges) of g.
class Engine {
 public:
  Engine(const Graph& g, Mode mode, Label max_label, const SearchConfig& cfg)
      : g_(g), mode_(mode), max_label_(max_label), cfg_(cfg), alpha_(g) {
    validate(cfg);
    const std::size_t n = g.order(), m = g.size();
    vlabel_.assign(n, 0);
    elabel_.assign(m, 0);
    used_.assign(static_cast<std::size_t>(max_label) + 1, 0);
    inc_gcd_.assign(n, 0);
    open_edges_.assign(n, 0);
    odd_edges_.assign(n, 0);
    even_nbrs_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) open_edges_[v] = g.degree(v);
    for (Label x = 1; x <= max_label; ++x) (x % 2 ? odd_unused_ : even_unused_)++;
    values_.resize(static_cast<std::size_t>(max_label));
    std::iota(values_.begin(), values_.end(), Label{1});
    if (cfg.seed) {
      std::mt19937_64 rng(*cfg.seed);
      std::shuffle(values_.begin(), values_.end(), rng);
    }
    order_variables();
  }

  SearchOutcome run() {
    start_ = std::chrono::steady_clock::now();
    SearchOutcome out;
    const std::size_t vars = vorder_.size() + (mode_ == Mode::Total ? eorder_.size() : 0);
    if (static_cast<Label>(vars) > max_label_) {
      out.status = SearchStatus::ExhaustedNoSolution;
    } else {
      const int r = feasible() ? search(0) : (++nodes_, 0);
      out.status = r > 0 ? SearchStatus::Found
                         : r == 0 ? SearchStatus::ExhaustedNoSolution : SearchStatus::BudgetExceeded;
    }
    if (out.status == SearchStatus::Found) out.labeling = labeling();
    out.nodes_explored = nodes_;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    return out;
  }

 private:
  void order_variables() {
    const std::size_t n = g_.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_nbrs(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = n;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || g_.degree(v) > g_.degree(best) ||
            (g_.degree(v) == g_.degree(best) && placed_nbrs[v] > placed_nbrs[best]))
          best = v;
      }
      placed[best] = true;
      vorder_.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++placed_nbrs[w];
    }
    if (mode_ != Mode::Total) return;
    std::vector<bool> listed(g_.size(), false);
    for (Vertex v : vorder_)
      for (Vertex w : g_.neighbors(v)) {
        const std::size_t idx = *g_.edge_index(v, w);
        if (!listed[idx]) {
          listed[idx] = true;
          eorder_.push_back(idx);
        }
      }
  }

  Labeling labeling() const {
    Labeling l;
    l.vertex_labels = vlabel_;
    if (mode_ == Mode::Total)
      for (std::size_t i = 0; i < g_.size(); ++i) l.edge_labels.emplace(g_.edges()[i], elabel_[i]);
    return l;
  }

  bool over_budget() {
    if (nodes_ > cfg_.node_budget) return true;
    if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() - start_ > cfg_.time_budget) return true;
    return false;
  }

  void take(Label x) {
    used_[static_cast<std::size_t>(x)] = 1;
    (x % 2 ? odd_unused_ : even_unused_)--;
  }
  void release(Label x) {
    used_[static_cast<std::size_t>(x)] = 0;
    (x % 2 ? odd_unused_ : even_unused_)++;
  }

  // Lower bound on odd values the unassigned vertices still need: even
  // values go to an independent set of vertices with no even neighbor.
  std::size_t odd_needed_by_vertices(std::size_t depth_v) {
    const std::size_t unassigned = vorder_.size() - depth_v;
    if (unassigned == 0) return 0;
    std::size_t alpha;
    if (alpha_.exact()) {
      std::uint64_t mask = 0;
      for (std::size_t i = depth_v; i < vorder_.size(); ++i)
        if (even_nbrs_[vorder_[i]] == 0) mask |= std::uint64_t{1} << vorder_[i];
      alpha = static_cast<std::size_t>(alpha_.alpha(mask));
    } else {
      // alpha <= |eligible| - |M| for any matching M.
      std::vector<char> eligible(g_.order(), 0), matched(g_.order(), 0);
      std::size_t count = 0;
      for (std::size_t i = depth_v; i < vorder_.size(); ++i)
        if (even_nbrs_[vorder_[i]] == 0) eligible[vorder_[i]] = 1, ++count;
      std::size_t matching = 0;
      for (const auto& e : g_.edges())
        if (eligible[e.u] && eligible[e.v] && !matched[e.u] && !matched[e.v])
          matched[e.u] = matched[e.v] = 1, ++matching;
      alpha = count - matching;
    }
    return unassigned - std::min(alpha, even_unused_);
  }

  // Lower bound on odd values the unassigned edges still need: every vertex
  // of degree >= 2 without an odd incident edge needs one, and one odd edge
  // serves at most two such vertices of the same component.
  std::size_t odd_needed_by_edges() {
    const std::size_t n = g_.order();
    std::vector<char> state(n, 0);  // 1 = needs an odd edge, 2 = visited
    bool any = false;
    for (Vertex v = 0; v < n; ++v)
      if (g_.degree(v) >= 2 && odd_edges_[v] == 0) state[v] = 1, any = true;
    if (!any) return 0;
    std::size_t need = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
      if (state[s] != 1) continue;
      std::size_t size = 0;
      stack.push_back(s);
      state[s] = 2;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++size;
        for (Vertex w : g_.neighbors(v)) {
          if (state[w] != 1 || elabel_[*g_.edge_index(v, w)] != 0) continue;
          state[w] = 2;
          stack.push_back(w);
        }
      }
      need += (size + 1) / 2;
    }
    return need;
  }

  bool feasible() {
    const std::size_t depth_v = assigned_vertices_;
    std::size_t need = odd_needed_by_vertices(depth_v);
    if (mode_ == Mode::Total) need += odd_needed_by_edges();
    return need <= odd_unused_;
  }

  // 1 = found, 0 = subtree exhausted, -1 = budget hit.
  int search(std::size_t depth) {
    ++nodes_;
    if (over_budget()) return -1;
    if (depth < vorder_.size()) return assign_vertex(depth);
    if (mode_ == Mode::Total && depth < vorder_.size() + eorder_.size()) return assign_edge(depth);
    return 1;
  }

  int assign_vertex(std::size_t depth) {
    const Vertex v = vorder_[depth];
    for (Label x : values_) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      if (cfg_.symmetry_breaking && x == 1 && v != 0) continue;
      bool ok = true;
      for (Vertex w : g_.neighbors(v))
        if (vlabel_[w] != 0 && std::gcd(x, vlabel_[w]) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      vlabel_[v] = x;
      take(x);
      ++assigned_vertices_;
      if (x % 2 == 0)
        for (Vertex w : g_.neighbors(v)) ++even_nbrs_[w];
      const int r = feasible() ? search(depth + 1) : 0;
      if (r != 0) return r;
      if (x % 2 == 0)
        for (Vertex w : g_.neighbors(v)) --even_nbrs_[w];
      --assigned_vertices_;
      release(x);
      vlabel_[v] = 0;
    }
    return 0;
  }

  bool closes_badly(Vertex v) const {
    return open_edges_[v] == 0 && g_.degree(v) >= 2 && inc_gcd_[v] != 1;
  }

  int assign_edge(std::size_t depth) {
    const std::size_t idx = eorder_[depth - vorder_.size()];
    const Edge e = g_.edges()[idx];
    for (Label x : values_) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      const Label gu = inc_gcd_[e.u], gv = inc_gcd_[e.v];
      inc_gcd_[e.u] = std::gcd(gu, x);
      inc_gcd_[e.v] = std::gcd(gv, x);
      --open_edges_[e.u];
      --open_edges_[e.v];
      int r = 0;
      if (!closes_badly(e.u) && !closes_badly(e.v)) {
        elabel_[idx] = x;
        take(x);
        if (x % 2) ++odd_edges_[e.u], ++odd_edges_[e.v];
        r = feasible() ? search(depth + 1) : 0;
        if (r != 0) return r;
        if (x % 2) --odd_edges_[e.u], --odd_edges_[e.v];
        release(x);
        elabel_[idx] = 0;
      }
      ++open_edges_[e.u];
      ++open_edges_[e.v];
      inc_gcd_[e.u] = gu;
      inc_gcd_[e.v] = gv;
    }
    return 0;
  }

  const Graph& g_;
  Mode mode_;
  Label max_label_;
  SearchConfig cfg_;
  IndependenceOracle alpha_;

  std::vector<Vertex> vorder_;
  std::vector<std::size_t> eorder_;
  std::vector<Label> values_;
  std::vector<Label> vlabel_, elabel_;
  std::vector<char> used_;
  std::vector<Label> inc_gcd_;
  std::vector<std::size_t> open_edges_, odd_edges_, even_nbrs_;
  std::size_t odd_unused_ = 0, even_unused_ = 0;
  std::size_t assigned_vertices_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

inline SearchOutcome checked(SearchOutcome out, const Graph& g, Mode mode, Label k) {
  if (!out.found()) return out;
  const auto report = mode == Mode::Total ? verify_total_prime(g, *out.labeling)
                                          : verify_coprime(g, *out.labeling, k);
  if (!report) throw std::logic_error("search produced an invalid labeling: " + describe(report.violations[0]));
  return out;
}

}  // namespace detail

/// Exhaustive search for a total prime labeling.
inline SearchOutcome find_total_prime(const Graph& g, const SearchConfig& cfg = {}) {
  const Label total = static_cast<Label>(g.order() + g.size());
  detail::Engine engine(g, detail::Mode::Total, total, cfg);
  return detail::checked(engine.run(), g, detail::Mode::Total, total);
}

/// Exhaustive search for a coprime labeling into {1..k}.
inline SearchOutcome find_coprime(const Graph& g, Label k, const SearchConfig& cfg = {}) {
  if (k < static_cast<Label>(g.order()))
    throw Error(Errc::BoundTooSmall, "bound " + std::to_string(k) + " below vertex count");
  detail::Engine engine(g, detail::Mode::Coprime, k, cfg);
  return detail::checked(engine.run(), g, detail::Mode::Coprime, k);
}

/// Exhaustive search for a prime labeling (coprime with k = n).
inline SearchOutcome find_prime(const Graph& g, const SearchConfig& cfg = {}) {
  return find_coprime(g, static_cast<Label>(g.order()), cfg);
}

struct MinimumCoprimeOutcome {
  SearchStatus status = SearchStatus::BudgetExceeded;  // Found or BudgetExceeded
  std::optional<Label> value;
  std::optional<Labeling> labeling;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Smallest k in [n, k_max] admitting a coprime labeling. The node and time
/// budgets cover the whole scan.
inline MinimumCoprimeOutcome minimum_coprime_number(const Graph& g, Label k_max,
                                                    const SearchConfig& cfg = {}) {
  detail::validate(cfg);
  const Label n = static_cast<Label>(g.order());
  if (k_max < n) throw Error(Errc::InvalidParameter, "k_max below vertex count");
  MinimumCoprimeOutcome out;
  out.status = SearchStatus::ExhaustedNoSolution;
  const auto start = std::chrono::steady_clock::now();
  for (Label k = n; k <= k_max; ++k) {
    SearchConfig step = cfg;
    step.node_budget = cfg.node_budget - out.nodes_explored;
    step.time_budget = cfg.time_budget - std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - start);
    if (step.node_budget == 0 || step.time_budget.count() <= 0) {
      out.status = SearchStatus::BudgetExceeded;
      break;
    }
    const SearchOutcome r = find_coprime(g, k, step);
    out.nodes_explored += r.nodes_explored;
    if (r.status == SearchStatus::ExhaustedNoSolution) continue;
    out.status = r.status;
    if (r.found()) {
      out.value = k;
      out.labeling = r.labeling;
    }
    break;
  }
  out.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (!out.value && out.status != SearchStatus::BudgetExceeded)
    throw Error(Errc::NotFoundWithinBound, "no coprime labeling with k <= " + std::to_string(k_max));
  return out;
}

enum class CertificateVerdict { Infeasible, Inconclusive };

struct UnionC3Certificate {
  CertificateVerdict verdict = CertificateVerdict::Inconclusive;
  std::uint64_t needed_odd = 0;     // odd labels the m triangles need
  std::uint64_t available_odd = 0;  // odd labels among the largest possible label set
  std::uint64_t threshold = 0;      // Infeasible for every m above this
};

/// Parity count for G u mC_3 with |V(G)| = n. Each triangle needs two odd
/// vertex labels and two odd edge labels; G contributes at most n(n+1)/2
/// vertices and edges.
inline UnionC3Certificate union_c3_infeasibility_certificate(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 1) throw Error(Errc::InvalidParameter, "certificate needs n >= 2 and m >= 1");
  UnionC3Certificate c;
  const std::uint64_t g_max = n * (n + 1) / 2;
  c.needed_odd = 4 * m;
  c.available_odd = (6 * m + g_max + 1) / 2;
  c.threshold = g_max;
  c.verdict = c.needed_odd > c.available_odd ? CertificateVerdict::Infeasible
                                             : CertificateVerdict::Inconclusive;
  return c;
}

/// H = G u G for G the disjoint union of cycles of the given lengths.
inline Graph doubled_union_reduction(std::span<const std::size_t> cycles) {
  if (cycles.empty()) throw Error(Errc::InvalidParameter, "no cycles given");
  for (std::size_t len : cycles)
    if (len < 3) throw Error(Errc::InvalidParameter, "cycle lengths must be >= 3");
  std::vector<std::size_t> twice(cycles.begin(), cycles.end());
  twice.insert(twice.end(), cycles.begin(), cycles.end());
  return build_family(FamilySpec::cycle_union(twice));
}

/// Maps a total prime labeling of a union of cycles G to a prime labeling of
/// G u G: the first copy keeps the vertex labels, vertex j of the second copy
/// takes the label of edge v_j v_{j+1}.
inline Labeling transport_to_doubled(std::span<const std::size_t> cycles, const Labeling& total) {
  std::size_t n = 0;
  for (std::size_t len : cycles) n += len;
  if (total.vertex_labels.size() != n || total.edge_labels.size() != n)
    throw Error(Errc::SizeMismatch, "labeling does not match the cycle union");
  Labeling out;
  out.vertex_labels = total.vertex_labels;
  out.vertex_labels.resize(2 * n);
  std::size_t offset = 0;
  for (std::size_t len : cycles) {
    for (std::size_t j = 0; j < len; ++j) {
      const Edge e = make_edge(offset + j, offset + (j + 1) % len);
      const auto it = total.edge_labels.find(e);
      if (it == total.edge_labels.end()) throw Error(Errc::SizeMismatch, "missing cycle edge label");
      out.vertex_labels[n + offset + j] = it->second;
    }
    offset += len;
  }
  return out;
}

/// Backtracking search for a Hamiltonian cycle that has a chord at some
/// vertex, normalized so the chord leaves cycle position 0. Returns nullopt
/// when none exists or the node budget runs out.
inline std::optional<HamiltonianData> find_hamiltonian(const Graph& g,
                                                       std::uint64_t node_budget = 10'000'000) {
  const std::size_t n = g.order();
  if (n < 4 || g.size() <= n) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<bool> on(n, false);
  on[0] = true;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  auto extend = [&](auto&& self) -> bool {
    if (++nodes > node_budget) {
      out_of_budget = true;
      return false;
    }
    if (path.size() == n) return g.has_edge(path.back(), 0);
    for (Vertex w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = true;
      path.push_back(w);
      if (self(self)) return true;
      if (out_of_budget) return false;
      path.pop_back();
      on[w] = false;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return normalize_hamiltonian(g, path);
}

}  // namespace tpl
