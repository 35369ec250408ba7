#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "tpl/error.hpp"
#include "tpl/graph.hpp"
#include "tpl/numtheory.hpp"

namespace tpl {

/// Vertex labels indexed by vertex, edge labels keyed by the (u < v) edge.
/// Prime and coprime labelings leave edge_labels empty.
struct Labeling {
  std::vector<Label> vertex_labels;
  std::map<Edge, Label> edge_labels;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

struct NonBijective {
  enum class Reason { Duplicate, OutOfRange };
  Label label = 0;
  Reason reason = Reason::Duplicate;
  friend bool operator==(const NonBijective&, const NonBijective&) = default;
};

struct AdjacentVerticesNotCoprime {
  Vertex u = 0;
  Vertex v = 0;
  Label gcd = 0;
  friend bool operator==(const AdjacentVerticesNotCoprime&,
                         const AdjacentVerticesNotCoprime&) = default;
};

struct IncidentEdgesShareFactor {
  Vertex vertex = 0;
  Label gcd = 0;
  friend bool operator==(const IncidentEdgesShareFactor&,
                         const IncidentEdgesShareFactor&) = default;
};

using Violation = std::variant<NonBijective, AdjacentVerticesNotCoprime, IncidentEdgesShareFactor>;

inline std::string describe(const Violation& violation) {
  struct Visitor {
    std::string operator()(const NonBijective& x) const {
      return std::string(x.reason == NonBijective::Reason::Duplicate ? "duplicate" : "out-of-range") +
             " label " + std::to_string(x.label);
    }
    std::string operator()(const AdjacentVerticesNotCoprime& x) const {
      return "adjacent vertices " + std::to_string(x.u) + "," + std::to_string(x.v) +
             " share gcd " + std::to_string(x.gcd);
    }
    std::string operator()(const IncidentEdgesShareFactor& x) const {
      return "edges at vertex " + std::to_string(x.vertex) + " share gcd " + std::to_string(x.gcd);
    }
  };
  return std::visit(Visitor{}, violation);
}

struct VerificationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  explicit operator bool() const { return valid(); }
};

namespace detail {

// Flags out-of-range labels and every repeated value (once per extra copy).
inline void check_injective(std::span<const Label> labels, Label max_label,
                            VerificationReport& report) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (Label x : labels) {
    if (x < 1 || x > max_label) {
      report.violations.push_back(NonBijective{x, NonBijective::Reason::OutOfRange});
      continue;
    }
    if (seen[static_cast<std::size_t>(x)]++)
      report.violations.push_back(NonBijective{x, NonBijective::Reason::Duplicate});
  }
}

inline void check_vertex_coprime(const Graph& g, const Labeling& l, VerificationReport& report) {
  for (const auto& e : g.edges()) {
    const Label d = std::gcd(l.vertex_labels[e.u], l.vertex_labels[e.v]);
    if (d != 1) report.violations.push_back(AdjacentVerticesNotCoprime{e.u, e.v, d});
  }
}

inline void require_vertex_count(const Graph& g, const Labeling& l) {
  if (l.vertex_labels.size() != g.order())
    throw Error(Errc::SizeMismatch, "expected " + std::to_string(g.order()) + " vertex labels, got " +
                                        std::to_string(l.vertex_labels.size()));
}

}  // namespace detail

/// Checks bijectivity onto {1..n+m}, coprime labels across every edge, and
/// gcd 1 over the incident edge labels of every vertex of degree >= 2. All
/// violations are reported, not only the first.
inline VerificationReport verify_total_prime(const Graph& g, const Labeling& l) {
  detail::require_vertex_count(g, l);
  if (l.edge_labels.size() != g.size())
    throw Error(Errc::SizeMismatch, "expected " + std::to_string(g.size()) + " edge labels, got " +
                                        std::to_string(l.edge_labels.size()));
  std::vector<Label> edge_label(g.size());
  for (const auto& [edge, label] : l.edge_labels) {
    const auto idx = g.edge_index(edge.u, edge.v);
    if (!idx || edge.u > edge.v)
      throw Error(Errc::SizeMismatch, "label given for non-edge " + std::to_string(edge.u) + "," +
                                          std::to_string(edge.v));
    edge_label[*idx] = label;
  }

  VerificationReport report;
  std::vector<Label> all = l.vertex_labels;
  all.insert(all.end(), edge_label.begin(), edge_label.end());
  detail::check_injective(all, static_cast<Label>(g.order() + g.size()), report);
  detail::check_vertex_coprime(g, l, report);

  std::vector<Label> incident_gcd(g.order(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    incident_gcd[e.u] = std::gcd(incident_gcd[e.u], edge_label[i]);
    incident_gcd[e.v] = std::gcd(incident_gcd[e.v], edge_label[i]);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2 && incident_gcd[v] != 1)
      report.violations.push_back(IncidentEdgesShareFactor{v, incident_gcd[v]});
  return report;
}

/// Vertex labels must be exactly {1..n} with coprime labels across edges.
inline VerificationReport verify_prime(const Graph& g, const Labeling& l) {
  detail::require_vertex_count(g, l);
  if (!l.edge_labels.empty()) throw Error(Errc::SizeMismatch, "prime labeling carries edge labels");
  VerificationReport report;
  detail::check_injective(l.vertex_labels, static_cast<Label>(g.order()), report);
  detail::check_vertex_coprime(g, l, report);
  return report;
}

/// Vertex labels must be distinct values from {1..k}, k >= n, coprime across edges.
inline VerificationReport verify_coprime(const Graph& g, const Labeling& l, Label k) {
  detail::require_vertex_count(g, l);
  if (!l.edge_labels.empty())
    throw Error(Errc::SizeMismatch, "coprime labeling carries edge labels");
  if (k < static_cast<Label>(g.order()))
    throw Error(Errc::BoundTooSmall, "bound " + std::to_string(k) + " below vertex count");
  VerificationReport report;
  detail::check_injective(l.vertex_labels, k, report);
  detail::check_vertex_coprime(g, l, report);
  return report;
}

}  // namespace tpl
