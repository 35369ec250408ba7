#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tpl/constructions.hpp"
#include "tpl/error.hpp"
#include "tpl/graph.hpp"
#include "tpl/labeling.hpp"
#include "tpl/search.hpp"

namespace tpl {

using Json = nlohmann::json;

/// {"n": 4, "edges": [[0,1],...], "roles": {"center": 0, "cycle": [1,2,3]}}
/// Single-vertex roles are written as scalars.
inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  Json roles = Json::object();
  for (const auto& [name, members] : g.roles()) {
    if (members.size() == 1)
      roles[name] = members.front();
    else
      roles[name] = members;
  }
  return {{"n", g.order()}, {"edges", std::move(edges)}, {"roles", std::move(roles)}};
}

inline Json to_json(const Labeling& l) {
  Json edges = Json::array();
  for (const auto& [e, label] : l.edge_labels) edges.push_back({{e.u, e.v}, label});
  return {{"vertex_labels", l.vertex_labels}, {"edge_labels", std::move(edges)}};
}

inline Json to_json(const ConstructionResult& r) {
  return {{"graph", to_json(r.graph)}, {"labeling", to_json(r.labeling)}, {"notes", r.notes}};
}

inline Json to_json(const SearchOutcome& o) {
  Json j = {{"status", status_name(o.status)}, {"nodes", o.nodes_explored}, {"ms", o.elapsed.count()}};
  if (o.labeling) j["labeling"] = to_json(*o.labeling);
  return j;
}

inline Json to_json(const VerificationReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) v.push_back(describe(x));
  return {{"valid", report.valid()}, {"violations", std::move(v)}};
}

namespace detail {

template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline Graph graph_from_json(const Json& j) {
  return detail::parsing("graph", [&] {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge must be a pair");
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    Graph::Roles roles;
    if (j.contains("roles"))
      for (const auto& [name, value] : j.at("roles").items())
        roles[name] = value.is_array() ? value.get<std::vector<Vertex>>()
                                       : std::vector<Vertex>{value.get<Vertex>()};
    return Graph(n, std::move(edges), std::move(roles));
  });
}

inline Labeling labeling_from_json(const Json& j) {
  return detail::parsing("labeling", [&] {
    Labeling l;
    l.vertex_labels = j.at("vertex_labels").get<std::vector<Label>>();
    if (j.contains("edge_labels")) {
      for (const auto& entry : j.at("edge_labels")) {
        const auto& e = entry.at(0);
        if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge key must be a pair");
        const Edge key = make_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
        if (!l.edge_labels.emplace(key, entry.at(1).get<Label>()).second)
          throw Error(Errc::ParseError, "edge labeled twice");
      }
    }
    return l;
  });
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

/// Graphviz rendering. Vertex labels go on nodes and edge labels on edges
/// when a labeling is given.
inline std::string to_dot(const Graph& g, const Labeling* l = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (l && v < l->vertex_labels.size()) out << " [label=\"" << l->vertex_labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (l) {
      if (auto it = l->edge_labels.find(e); it != l->edge_labels.end())
        out << " [label=\"" << it->second << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tpl
