#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpl/tpl.hpp"

namespace tpl::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::size_t n = 0, m = 0, k = 0;
  std::optional<std::size_t> chord;
  std::string cycles;
  std::string edges;
  std::string scheme = "auto";
  std::string format = "json";
  std::string in, out;
  std::uint64_t node_budget = 100'000'000;
  std::int64_t time_budget_ms = 600'000;
  std::optional<std::uint64_t> seed;
  bool symmetry = false;
  bool prime = false;
  std::string mode = "total";
  Label bound = 0;
  std::uint64_t n_max = 1000;
  std::uint64_t x_max = 1'000'000;
};

inline std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoul(item));
  return out;
}

// "0-1,1-2,1-3"
inline std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(Errc::InvalidParameter, "edge '" + item + "' is not u-v");
    out.push_back({std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1))});
  }
  return out;
}

inline FamilySpec spec_from(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw Error(Errc::InvalidParameter, "unknown family '" + o.family + "'");
  switch (*family) {
    case Family::Helm: return FamilySpec::helm(o.n);
    case Family::CycleWithChord: return FamilySpec::cycle_with_chord(o.n, o.chord.value_or(o.k ? o.k : 3));
    case Family::Wheel: return FamilySpec::wheel(o.n);
    case Family::Snake: return FamilySpec::snake(o.k, o.n);
    case Family::Book: return FamilySpec::book(o.k, o.n);
    case Family::Complete: return FamilySpec::complete(o.n);
    case Family::Windmill: return FamilySpec::windmill(o.n, o.m);
    case Family::Friendship: return FamilySpec::friendship(o.m);
    case Family::Prism: return FamilySpec::prism(o.n);
    case Family::StackedPrism: return FamilySpec::stacked_prism(o.m, o.n);
    case Family::Grid: return FamilySpec::grid(o.m, o.n);
    case Family::Ladder: return FamilySpec::ladder(o.n);
    case Family::PathPower: return FamilySpec::path_power(o.n, o.k);
    case Family::CyclePower: return FamilySpec::cycle_power(o.n, o.k);
    case Family::Bistar: return FamilySpec::bistar(o.m, o.n);
    case Family::Path: return FamilySpec::path(o.n);
    case Family::Cycle: return FamilySpec::cycle(o.n);
    case Family::Star: return FamilySpec::star(o.n);
    case Family::Tree: return FamilySpec::tree(o.n, parse_edges(o.edges));
    case Family::Union: {
      const auto lengths = parse_list(o.cycles);
      if (lengths.empty()) throw Error(Errc::InvalidParameter, "union needs --cycles, e.g. 3,4");
      return FamilySpec::cycle_union(lengths);
    }
  }
  throw Error(Errc::InvalidParameter, "unknown family");
}

inline SearchConfig config_from(const Options& o) {
  SearchConfig cfg;
  cfg.node_budget = o.node_budget;
  cfg.time_budget = std::chrono::milliseconds(o.time_budget_ms);
  cfg.symmetry_breaking = o.symmetry;
  cfg.seed = o.seed;
  return cfg;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw IoError("cannot write " + o.out);
  file << text;
  if (!file) throw IoError("write failed: " + o.out);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Graph from --in (a graph document or one with a "graph" key) or from --family.
inline Graph input_graph(const Options& o) {
  if (o.in.empty()) return build_family(spec_from(o));
  const Json j = parse_json(read_file(o.in));
  return graph_from_json(j.contains("graph") ? j.at("graph") : j);
}

// Families without a dedicated theorem: extend a searched prime (or minimum
// coprime) labeling through a Hamiltonian cycle, else search directly.
inline ConstructionResult label_by_search(const FamilySpec& spec, const SearchConfig& cfg) {
  Graph g = build_family(spec);
  std::optional<HamiltonianData> ham;
  try {
    ham = canonical_hamiltonian(g, spec);
  } catch (const Error&) {
    ham = find_hamiltonian(g);
  }
  if (ham && ham->chord) {
    const SearchOutcome prime = find_prime(g, cfg);
    if (prime.found()) return extend_prime_hamiltonian(g, *prime.labeling, *ham);
    if (prime.status == SearchStatus::ExhaustedNoSolution && g.size() >= 2) {
      const auto pr = minimum_coprime_number(g, static_cast<Label>(g.size()) - 1, cfg);
      if (pr.value) return extend_coprime_hamiltonian(g, *pr.labeling, *pr.value, *ham);
    }
  }
  const SearchOutcome total = find_total_prime(g, cfg);
  if (!total.found())
    throw Error(Errc::UnsupportedCase, "no total prime labeling found (" +
                                           std::string(status_name(total.status)) + ")");
  return ConstructionResult{std::move(g), *total.labeling, {{"searched", 1}}};
}

inline ConstructionResult construct(const Options& o) {
  const FamilySpec spec = spec_from(o);
  switch (spec.family) {
    case Family::Helm: return helm(spec.n);
    case Family::CycleWithChord: return cycle_with_chord(spec.n, spec.k);
    case Family::Snake: return snake(spec.k, spec.n);
    case Family::Book: return book(spec.k, spec.n);
    case Family::Complete: return complete(spec.n);
    case Family::Windmill: {
      auto scheme = WindmillScheme::Auto;
      if (o.scheme == "two-copies") scheme = WindmillScheme::TwoCopies;
      else if (o.scheme == "fixed-clique") scheme = WindmillScheme::FixedClique;
      else if (o.scheme != "auto") throw Error(Errc::InvalidParameter, "unknown scheme " + o.scheme);
      if (spec.n == 3) return label_by_search(FamilySpec::friendship(spec.m), config_from(o));
      return windmill(spec.n, spec.m, scheme);
    }
    case Family::Prism: return prism(spec.n);
    case Family::StackedPrism:
      if (spec.m == 4) return stacked_rect_prism(spec.n);
      break;
    case Family::Bistar: return bistar(spec.m, spec.n);
    case Family::Tree: {
      const Graph g = build_family(spec);
      const SearchOutcome prime = find_prime(g, config_from(o));
      if (!prime.found()) throw Error(Errc::UnsupportedCase, "no prime labeling of the tree found");
      return extend_prime_tree(g, *prime.labeling);
    }
    default: break;
  }
  return label_by_search(spec, config_from(o));
}

inline int cmd_generate(const Options& o, std::ostream& out) {
  const Graph g = build_family(spec_from(o));
  emit(o, o.format == "dot" ? to_dot(g) : dump(to_json(g)), out);
  return kOk;
}

inline int cmd_label(const Options& o, std::ostream& out) {
  const ConstructionResult r = construct(o);
  emit(o, o.format == "dot" ? to_dot(r.graph, &r.labeling) : dump(to_json(r)), out);
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw Error(Errc::InvalidParameter, "verify needs --in");
  const Json j = parse_json(read_file(o.in));
  if (!j.contains("graph") || !j.contains("labeling"))
    throw Error(Errc::ParseError, "document needs \"graph\" and \"labeling\"");
  const Graph g = graph_from_json(j.at("graph"));
  const Labeling l = labeling_from_json(j.at("labeling"));
  VerificationReport report;
  if (o.mode == "total") report = verify_total_prime(g, l);
  else if (o.mode == "prime") report = verify_prime(g, l);
  else if (o.mode == "coprime") report = verify_coprime(g, l, o.bound);
  else throw Error(Errc::InvalidParameter, "unknown mode " + o.mode);
  emit(o, dump(to_json(report)), out);
  return report ? kOk : kVerifyFailed;
}

inline int cmd_search(const Options& o, std::ostream& out) {
  const Graph g = input_graph(o);
  const SearchOutcome r = o.prime ? find_prime(g, config_from(o)) : find_total_prime(g, config_from(o));
  Json j = to_json(r);
  j["graph"] = to_json(g);
  emit(o, dump(j), out);
  return kOk;
}

inline int cmd_mcn(const Options& o, std::ostream& out) {
  const Graph g = input_graph(o);
  const Label n = static_cast<Label>(g.order());
  const Label k_max = o.bound ? o.bound : std::max<Label>(2 * n + 10, n);
  const auto r = minimum_coprime_number(g, k_max, config_from(o));
  Json j = {{"status", status_name(r.status)}, {"nodes", r.nodes_explored}, {"ms", r.elapsed.count()}};
  if (r.value) {
    j["pr"] = *r.value;
    j["labeling"] = to_json(*r.labeling);
  }
  emit(o, dump(j), out);
  return kOk;
}

inline int cmd_export(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw Error(Errc::InvalidParameter, "export needs --in");
  const Json j = parse_json(read_file(o.in));
  const Graph g = graph_from_json(j.contains("graph") ? j.at("graph") : j);
  std::optional<Labeling> l;
  if (j.contains("labeling")) l = labeling_from_json(j.at("labeling"));
  if (o.format == "dot") {
    emit(o, to_dot(g, l ? &*l : nullptr), out);
  } else {
    Json doc = {{"graph", to_json(g)}};
    if (l) doc["labeling"] = to_json(*l);
    emit(o, dump(doc), out);
  }
  return kOk;
}

inline int cmd_bounds(const Options& o, std::ostream& out) {
  const CapacityReport cap = check_label_capacity_bounds(o.n_max);
  const auto pi = first_prime_count_bound_violation(17, o.x_max);
  const auto bertrand = first_bertrand_violation(4, o.x_max);
  Json j = {{"capacity", {{"holds", cap.holds}, {"checked_up_to", cap.checked_up_to}}},
            {"prime_count_lower_bound", {{"holds", !pi}, {"range", {17, o.x_max}}}},
            {"bertrand", {{"holds", !bertrand}, {"range", {4, o.x_max}}}}};
  if (cap.counterexample) j["capacity"]["counterexample"] = *cap.counterexample;
  if (pi) j["prime_count_lower_bound"]["counterexample"] = *pi;
  if (bertrand) j["bertrand"]["counterexample"] = *bertrand;
  emit(o, dump(j), out);
  return cap.holds && !pi && !bertrand ? kOk : kVerifyFailed;
}

inline void apply_sieve_limit_env() {
  const char* raw = std::getenv("TPL_SIEVE_LIMIT");
  if (!raw || !*raw) return;
  std::size_t used = 0;
  std::uint64_t cap = 0;
  try {
    cap = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || cap < 16)
    throw Error(Errc::InvalidParameter, std::string("TPL_SIEVE_LIMIT must be an integer >= 16, got ") + raw);
  default_prime_table().set_cap(cap);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total prime labelings: construct, verify, search"};
  app.require_subcommand(1);
  Options o;

  auto family_flags = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "graph family");
    sub->add_option("-n", o.n, "main size parameter");
    sub->add_option("-m", o.m, "second size parameter");
    sub->add_option("-k", o.k, "cycle length, power or chord index");
    sub->add_option("--chord", o.chord, "chord index for cycle-chord (1-based, 2 < k < n)");
    sub->add_option("--cycles", o.cycles, "cycle lengths for union, e.g. 3,4");
    sub->add_option("--edges", o.edges, "tree edges, e.g. 0-1,1-2");
  };
  auto search_flags = [&o](CLI::App* sub) {
    sub->add_option("--node-budget", o.node_budget, "maximum search nodes")->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", o.time_budget_ms, "wall-clock budget in ms")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "shuffle value order with this seed");
    sub->add_flag("--symmetry", o.symmetry, "pin label 1 to vertex 0 (vertex-transitive inputs only)");
  };
  auto format_flag = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* generate = app.add_subcommand("generate", "write a family graph");
  family_flags(generate);
  format_flag(generate);
  generate->add_option("--out", o.out);

  auto* label = app.add_subcommand("label", "construct a total prime labeling");
  family_flags(label);
  format_flag(label);
  search_flags(label);
  label->add_option("--scheme", o.scheme, "windmill scheme: auto, two-copies, fixed-clique");
  label->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "check a graph+labeling document");
  verify->add_option("--in", o.in)->required();
  verify->add_option("--mode", o.mode, "total, prime or coprime")->check(CLI::IsMember({"total", "prime", "coprime"}));
  verify->add_option("--bound", o.bound, "k for coprime mode");
  verify->add_option("--out", o.out);

  auto* search = app.add_subcommand("search", "exhaustive labeling search");
  family_flags(search);
  search_flags(search);
  search->add_option("--in", o.in, "graph JSON instead of --family");
  search->add_flag("--prime", o.prime, "search a prime labeling");
  search->add_flag("--total-prime", [&o](std::int64_t) { o.prime = false; }, "search a total prime labeling (default)");
  search->add_option("--out", o.out);

  auto* mcn = app.add_subcommand("mcn", "minimum coprime number");
  family_flags(mcn);
  search_flags(mcn);
  mcn->add_option("--in", o.in, "graph JSON instead of --family");
  mcn->add_option("--k-max", o.bound, "largest k tried");
  mcn->add_option("--out", o.out);

  auto* exp = app.add_subcommand("export", "convert a JSON document");
  exp->add_option("--in", o.in)->required();
  format_flag(exp);
  exp->add_option("--out", o.out);

  auto* bounds = app.add_subcommand("bounds", "check the prime bounds the constructions rely on");
  bounds->add_option("--n-max", o.n_max)->check(CLI::Range(4, 1'000'000));
  bounds->add_option("--x-max", o.x_max)->check(CLI::Range(17, 100'000'000));
  bounds->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    apply_sieve_limit_env();
    if (*generate) return cmd_generate(o, out);
    if (*label) return cmd_label(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*search) return cmd_search(o, out);
    if (*mcn) return cmd_mcn(o, out);
    if (*exp) return cmd_export(o, out);
    if (*bounds) return cmd_bounds(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kIo : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tpl::cli
