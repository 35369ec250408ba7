// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tpl/tpl.hpp"

using namespace tpl;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string ns(std::size_t n) { return std::to_string(n); }

// Every instance of the constructor grid, with a name for reporting.
void for_each_grid_instance(const std::function<void(const std::string&, const ConstructionResult&)>& f) {
  for (std::size_t n = 3; n <= 200; ++n) f("helm " + ns(n), helm(n));
  for (std::size_t n = 4; n <= 200; ++n)
    for (std::size_t k = 3; k < n; ++k) f("cycle_with_chord " + ns(n) + "," + ns(k), cycle_with_chord(n, k));
  for (std::size_t k = 3; k <= 12; ++k)
    for (std::size_t n = 2; n <= 12; ++n) f("snake " + ns(k) + "," + ns(n), snake(k, n));
  for (std::size_t k = 3; k <= 11; ++k)
    for (std::size_t n = 3; n <= 11; ++n) f("book " + ns(k) + "," + ns(n), book(k, n));
  for (std::size_t n = 4; n <= 60; ++n) f("complete " + ns(n), complete(n));
  for (std::size_t n = 4; n <= 40; ++n) {
    f("windmill " + ns(n) + ",2", windmill(n, 2));
    f("windmill two-copies " + ns(n) + ",2", windmill(n, 2, WindmillScheme::TwoCopies));
  }
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::size_t m = 2; m <= 40; ++m) f("windmill " + ns(n) + "," + ns(m), windmill(n, m));
  for (std::size_t n = 3; n <= 300; ++n) f("prism " + ns(n), prism(n));
  for (std::size_t n = 2; n <= 200; ++n) f("stacked_rect_prism " + ns(n), stacked_rect_prism(n));
  for (std::size_t m = 1; m <= 40; ++m)
    for (std::size_t n = 1; n <= 40; ++n) f("bistar " + ns(m) + "," + ns(n), bistar(m, n));
}

Verdict constructor_grid() {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t instances = 0;
  std::set<Label> book_cases, prism_swaps;
  std::set<std::size_t> prism_residues;
  for_each_grid_instance([&](const std::string& name, const ConstructionResult& r) {
    ++instances;
    if (!verify_total_prime(r.graph, r.labeling)) v.fail(name);
    if (name.rfind("book", 0) == 0) book_cases.insert(r.notes.at("case"));
    if (name.rfind("prism", 0) == 0) {
      prism_swaps.insert(r.notes.at("swap"));
      prism_residues.insert(r.graph.order() / 2 % 5);
    }
  });
  const double secs = seconds_since(t0);
  if (book_cases.size() != 2) v.fail("book parity cases not both exercised");
  if (prism_swaps.size() != 2) v.fail("prism swap branches not both exercised");
  if (prism_residues.size() != 5) v.fail("prism residues mod 5 incomplete");
  if (secs > 60.0) v.fail("grid took longer than 60 s");
  v.detail << instances << " instances, " << secs << " s";
  return v;
}

Verdict figures() {
  Verdict v;
  const std::vector<std::pair<std::string, std::function<ConstructionResult()>>> cases{
      {"H_4", [] { return helm(4); }},
      {"C_9^+", [] { return cycle_with_chord(9, 5); }},
      {"S_{5,3}", [] { return snake(5, 3); }},
      {"B_5^3", [] { return book(5, 3); }},
      {"K_6", [] { return complete(6); }},
      {"K_4^(3)", [] { return windmill(4, 3); }},
      {"P_2xC_12", [] { return prism(12); }},
      {"Y_{4,4}", [] { return stacked_rect_prism(4); }},
      {"B_{4,5}", [] { return bistar(4, 5); }},
  };
  for (const auto& [name, make] : cases) {
    const auto r = make();
    if (!verify_total_prime(r.graph, r.labeling) || !oracle::is_total_prime(r.graph, r.labeling)) v.fail(name);
  }
  v.detail << cases.size() << " figure instances";
  return v;
}

Verdict nonexistence() {
  Verdict v;
  SearchConfig cfg;
  cfg.node_budget = 100'000'000;
  const auto check = [&](const std::string& name, const Graph& g, SearchStatus want) {
    const auto out = find_total_prime(g, cfg);
    v.detail << name << "=" << status_name(out.status) << "(" << out.nodes_explored << " nodes) ";
    if (out.status != want) v.fail(name);
  };
  for (std::size_t n : {3, 5, 7}) check("C_" + ns(n), cycle_graph(n), SearchStatus::ExhaustedNoSolution);
  for (const auto& lengths : {std::vector<std::size_t>{3, 3}, std::vector<std::size_t>{3, 4}})
    check("C_3uC_" + ns(lengths[1]), build_family(FamilySpec::cycle_union(lengths)), SearchStatus::ExhaustedNoSolution);
  for (std::size_t n : {4, 6, 8}) check("C_" + ns(n), cycle_graph(n), SearchStatus::Found);
  return v;
}

struct PrCase {
  std::string name;
  FamilySpec spec;
  Label expected;
};

std::vector<PrCase> pr_cases() {
  return {{"Y_{3,2}", FamilySpec::stacked_prism(3, 2), 7},  {"Y_{3,3}", FamilySpec::stacked_prism(3, 3), 11},
          {"Y_{5,2}", FamilySpec::stacked_prism(5, 2), 11}, {"P_6^2", FamilySpec::path_power(6, 2), 7},
          {"P_8^2", FamilySpec::path_power(8, 2), 9},       {"C_6^2", FamilySpec::cycle_power(6, 2), 7},
          {"C_7^2", FamilySpec::cycle_power(7, 2), 9},      {"P_8^3", FamilySpec::path_power(8, 3), 11},
          {"C_8^3", FamilySpec::cycle_power(8, 3), 11}};
}

Verdict minimum_coprime() {
  Verdict v;
  SearchConfig cfg;
  cfg.node_budget = 100'000'000;
  for (const auto& c : pr_cases()) {
    const Graph g = build_family(c.spec);
    const auto out = minimum_coprime_number(g, 4 * static_cast<Label>(g.order()), cfg);
    const Label brute = oracle::minimum_coprime(g);
    v.detail << c.name << "=" << (out.value ? std::to_string(*out.value) : "?") << " ";
    if (!out.value || *out.value != c.expected || brute != c.expected) v.fail(c.name);
    else if (!verify_coprime(g, *out.labeling, c.expected)) v.fail(c.name + " labeling");
  }
  return v;
}

Verdict extensions() {
  Verdict v;
  std::size_t count = 0;
  const auto via_hamiltonian = [&](const std::string& name, const FamilySpec& spec) {
    const Graph g = build_family(spec);
    const auto ham = canonical_hamiltonian(g, spec);
    const auto pr = minimum_coprime_number(g, 4 * static_cast<Label>(g.order()));
    if (!pr.value) return v.fail(name + " search");
    const auto r = *pr.value == static_cast<Label>(g.order())
                       ? extend_prime_hamiltonian(g, *pr.labeling, ham)
                       : extend_coprime_hamiltonian(g, *pr.labeling, *pr.value, ham);
    ++count;
    if (!verify_total_prime(r.graph, r.labeling)) v.fail(name);
  };
  try {
    for (std::size_t n = 2; n <= 8; ++n) via_hamiltonian("L_" + ns(n), FamilySpec::ladder(n));
    for (std::size_t n = 2; n <= 6; ++n) via_hamiltonian("P_2xP_" + ns(n), FamilySpec::grid(2, n));
    for (const auto& c : pr_cases())
      if (c.spec.family != Family::StackedPrism) via_hamiltonian(c.name, c.spec);
    std::size_t trees = 0;
    for (std::size_t n = 1; n <= 10; ++n)
      for (const auto& edges : oracle::trees(n)) {
        const Graph t(n, edges);
        const auto prime = find_prime(t);
        if (!prime.found()) {
          v.fail("tree search on " + ns(n) + " vertices");
          continue;
        }
        const auto r = extend_prime_tree(t, *prime.labeling);
        ++trees;
        if (!verify_total_prime(r.graph, r.labeling)) v.fail("tree on " + ns(n) + " vertices");
      }
    if (oracle::trees(10).size() != 106) v.fail("tree enumeration on 10 vertices");
    v.detail << count << " Hamiltonian extensions, " << trees << " trees on <= 10 vertices";
  } catch (const std::exception& e) {
    v.fail(e.what());
  }
  return v;
}

Verdict bounds() {
  Verdict v;
  constexpr std::uint64_t kMax = 1'000'000;
  const auto cap = check_label_capacity_bounds(1000);
  if (!cap.holds) v.fail("capacity bound at n=" + std::to_string(*cap.counterexample));
  if (first_prime_count_bound_violation(17, kMax)) v.fail("prime count bound");
  if (first_bertrand_violation(4, kMax)) v.fail("largest prime below x");

  // Independent sieve for the same two ranges.
  std::vector<bool> composite(kMax + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t p = 2; p * p <= kMax; ++p)
    if (!composite[p])
      for (std::uint64_t q = p * p; q <= kMax; q += p) composite[q] = true;
  std::uint64_t pi = 0, last = 0;
  for (std::uint64_t x = 2; x <= kMax; ++x) {
    if (!composite[x]) {
      ++pi;
      last = x;
    }
    const double xd = static_cast<double>(x);
    if (x >= 17 && !(static_cast<double>(pi) > xd / std::log(xd))) v.fail("sieve: prime count at " + std::to_string(x));
    if (x >= 4 && 2 * last <= x) v.fail("sieve: largest prime at " + std::to_string(x));
  }
  v.detail << "capacity to " << cap.checked_up_to << ", prime bounds to " << kMax;
  return v;
}

Verdict certificate() {
  Verdict v;
  for (const auto& [n, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 4}, {3, 7}, {4, 11}, {5, 16}})
    if (union_c3_infeasibility_certificate(n, m).verdict != CertificateVerdict::Infeasible)
      v.fail("(" + std::to_string(n) + "," + std::to_string(m) + ") not Infeasible");
  if (union_c3_infeasibility_certificate(5, 2).verdict != CertificateVerdict::Inconclusive) v.fail("(5,2) not Inconclusive");
  std::size_t checked = 0;
  for (std::uint64_t n = 2; n <= 60; ++n)
    for (std::uint64_t m = 1; m <= 400; ++m) {
      const auto c = union_c3_infeasibility_certificate(n, m);
      const std::uint64_t t = n * (n + 1) / 2;
      const bool direct = c.needed_odd > c.available_odd;
      if (c.verdict == CertificateVerdict::Infeasible && !(m > t || direct))
        v.fail("(" + std::to_string(n) + "," + std::to_string(m) + ") violates the implication");
      if (m > t && c.verdict != CertificateVerdict::Infeasible) v.fail("threshold not honoured");
      ++checked;
    }
  v.detail << checked << " (n,m) pairs checked";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  std::size_t small = 0;
  for_each_grid_instance([&](const std::string& name, const ConstructionResult& r) {
    if (r.graph.order() + r.graph.size() > 16) return;
    ++small;
    const auto out = find_total_prime(r.graph);
    if (!out.found() || !oracle::is_total_prime(r.graph, *out.labeling)) v.fail(name);
  });
  v.detail << small << " instances with |V|+|E| <= 16";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 constructor soundness grid", constructor_grid},
      {"2 figure reproduction", figures},
      {"3 exhaustive non-existence", nonexistence},
      {"4 minimum coprime cross-checks", minimum_coprime},
      {"5 extension end-to-end", extensions},
      {"6 bound suite", bounds},
      {"7 certificate soundness", certificate},
      {"8 oracle agreement", oracle_agreement},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.str().c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
