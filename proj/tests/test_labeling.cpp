#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tpl/families.hpp"
#include "tpl/labeling.hpp"

using namespace tpl;

namespace {

Labeling total(std::vector<Label> vertices, std::map<Edge, Label> edges) {
  return Labeling{std::move(vertices), std::move(edges)};
}

template <class T>
std::size_t count_of(const VerificationReport& r) {
  return static_cast<std::size_t>(std::count_if(r.violations.begin(), r.violations.end(),
                                                 [](const Violation& v) { return std::holds_alternative<T>(v); }));
}

}  // namespace

TEST(VerifyTotalPrime, HelmThree) {
  // x = 0, w = 1..3, v = 4..6.
  const Graph h = build_family(FamilySpec::helm(3));
  const Labeling l = total({1, 2, 5, 7, 3, 4, 6}, {{{1, 4}, 8},
                                                   {{2, 5}, 10},
                                                   {{3, 6}, 12},
                                                   {{1, 2}, 9},
                                                   {{2, 3}, 11},
                                                   {{1, 3}, 13},
                                                   {{0, 1}, 14},
                                                   {{0, 2}, 15},
                                                   {{0, 3}, 16}});
  const auto report = verify_total_prime(h, l);
  EXPECT_TRUE(report.valid());
  EXPECT_TRUE(static_cast<bool>(report));
  EXPECT_TRUE(oracle::is_total_prime(h, l));
}

TEST(VerifyTotalPrime, TriangleParityConflict) {
  const Graph c3 = cycle_graph(3);
  const Labeling l = total({1, 2, 3}, {{{0, 1}, 4}, {{1, 2}, 5}, {{0, 2}, 6}});
  const auto report = verify_total_prime(c3, l);
  ASSERT_FALSE(report.valid());
  ASSERT_EQ(report.violations.size(), 1u);
  const auto* bad = std::get_if<IncidentEdgesShareFactor>(&report.violations[0]);
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(bad->vertex, 0u);
  EXPECT_EQ(bad->gcd, 2);
}

TEST(VerifyTotalPrime, ReportsEveryViolation) {
  const Graph p = path_graph(3);
  // 2 and 4 adjacent, 4 repeated, 9 out of range.
  const Labeling l = total({2, 4, 1}, {{{0, 1}, 4}, {{1, 2}, 9}});
  const auto report = verify_total_prime(p, l);
  EXPECT_EQ(count_of<AdjacentVerticesNotCoprime>(report), 1u);
  EXPECT_EQ(count_of<NonBijective>(report), 2u);
  EXPECT_EQ(count_of<IncidentEdgesShareFactor>(report), 0u);
  for (const auto& v : report.violations) EXPECT_FALSE(describe(v).empty());
}

TEST(VerifyTotalPrime, SizeMismatch) {
  const Graph p = path_graph(3);
  const auto expect_mismatch = [&](const Labeling& l) {
    try {
      verify_total_prime(p, l);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SizeMismatch);
    }
  };
  expect_mismatch(total({1, 2}, {{{0, 1}, 4}, {{1, 2}, 5}}));
  expect_mismatch(total({1, 2, 3}, {{{0, 1}, 4}}));
  expect_mismatch(total({1, 2, 3}, {{{0, 1}, 4}, {{0, 2}, 5}}));
}

TEST(VerifyTotalPrime, PendantsAndIsolatedVerticesAreUnconstrained) {
  // Star: leaves have degree 1 and carry even edge labels with no complaint.
  const Graph star = build_family(FamilySpec::star(3));
  const Labeling l = total({1, 3, 5, 7}, {{{0, 1}, 2}, {{0, 2}, 4}, {{0, 3}, 6}});
  const auto report = verify_total_prime(star, l);
  ASSERT_EQ(report.violations.size(), 1u);  // only the center
  EXPECT_EQ(std::get<IncidentEdgesShareFactor>(report.violations[0]).vertex, 0u);

  const Graph lonely(2, {});
  EXPECT_TRUE(verify_total_prime(lonely, total({2, 1}, {})).valid());
}

TEST(VerifyTotalPrime, MixedUnionFlagsATriangle) {
  std::vector<Graph> parts{complete_graph(5), cycle_graph(3), cycle_graph(3)};
  const Graph g = disjoint_union(parts);
  const std::size_t total_labels = g.order() + g.size();
  EXPECT_EQ(total_labels, 27u);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Label> perm(total_labels);
    std::iota(perm.begin(), perm.end(), Label{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    Labeling l;
    l.vertex_labels.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(g.order()));
    for (std::size_t i = 0; i < g.size(); ++i) l.edge_labels[g.edges()[i]] = perm[g.order() + i];
    EXPECT_EQ(verify_total_prime(g, l).valid(), oracle::is_total_prime(g, l));
  }
}

TEST(VerifyTotalPrime, EdgeOrderInsensitive) {
  const Graph g = build_family(FamilySpec::prism(5));
  std::mt19937_64 rng(5);
  std::vector<Edge> shuffled(g.edges().begin(), g.edges().end());
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Label> perm(g.order() + g.size());
    std::iota(perm.begin(), perm.end(), Label{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    Labeling l;
    l.vertex_labels.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(g.order()));
    for (std::size_t i = 0; i < g.size(); ++i) l.edge_labels[g.edges()[i]] = perm[g.order() + i];
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Edge> flipped;
    for (const auto& e : shuffled) flipped.push_back(trial % 2 ? Edge{e.v, e.u} : e);
    const Graph h(g.order(), flipped);
    EXPECT_EQ(verify_total_prime(g, l).violations, verify_total_prime(h, l).violations);
  }
}

TEST(VerifyPrime, Examples) {
  EXPECT_TRUE(verify_prime(path_graph(3), {{1, 2, 3}, {}}).valid());
  EXPECT_TRUE(verify_prime(cycle_graph(3), {{1, 2, 3}, {}}).valid());
  const auto k4 = verify_prime(complete_graph(4), {{1, 2, 3, 4}, {}});
  EXPECT_FALSE(k4.valid());
  EXPECT_EQ(count_of<AdjacentVerticesNotCoprime>(k4), 1u);
  EXPECT_FALSE(verify_prime(path_graph(3), {{1, 2, 4}, {}}).valid());
  EXPECT_THROW(verify_prime(path_graph(2), {{1, 2}, {{{0, 1}, 3}}}), Error);
}

TEST(VerifyCoprime, Examples) {
  EXPECT_TRUE(verify_coprime(cycle_graph(4), {{2, 3, 4, 5}, {}}, 5).valid());
  EXPECT_FALSE(verify_coprime(cycle_graph(4), {{2, 3, 4, 6}, {}}, 5).valid());
  try {
    verify_coprime(cycle_graph(4), {{1, 2, 3, 4}, {}}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundTooSmall);
  }
}

TEST(VerifyCoprime, AgreesWithPrimeAtBoundN) {
  std::mt19937_64 rng(9);
  const Graph g = build_family(FamilySpec::ladder(4));
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Label> labels(g.order());
    std::iota(labels.begin(), labels.end(), Label{1});
    std::shuffle(labels.begin(), labels.end(), rng);
    const Labeling l{labels, {}};
    EXPECT_EQ(verify_prime(g, l).valid(), verify_coprime(g, l, static_cast<Label>(g.order())).valid());
    EXPECT_EQ(verify_prime(g, l).valid(), oracle::is_coprime(g, labels, static_cast<Label>(g.order())));
  }
}
