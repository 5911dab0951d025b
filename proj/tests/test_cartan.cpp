#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "expect_error.hpp"
#include "helpers.hpp"
#include "schubert/cartan.hpp"

using namespace schubert;
using namespace testing_support;

TEST(IndexSet, RejectsEmptyAndDuplicates) {
  EXPECT_SCHUBERT_ERROR(IndexSet({}), EmptyIndexSet);
  EXPECT_SCHUBERT_ERROR(IndexSet({"s1", "s2", "s1"}), DuplicateLabel, "s1");
  const IndexSet S({"b", "a"});
  EXPECT_EQ(S.index_of("a"), 1);
  EXPECT_SCHUBERT_ERROR(S.index_of("c"), UnknownLabel, "c");
}

TEST(Validate, AcceptsA3) {
  const CartanMatrix A = cartan(kA3);
  EXPECT_EQ(A.size(), 3u);
  EXPECT_EQ(A.entry("s1", "s2"), -1);
  EXPECT_EQ(A.entry("s1", "s3"), 0);
  EXPECT_TRUE(A.is_symmetric());
  EXPECT_FALSE(cartan(kC3).is_symmetric());
}

TEST(Validate, ReportsTheViolatedAxiom) {
  EXPECT_SCHUBERT_ERROR(cartan({{2, 0}, {-1, 2}}), ZeroAsymmetry, "s1", "s2");
  EXPECT_SCHUBERT_ERROR(cartan({{1}}), DiagonalNotTwo, "s1");
  EXPECT_SCHUBERT_ERROR(cartan({{2, 1}, {-1, 2}}), PositiveOffDiagonal, "s1", "s2");
  EXPECT_SCHUBERT_ERROR(CartanMatrix::validate({{2, -1}, {-1}}, IndexSet({"s1", "s2"})), NonSquare);
  EXPECT_SCHUBERT_ERROR(CartanMatrix::validate({{2}}, IndexSet({"s1", "s2"})), NonSquare);
}

TEST(Submatrix, RestrictsAndComposes) {
  const CartanMatrix A = cartan(kA3);
  EXPECT_EQ(A.submatrix(std::vector<std::string>{"s1", "s2"}).rows(), (oracle::Matrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(A.submatrix(std::vector<std::string>{"s1", "s2", "s3"}), A);
  // order follows A, not the request
  EXPECT_EQ(A.submatrix(std::vector<std::string>{"s3", "s1"}).index_set().labels(),
            (std::vector<std::string>{"s1", "s3"}));
  EXPECT_SCHUBERT_ERROR(A.submatrix(std::vector<std::string>{"s4"}), UnknownLabel, "s4");

  const CartanMatrix B3 = cartan({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  EXPECT_EQ(B3.submatrix(std::vector<std::string>{"s2", "s3"}).rows(), (oracle::Matrix{{2, -2}, {-1, 2}}));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const CartanMatrix R = cartan(oracle::random_cartan(rng, 5));
    const LetterSet J{0, 2, 3, 4}, K{2, 4};
    const CartanMatrix RJ = R.submatrix(J);
    EXPECT_EQ(RJ.submatrix(std::vector<std::string>{"s3", "s5"}), R.submatrix(K));
  }
}

TEST(CoxeterExponent, CaseFormula) {
  const CartanMatrix A = cartan(kA3);
  EXPECT_EQ(coxeter_exponent(A, "s1", "s2"), CoxeterExponent::finite(3));
  EXPECT_EQ(coxeter_exponent(A, "s1", "s3"), CoxeterExponent::finite(2));
  EXPECT_EQ(coxeter_exponent(A, "s2", "s2"), CoxeterExponent::finite(1));
  EXPECT_EQ(coxeter_exponent(cartan(kB2), 0, 1), CoxeterExponent::finite(4));
  EXPECT_EQ(coxeter_exponent(cartan({{2, -1}, {-3, 2}}), 0, 1), CoxeterExponent::finite(6));
  EXPECT_TRUE(coxeter_exponent(cartan(kAffineA1), 0, 1).is_infinite());
  EXPECT_TRUE(coxeter_exponent(cartan({{2, -1}, {-5, 2}}), 0, 1).is_infinite());
  EXPECT_EQ(to_string(coxeter_exponent(cartan(kAffineA1), 0, 1)), "inf");
  EXPECT_THROW(coxeter_exponent(cartan(kAffineA1), 0, 1).value(), std::logic_error);
  EXPECT_SCHUBERT_ERROR(coxeter_exponent(A, "s1", "x"), UnknownLabel, "x");
}

TEST(SimpleGraph, EdgesFollowTheZeroPattern) {
  EXPECT_EQ(simple_graph(cartan(kA3)).edges(), (std::vector<std::pair<Letter, Letter>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(simple_graph(cartan(kC3)).edges(), simple_graph(cartan(kA3)).edges());
  EXPECT_TRUE(simple_graph(cartan({{2, 0}, {0, 2}})).edges().empty());
  EXPECT_EQ(simple_graph(cartan(kD4)).degree(1), 3u);
}

namespace {

bool is_group(const std::vector<Permutation>& perms) {
  const std::set<Permutation> set(perms.begin(), perms.end());
  if (set.size() != perms.size() || perms.empty()) return false;
  Permutation id(perms.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Letter>(i);
  if (!set.count(id)) return false;
  for (const auto& p : perms) {
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<Letter>(i);
    if (!set.count(inv)) return false;
    for (const auto& q : perms) {
      Permutation pq(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[static_cast<std::size_t>(q[i])];
      if (!set.count(pq)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Automorphisms, FigureCounts) {
  EXPECT_EQ(graph_automorphisms(simple_graph(cartan(kA3))).size(), 2u);
  EXPECT_EQ(graph_automorphisms(simple_graph(cartan(kD4))).size(), 6u);
  EXPECT_EQ(graph_automorphisms(simple_graph(cartan({{2}}))).size(), 1u);
  EXPECT_EQ(diagram_automorphisms(cartan(kA3)).size(), 2u);
  EXPECT_EQ(diagram_automorphisms(cartan(kC3)).size(), 1u);
  EXPECT_EQ(diagram_automorphisms(cartan(kB2)).size(), 1u);
}

TEST(Automorphisms, LexicographicOrderAndCap) {
  const auto perms = graph_automorphisms(simple_graph(cartan(type_a(4))));
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  EXPECT_EQ(perms, (std::vector<Permutation>{{0, 1, 2, 3}, {3, 2, 1, 0}}));
  EXPECT_SCHUBERT_ERROR(graph_automorphisms(simple_graph(cartan(type_a(13)))), TooLarge);
  EXPECT_SCHUBERT_ERROR(diagram_automorphisms(cartan(type_a(13))), TooLarge);
}

TEST(Automorphisms, BruteForceAgreementAndGroupLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const oracle::Matrix m = oracle::random_cartan(rng, n, trial % 2 ? -1 : -3);
    const CartanMatrix A = cartan(m);
    std::vector<Permutation> graph, diagram;
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Letter>(i);
    do {
      bool g = true, d = true;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const auto ps = static_cast<std::size_t>(p[s]), pt = static_cast<std::size_t>(p[t]);
          g = g && ((m[s][t] == 0) == (m[ps][pt] == 0));
          d = d && m[s][t] == m[ps][pt];
        }
      if (g) graph.push_back(p);
      if (d) diagram.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const auto lib_graph = graph_automorphisms(simple_graph(A));
    const auto lib_diagram = diagram_automorphisms(A);
    EXPECT_EQ(lib_graph, graph);
    EXPECT_EQ(lib_diagram, diagram);
    EXPECT_TRUE(is_group(lib_graph));
    EXPECT_TRUE(is_group(lib_diagram));
    EXPECT_TRUE(std::includes(lib_graph.begin(), lib_graph.end(), lib_diagram.begin(), lib_diagram.end()));
    if (A.is_symmetric() && std::all_of(m.begin(), m.end(), [](const auto& row) {
          return std::all_of(row.begin(), row.end(), [](auto x) { return x == 2 || x == 0 || x == -1; });
        })) {
      EXPECT_EQ(lib_graph, lib_diagram);
    }
  }
}
