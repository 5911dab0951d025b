#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "expect_error.hpp"
#include "a3_table.hpp"
#include "helpers.hpp"
#include "schubert/equivalence.hpp"

using namespace schubert;
using namespace testing_support;

namespace {

WeylElement element(const WeylGroup& W, std::initializer_list<const char*> labels) {
  std::vector<std::string> l(labels.begin(), labels.end());
  return W.element_from_labels(l);
}

std::vector<std::vector<std::string>> words_of(const IsomClass& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : c.members) out.push_back(m.canonical_labels());
  return out;
}

// Relabel the letters of A by `perm` and overwrite entries A_st with st !<= w
// by random negative values, keeping the zero pattern legal.
struct Disguised {
  oracle::Matrix matrix;
  Word word;
};

Disguised disguise(std::mt19937_64& rng, const CartanMatrix& A, const WeylElement& w) {
  const std::size_t n = A.size();
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  oracle::Matrix m(n, std::vector<std::int64_t>(n, 0));
  const LetterSet S = support(w);
  auto in_support = [&](Letter s) { return std::binary_search(S.begin(), S.end(), s); };
  std::uniform_int_distribution<int> entry(-3, -1);
  for (Letter s = 0; s < static_cast<Letter>(n); ++s) {
    for (Letter t = 0; t < static_cast<Letter>(n); ++t) {
      auto& x = m[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])]
                 [static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
      x = A(s, t);
      if (s != t && x != 0 && in_support(s) && in_support(t) && !two_letter_leq(s, t, w)) x = entry(rng);
    }
  }
  Word word;
  for (Letter s : w.canonical_word()) word.push_back(perm[static_cast<std::size_t>(s)]);
  return {m, word};
}

}  // namespace

TEST(CheckEquivalence, RankThreeAndRankTwoExamples) {
  const WeylGroup A3(cartan(kA3)), C3(cartan(kC3));
  EXPECT_FALSE(check_equivalence(element(A3, {"s3", "s2", "s1"}), element(C3, {"s3", "s2", "s1"})));
  const auto witness = check_equivalence(element(A3, {"s1", "s2", "s3"}), element(C3, {"s1", "s2", "s3"}));
  ASSERT_TRUE(witness);
  EXPECT_EQ(witness->sigma, (std::vector<std::pair<Letter, Letter>>{{0, 0}, {1, 1}, {2, 2}}));
  const WeylGroup affine(cartan(kAffineA1)), B2(cartan(kB2));
  EXPECT_TRUE(check_equivalence(element(affine, {"s1", "s2"}), element(B2, {"s1", "s2"})));
  EXPECT_FALSE(check_equivalence(element(A3, {"s2", "s1", "s3"}), element(A3, {"s1", "s3", "s2"})));
}

TEST(CheckEquivalence, QuickRejections) {
  const WeylGroup A3(cartan(kA3));
  EXPECT_FALSE(check_equivalence(element(A3, {"s1"}), element(A3, {"s1", "s2"})));
  EXPECT_FALSE(check_equivalence(element(A3, {"s1", "s2", "s1"}), element(A3, {"s1", "s2", "s3"})));
  EXPECT_TRUE(check_equivalence(A3.identity(), WeylGroup(cartan(kC3)).identity()));
}

TEST(CheckEquivalence, AgreesWithTheDefinition) {
  std::mt19937_64 rng(2024);
  std::size_t positives = 0, negatives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 3;
    const oracle::Matrix m = oracle::random_cartan(rng, n, trial % 3 == 0 ? -1 : -2);
    const WeylGroup W(cartan(m));
    const WeylElement w = random_element(rng, W, 1 + static_cast<std::size_t>(trial) % 6);
    // half the time a disguised copy (often equivalent), otherwise an unrelated element
    oracle::Matrix m2;
    Word word2;
    if (trial % 2 == 0) {
      auto d = disguise(rng, W.cartan(), w);
      m2 = d.matrix;
      word2 = d.word;
      if (trial % 4 == 0) std::swap(word2.front(), word2.back());
    } else {
      m2 = oracle::random_cartan(rng, n, -2);
      word2 = random_element(rng, WeylGroup(cartan(m2)), w.length()).canonical_word();
    }
    const WeylGroup W2(cartan(m2));
    const WeylElement w2 = W2.element_from_word(word2);
    const oracle::Ball ball(m, w.length()), ball2(m2, w.length());
    const auto red = ball.reduced_words(action_matrix(w));
    const bool expected = ball2.contains(action_matrix(w2)) &&
                          oracle::equivalent_by_definition(m, red, m2, ball2.reduced_words(action_matrix(w2)));
    const auto witness = check_equivalence(w, w2);
    EXPECT_EQ(witness.has_value(), expected) << w.to_string() << " vs " << w2.to_string();
    if (witness) {
      EXPECT_TRUE(verify_witness(*witness));
      ++positives;
    } else {
      ++negatives;
    }
  }
  EXPECT_GT(positives, 30u);
  EXPECT_GT(negatives, 10u);
}

TEST(CheckEquivalence, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const oracle::Matrix m = oracle::random_cartan(rng, 3, -2);
    const WeylGroup W(cartan(m));
    const WeylElement a = random_element(rng, W, 1 + static_cast<std::size_t>(trial) % 7);
    const auto d1 = disguise(rng, W.cartan(), a);
    const WeylGroup W1(cartan(d1.matrix));
    const WeylElement b = W1.element_from_word(d1.word);
    const auto d2 = disguise(rng, W1.cartan(), b);
    const WeylGroup W2(cartan(d2.matrix));
    const WeylElement c = W2.element_from_word(d2.word);

    const auto aa = check_equivalence(a, a);
    ASSERT_TRUE(aa);
    EXPECT_TRUE(verify_witness(*aa));
    const auto ab = check_equivalence(a, b), ba = check_equivalence(b, a);
    const auto bc = check_equivalence(b, c), ac = check_equivalence(a, c);
    EXPECT_EQ(ab.has_value(), ba.has_value());
    ASSERT_TRUE(ab);
    EXPECT_TRUE(verify_witness(invert(*ab)));
    ASSERT_TRUE(bc);
    EXPECT_TRUE(ac);
  }
}

TEST(CheckEquivalence, SupportGraphsAreIsomorphic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const WeylGroup W(cartan(oracle::random_cartan(rng, 4, -2)));
    const WeylElement w = random_element(rng, W, 2 + static_cast<std::size_t>(trial) % 6);
    const auto d = disguise(rng, W.cartan(), w);
    const WeylGroup W2(cartan(d.matrix));
    const auto witness = check_equivalence(w, W2.element_from_word(d.word));
    ASSERT_TRUE(witness);
    for (const auto& [s, sigma_s] : witness->sigma)
      for (const auto& [t, sigma_t] : witness->sigma)
        EXPECT_EQ(W.cartan()(s, t) == 0, W2.cartan()(sigma_s, sigma_t) == 0);
  }
}

TEST(CheckEquivalence, InversionSetsCorrespond) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const WeylGroup W(cartan(oracle::random_cartan(rng, 3 + static_cast<std::size_t>(trial) % 2, -3)));
    const WeylElement w = random_element(rng, W, 1 + static_cast<std::size_t>(trial) % 8);
    const auto d = disguise(rng, W.cartan(), w);
    const WeylGroup W2(cartan(d.matrix));
    const WeylElement w2 = W2.element_from_word(d.word);
    const auto witness = check_equivalence(w, w2);
    ASSERT_TRUE(witness);
    std::set<RootVector> mapped;
    for (const auto& beta : inversion_set(w)) {
      RootVector image(std::vector<std::int64_t>(W2.rank(), 0));
      for (const auto& [s, t] : witness->sigma) image.coords[static_cast<std::size_t>(t)] = beta[s];
      for (Letter s = 0; s < static_cast<Letter>(W.rank()); ++s)
        if (support(w).end() == std::find(support(w).begin(), support(w).end(), s)) {
          EXPECT_EQ(beta[s], 0);
        }
      mapped.insert(image);
    }
    const auto target = inversion_set(w2);
    EXPECT_EQ(mapped, std::set<RootVector>(target.begin(), target.end()));
  }
}

TEST(CheckEquivalence, RestrictionToTheSupport) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const WeylGroup W(cartan(oracle::random_cartan(rng, 4, -3)));
    const WeylElement w = random_element(rng, W, static_cast<std::size_t>(trial) % 6);
    const LetterSet S = support(w);
    if (S.empty()) continue;
    const WeylGroup sub(W.cartan().submatrix(S));
    Word word;
    for (Letter s : w.canonical_word())
      word.push_back(static_cast<Letter>(std::lower_bound(S.begin(), S.end(), s) - S.begin()));
    const auto witness = check_equivalence(w, sub.element_from_word(word));
    ASSERT_TRUE(witness);
    EXPECT_TRUE(verify_witness(*witness));
  }
}

TEST(Witness, VerificationRejectsTampering) {
  const WeylGroup A3(cartan(kA3)), C3(cartan(kC3));
  auto witness = *check_equivalence(element(A3, {"s1", "s2", "s3"}), element(C3, {"s1", "s2", "s3"}));
  EXPECT_TRUE(verify_witness(witness));
  EXPECT_EQ(witness.image(1), 1);
  EXPECT_SCHUBERT_ERROR(EquivalenceWitness{witness}.image(5), NotInSupport);
  auto bad = witness;
  bad.target = element(C3, {"s3", "s2", "s1"});
  bad.target_word = {2, 1, 0};
  bad.sigma = {{0, 2}, {1, 1}, {2, 0}};
  EXPECT_FALSE(verify_witness(bad));
  EXPECT_SCHUBERT_ERROR(transport_interval(bad), InvalidWitness);
  auto short_word = witness;
  short_word.source_word = {0, 1, 2, 2, 2};
  EXPECT_FALSE(verify_witness(short_word));
}

TEST(Transport, IdentityAndA3C3Pair) {
  const WeylGroup A3(cartan(kA3)), C3(cartan(kC3));
  const WeylElement w = element(A3, {"s2", "s1", "s3", "s2"});
  const auto self = transport_interval(*check_equivalence(w, w));
  for (std::size_t i = 0; i < self.map.size(); ++i) EXPECT_EQ(self.map[i], i);

  const auto t = transport_interval(*check_equivalence(element(A3, {"s1", "s2", "s3"}), element(C3, {"s1", "s2", "s3"})));
  EXPECT_EQ(t.source.size(), 8u);
  EXPECT_EQ(t.target.size(), 8u);
  for (std::size_t i = 0; i < t.map.size(); ++i) EXPECT_EQ(t.source[i].length(), t.target[t.map[i]].length());
}

TEST(Transport, IsAPosetIsomorphism) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const WeylGroup W(cartan(oracle::random_cartan(rng, 3, -3)));
    const WeylElement w = random_element(rng, W, 2 + static_cast<std::size_t>(trial) % 6);
    const auto d = disguise(rng, W.cartan(), w);
    const WeylGroup W2(cartan(d.matrix));
    const auto t = transport_interval(*check_equivalence(w, W2.element_from_word(d.word)));
    for (std::size_t i = 0; i < t.source.size(); ++i)
      for (std::size_t j = 0; j < t.source.size(); ++j)
        EXPECT_EQ(bruhat_leq(t.source[i], t.source[j]), bruhat_leq(t.target[t.map[i]], t.target[t.map[j]]));
  }
}

TEST(IsomClasses, A3TableVerbatim) {
  const WeylGroup A3(cartan(kA3));
  const auto classes = isom_classes(A3, 6);
  ASSERT_EQ(classes.size(), 14u);
  std::set<std::set<std::vector<std::string>>> expected, got;
  for (const auto& cls : kA3Classes) {
    std::set<std::vector<std::string>> canon;
    for (const auto& word : cls) canon.insert(A3.element_from_labels(word).canonical_labels());
    expected.insert(canon);
  }
  for (const auto& c : classes) {
    const auto words = words_of(c);
    got.insert(std::set<std::vector<std::string>>(words.begin(), words.end()));
    EXPECT_EQ(c.representative, c.members.front());
    ASSERT_EQ(c.witnesses.size(), c.members.size());
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      EXPECT_TRUE(verify_witness(c.witnesses[i]));
      EXPECT_EQ(c.witnesses[i].target, c.members[i]);
    }
  }
  EXPECT_EQ(got, expected);
}

TEST(IsomClasses, MatchPairwiseOracleOnRandomMatrices) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 4; ++trial) {
    const oracle::Matrix m = oracle::random_cartan(rng, 3, -2);
    const WeylGroup W(cartan(m));
    const auto classes = isom_classes(W, 4);
    std::vector<std::pair<WeylElement, std::size_t>> labelled;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& member : classes[c].members) labelled.emplace_back(member, c);
    const oracle::Ball ball(m, 4);
    for (const auto& [x, cx] : labelled) {
      for (const auto& [y, cy] : labelled) {
        if (x.length() != y.length() || shortlex_less(y, x)) continue;
        const bool eq = oracle::equivalent_by_definition(m, ball.reduced_words(action_matrix(x)), m,
                                                         ball.reduced_words(action_matrix(y)));
        EXPECT_EQ(eq, cx == cy) << x.to_string() << " / " << y.to_string();
      }
    }
  }
}

TEST(IsomClassBound, FigureExamples) {
  const WeylGroup A3(cartan(kA3)), C3(cartan(kC3)), D4(cartan(kD4));
  EXPECT_EQ(isom_class_bound(A3.cartan(), element(A3, {"s3", "s2", "s1", "s3", "s2", "s3"})).value(), 2u);
  const auto c3 = isom_class_bound(C3.cartan(), element(C3, {"s1", "s2", "s3"}));
  EXPECT_EQ(c3.graph_automorphisms, 2u);
  EXPECT_FALSE(c3.diagram_automorphisms);
  EXPECT_EQ(diagram_automorphisms(C3.cartan()).size(), 1u);
  EXPECT_EQ(isom_class_bound(D4.cartan(), element(D4, {"s1", "s2", "s3", "s4"})).value(), 6u);
  EXPECT_SCHUBERT_ERROR(isom_class_bound(A3.cartan(), element(A3, {"s1", "s2"})), NotFullySupported, "s3");
}

TEST(IsomClassBound, BoundsFullySupportedClasses) {
  for (const auto& m : {kA3, kC3, type_a(4), kD4}) {
    const WeylGroup W(cartan(m));
    for (const auto& c : isom_classes(W, 8)) {
      if (support(c.representative).size() != W.rank()) continue;
      EXPECT_LE(c.members.size(), isom_class_bound(W.cartan(), c.representative).value());
    }
  }
}
