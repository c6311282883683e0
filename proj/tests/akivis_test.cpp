#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nagsb/akivis.hpp"
#include "nagsb/error.hpp"
#include "nagsb/gsbasis.hpp"
#include "nagsb/ideal_span.hpp"
#include "support/oracles.hpp"

namespace nagsb {
namespace {

AkivisAlgebra two_dim_example() {
  MultiplicationTable gamma(2);
  gamma.set(0, 1, 1, Coeff(1));
  return akivis_from_algebra(gamma);
}

TEST(Akivis, ZeroAlgebraIsValid) {
  for (std::size_t d = 0; d <= 3; ++d) EXPECT_FALSE(check_akivis_identity(AkivisAlgebra(d)).has_value());
}

TEST(Akivis, TwoDimExampleConstants) {
  AkivisAlgebra a = two_dim_example();
  // [b0, b1] = b0 b1 - b1 b0 = b1; (b0, b0, b1) = (b0 b0) b1 - b0 (b0 b1) = -b1.
  EXPECT_EQ(a.alpha(0, 1, 1), Coeff(1));
  EXPECT_EQ(a.alpha(1, 0, 1), Coeff(-1));
  EXPECT_EQ(a.beta(0, 0, 1, 1), Coeff(-1));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t n = 0; n < 2; ++n) nonzero += a.beta(i, j, k, n).is_zero() ? 0 : 1;
  EXPECT_EQ(nonzero, 1U);
  EXPECT_TRUE(a.alpha(0, 1, 0).is_zero());
}

TEST(Akivis, FromAlgebraMatchesDirectProducts) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = trial % 3 + 1;
    MultiplicationTable gamma = testing::random_table(dim, rng);
    AkivisAlgebra a = akivis_from_algebra(gamma);
    testing::DirectAlgebra b{gamma};
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        auto comm = b.sub(b.mul(b.basis(i), b.basis(j)), b.mul(b.basis(j), b.basis(i)));
        for (std::size_t m = 0; m < dim; ++m) EXPECT_EQ(a.alpha(i, j, m), comm[m]);
        for (std::size_t k = 0; k < dim; ++k) {
          auto assoc = b.sub(b.mul(b.mul(b.basis(i), b.basis(j)), b.basis(k)),
                             b.mul(b.basis(i), b.mul(b.basis(j), b.basis(k))));
          for (std::size_t n = 0; n < dim; ++n) EXPECT_EQ(a.beta(i, j, k, n), assoc[n]);
        }
      }
    }
  }
}

TEST(Akivis, FromAlgebraAlwaysSatisfiesIdentity) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t dim = trial % 4 + 1;
    AkivisAlgebra a = akivis_from_algebra(testing::random_table(dim, rng, 3, 0.6));
    EXPECT_FALSE(check_akivis_identity(a).has_value()) << "trial " << trial;
  }
}

TEST(Akivis, AssociativeAlgebraHasNoTernaryPart) {
  // 2x2 matrix units E_ab E_cd = [b == c] E_ad, basis index 2a + b.
  MultiplicationTable gamma(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) gamma.set(2 * a + b, 2 * b + d, 2 * a + d, Coeff(1));
  AkivisAlgebra m = akivis_from_algebra(gamma);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t n = 0; n < 4; ++n) EXPECT_TRUE(m.beta(i, j, k, n).is_zero());
  EXPECT_FALSE(check_akivis_identity(m).has_value());
}

TEST(Akivis, RepeatedIndexPerturbationIsInvisible) {
  // With two equal arguments the alternating sum of ternary products cancels.
  AkivisAlgebra a = two_dim_example();
  a.set_ternary(1, 0, 0, 0, a.beta(1, 0, 0, 0) + Coeff(1));
  EXPECT_FALSE(check_akivis_identity(a).has_value());
}

TEST(Akivis, PerturbedTernaryViolatesIdentity) {
  std::mt19937_64 rng(99);
  AkivisAlgebra a = akivis_from_algebra(testing::random_table(3, rng));
  a.set_ternary(2, 1, 0, 0, a.beta(2, 1, 0, 0) + Coeff(1));
  auto v = check_akivis_identity(a);
  ASSERT_TRUE(v.has_value());
  std::vector<std::size_t> idx{v->i, v->j, v->k};
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(v->defect[0].is_zero());
}

TEST(Akivis, BracketInputIsSkewByConstruction) {
  AkivisAlgebra a(3);
  a.set_bracket(2, 0, 1, Coeff(5));
  EXPECT_EQ(a.alpha(0, 2, 1), Coeff(-5));
  EXPECT_THROW(a.set_bracket(0, 2, 1, Coeff(1)), PreconditionViolated);
  EXPECT_THROW(a.set_bracket(1, 1, 1, Coeff(1)), PreconditionViolated);
  EXPECT_THROW(a.set_ternary(0, 0, 0, 3, Coeff(1)), PreconditionViolated);
}

TEST(Presentation, Counts) {
  auto one = build_presentation(AkivisAlgebra(1));
  EXPECT_EQ(one.f.size(), 0U);
  EXPECT_EQ(one.g.size(), 1U);
  EXPECT_EQ(one.h.size(), 0U);

  auto two = build_presentation(two_dim_example());
  EXPECT_EQ(two.f.size(), 1U);
  EXPECT_EQ(two.g.size(), 8U);
  ASSERT_EQ(two.h.size(), 2U);
  EXPECT_EQ(two.size(), 11U);
  EXPECT_EQ(two.h[0].k, 0U);
  EXPECT_EQ(two.h[1].k, 1U);

  for (std::size_t d = 1; d <= 4; ++d) {
    std::size_t h = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) h += d - j;
    auto pres = build_presentation(AkivisAlgebra(d));
    EXPECT_EQ(pres.f.size(), d * (d - 1) / 2);
    EXPECT_EQ(pres.g.size(), d * d * d);
    EXPECT_EQ(pres.h.size(), h);
  }
}

TEST(Presentation, LeadingWordsAndMonic) {
  std::mt19937_64 rng(101);
  AkivisAlgebra a = akivis_from_algebra(testing::random_table(3, rng));
  auto pres = build_presentation(a);
  auto e = [](std::size_t i) { return Word::leaf({static_cast<std::uint32_t>(i)}); };
  for (const auto& r : pres.f) {
    EXPECT_EQ(r.relation.leading_word(), Word::node(e(r.i), e(r.j)));
    EXPECT_TRUE(r.relation.leading_coeff().is_one());
  }
  for (const auto& r : pres.g) {
    EXPECT_EQ(r.relation.leading_word(), Word::node(Word::node(e(r.i), e(r.j)), e(r.k)));
    EXPECT_TRUE(r.relation.leading_coeff().is_one());
  }
  for (const auto& r : pres.h) {
    EXPECT_GT(r.i, r.j);
    EXPECT_GE(r.k, r.j);
    EXPECT_EQ(r.relation.leading_word(), Word::node(e(r.i), Word::node(e(r.j), e(r.k))));
    EXPECT_TRUE(r.relation.leading_coeff().is_one());
  }
}

TEST(Presentation, ZeroAlgebraHasNoLowerTerms) {
  auto pres = build_presentation(AkivisAlgebra(2));
  Alphabet e = pres.alphabet;
  EXPECT_EQ(pres.f[0].relation, parse_poly("(e1 e0) - (e0 e1)", e));
  for (const auto& h : pres.h) {
    for (const auto& t : h.relation) EXPECT_EQ(t.word.length(), 3U);
  }
}

TEST(EnvelopingBasis, ZeroAlgebras) {
  for (std::size_t d = 1; d <= 4; ++d) {
    TheoremReport r = verify_theorem(AkivisAlgebra(d));
    EXPECT_TRUE(r.is_gs()) << "dim " << d;
    EXPECT_TRUE(r.embedding_holds());
  }
}

TEST(EnvelopingBasis, TwoDimExample) {
  TheoremReport r = verify_theorem(two_dim_example());
  EXPECT_TRUE(r.identity_holds);
  EXPECT_TRUE(r.is_gs());
  EXPECT_TRUE(r.embedding_holds());
  EXPECT_EQ(r.compositions, 2U);
  EXPECT_EQ(r.certificate_sizes.size(), 2U);
}

TEST(EnvelopingBasis, RandomValidAlgebras) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    AkivisAlgebra a = akivis_from_algebra(testing::random_table(trial % 3 + 1, rng));
    TheoremReport r = verify_theorem(a);
    EXPECT_TRUE(r.is_gs()) << "trial " << trial;
    EXPECT_TRUE(r.embedding_holds());
  }
}

TEST(EnvelopingBasis, BrokenIdentityBreaksTheBasis) {
  // Perturb a ternary constant over a descending triple; the i > j > k
  // composition needs the identity to close.
  std::mt19937_64 rng(107);
  AkivisAlgebra a = akivis_from_algebra(testing::random_table(3, rng));
  a.set_ternary(2, 1, 0, 0, a.beta(2, 1, 0, 0) + Coeff(1));
  ASSERT_TRUE(check_akivis_identity(a).has_value());
  TheoremReport r = verify_theorem(a);
  EXPECT_FALSE(r.identity_holds);
  ASSERT_FALSE(r.is_gs());
  auto pres = build_presentation(a);
  const auto& c = std::get<CounterExample>(r.verdict).composition;
  const auto& g = pres.g.at(c.f_index - pres.f.size());
  EXPECT_GT(g.i, g.j);
  EXPECT_GT(g.j, g.k);
}

TEST(Embedding, BracketsAndAssociatorsArePreserved) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t dim = trial % 3 + 1;
    AkivisAlgebra a = akivis_from_algebra(testing::random_table(dim, rng));
    RelationSet s = verified(build_presentation(a).relations());
    const Coeff one = Coeff::one(a.field());
    auto e = [&](std::size_t i) { return Poly::monomial(Word::leaf({static_cast<std::uint32_t>(i)}), one); };
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Poly comm = multiply(e(i), e(j)) - multiply(e(j), e(i));
        EXPECT_EQ(normal_form(comm, s), normal_form(a.bracket(i, j), s));
        for (std::size_t k = 0; k < dim; ++k) {
          Poly assoc = multiply(multiply(e(i), e(j)), e(k)) - multiply(e(i), multiply(e(j), e(k)));
          EXPECT_EQ(normal_form(assoc, s), normal_form(a.ternary(i, j, k), s));
        }
      }
    }
  }
}

TEST(PbwBasis, DegreeOneIsTheGenerators) {
  auto words = pbw_basis(two_dim_example(), 1);
  ASSERT_EQ(words.size(), 2U);
  EXPECT_EQ(words[0], Word::leaf({0}));
  EXPECT_EQ(words[1], Word::leaf({1}));
}

TEST(PbwBasis, DimOneDegreeThree) {
  auto words = pbw_basis(AkivisAlgebra(1), 3);
  std::vector<Word> cubic;
  for (const auto& w : words) {
    if (w.length() == 3) cubic.push_back(w);
  }
  ASSERT_EQ(cubic.size(), 1U);
  EXPECT_EQ(render_word(cubic[0], Alphabet::indexed(1, "e")), "(e0 (e0 e0))");
}

TEST(PbwBasis, RightCombsThroughDegreeThree) {
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::vector<std::size_t> count(4, 0);
    for (const auto& w : pbw_basis(AkivisAlgebra(dim), 3)) {
      ++count[w.length()];
      auto leaves = w.flatten();
      EXPECT_TRUE(std::is_sorted(leaves.begin(), leaves.end()));
    }
    for (std::size_t d = 1; d <= 3; ++d) EXPECT_EQ(count[d], testing::binomial(dim + d - 1, d));
  }
}

TEST(PbwBasis, MatchesBruteForceFilterThroughDegreeFive) {
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::vector<Word> expected;
    for (std::size_t d = 1; d <= 5; ++d) {
      for (const auto& w : enumerate_words(dim, d)) {
        if (testing::enveloping_reduced(w)) expected.push_back(w);
      }
    }
    EXPECT_EQ(pbw_basis(AkivisAlgebra(dim), 5), expected) << "dim " << dim;
  }
}

TEST(PbwBasis, WordsBeyondRightCombsSurviveFromDegreeFour) {
  // (e0 e0)(e0 e0) has no subtree of the form e_i e_j (i > j), (e_i e_j) e_k
  // or e_i (e_j e_k), so reduced words outgrow the right combs.
  auto words = pbw_basis(AkivisAlgebra(1), 4);
  Alphabet e = Alphabet::indexed(1, "e");
  std::set<std::string> quartic;
  for (const auto& w : words) {
    if (w.length() == 4) quartic.insert(render_word(w, e));
  }
  EXPECT_EQ(quartic, (std::set<std::string>{"((e0 (e0 e0)) e0)", "((e0 e0) (e0 e0))",
                                            "(e0 (e0 (e0 e0)))"}));
}

TEST(PbwBasis, OracleConfirmsDegreeFourGrowth) {
  // Linear algebra alone, without reduction: dim 1 quotient has 1,1,1,3,8
  // words per degree.
  std::vector<Poly> rels = build_presentation(AkivisAlgebra(1)).relations().relations();
  auto dims = oracle::quotient_dimensions(rels, 1, 5);
  std::vector<std::size_t> per_degree;
  for (std::size_t d = 1; d <= 5; ++d) per_degree.push_back(dims[d] - dims[d - 1]);
  EXPECT_EQ(per_degree, (std::vector<std::size_t>{1, 1, 1, 3, 8}));
}

TEST(Completion, CompletionRegeneratesTheHRelations) {
  // Starting from f and g alone, completion adds relations whose leading
  // words are exactly those of the h family (checked for dim <= 2).
  std::mt19937_64 rng(113);
  for (std::size_t dim = 1; dim <= 2; ++dim) {
    for (int trial = 0; trial < 4; ++trial) {
      AkivisAlgebra a = akivis_from_algebra(testing::random_table(dim, rng));
      auto pres = build_presentation(a);
      std::vector<Poly> fg;
      for (const auto& r : pres.f) fg.push_back(r.relation);
      for (const auto& r : pres.g) fg.push_back(r.relation);
      RelationSet start(pres.alphabet, pres.field, fg);
      auto res = complete(start, 3);
      ASSERT_TRUE(std::holds_alternative<Completed>(res));
      const RelationSet& done = std::get<Completed>(res).basis;
      std::set<std::vector<std::uint64_t>> added, expected;
      for (std::size_t i = start.size(); i < done.size(); ++i)
        added.insert(testing::deglex_key(done[i].leading_word()));
      for (const auto& r : pres.h) expected.insert(testing::deglex_key(r.relation.leading_word()));
      EXPECT_EQ(added, expected) << "dim " << dim;
      RelationSet full = pres.relations();
      for (const auto& r : pres.h) EXPECT_TRUE(normal_form(r.relation, done).is_zero());
      EXPECT_EQ(enumerate_red(done, 4).size(), enumerate_red(full, 4).size());
    }
  }
}

}  // namespace
}  // namespace nagsb
