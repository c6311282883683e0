#include <gtest/gtest.h>

#include <random>

#include "nagsb/cd_check.hpp"
#include "nagsb/error.hpp"
#include "nagsb/word.hpp"
#include "support/oracles.hpp"

namespace nagsb {
namespace {

const Alphabet kX = Alphabet({"x0", "x1", "x2", "x3"});

Word w(std::string_view text) { return parse_word(text, kX); }

TEST(Word, LengthCountsLeaves) {
  EXPECT_EQ(length(w("x1")), 1U);
  EXPECT_EQ(length(w("(x1 x2)")), 2U);
  EXPECT_EQ(length(w("((x1 x2) x3)")), 3U);
}

TEST(Word, CompareExamples) {
  EXPECT_EQ(compare(w("x2"), w("x1")), std::strong_ordering::greater);
  // Equal length 3; left factors have lengths 2 > 1.
  EXPECT_EQ(compare(w("((x1 x2) x3)"), w("(x1 (x2 x3))")), std::strong_ordering::greater);
  EXPECT_EQ(compare(w("(x1 x1)"), w("x2")), std::strong_ordering::greater);
  EXPECT_EQ(compare(w("(x1 x2)"), w("(x1 x2)")), std::strong_ordering::equal);
}

TEST(Word, ParseFixtures) {
  Word a = w("((x1 x2) x3)");
  ASSERT_FALSE(a.is_leaf());
  EXPECT_EQ(a.left(), Word::node(Word::leaf({1}), Word::leaf({2})));
  EXPECT_EQ(a.right(), Word::leaf({3}));
  EXPECT_EQ(w("x1"), Word::leaf({1}));
  EXPECT_EQ(w("(x1 (x2 x3))"),
            Word::node(Word::leaf({1}), Word::node(Word::leaf({2}), Word::leaf({3}))));
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(w("(x1  x2)"), ParseError);   // two spaces
  EXPECT_THROW(w("(x1 x2"), ParseError);
  EXPECT_THROW(w("(x1)"), ParseError);
  EXPECT_THROW(w("(x1 x9)"), ParseError);    // undeclared
  EXPECT_THROW(w("(x1 x2) "), ParseError);
  EXPECT_THROW(w(""), ParseError);
  try {
    w("(x1 y)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
}

TEST(Word, DeclarationOrderDefinesLetterOrder) {
  Alphabet rev({"b", "a"});
  EXPECT_EQ(compare(parse_word("a", rev), parse_word("b", rev)), std::strong_ordering::greater);
}

TEST(Word, EnumerateSmallCases) {
  auto one = enumerate_words(1, 2);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(render_word(one[0], Alphabet::indexed(1)), "(x0 x0)");

  auto letters = enumerate_words(2, 1);
  ASSERT_EQ(letters.size(), 2U);
  EXPECT_EQ(letters[0], Word::leaf({0}));
  EXPECT_EQ(letters[1], Word::leaf({1}));

  EXPECT_EQ(enumerate_words(1, 4).size(), testing::catalan(3));
}

TEST(Word, EnumerateCountsMatchCatalanFormula) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 5; ++d) {
      std::uint64_t expected = testing::catalan(d - 1);
      for (std::size_t i = 0; i < d; ++i) expected *= n;
      EXPECT_EQ(enumerate_words(n, d).size(), expected) << "n=" << n << " d=" << d;
      EXPECT_EQ(word_count(n, d), expected);
    }
  }
}

TEST(Word, EnumerateRespectsCap) {
  EXPECT_THROW(enumerate_words(3, 8, {.max_words = 1000}), ResourceCapExceeded);
  EXPECT_THROW(enumerate_words(2, 0), PreconditionViolated);
}

TEST(Word, EnumerationIsStrictlyIncreasingAndRoundTrips) {
  Alphabet ab = Alphabet::indexed(2);
  for (std::size_t d = 1; d <= 5; ++d) {
    auto words = enumerate_words(2, d);
    for (std::size_t i = 1; i < words.size(); ++i) {
      EXPECT_TRUE(compare(words[i - 1], words[i]) < 0);
    }
    for (const auto& u : words) EXPECT_EQ(parse_word(render_word(u, ab), ab), u);
  }
}

TEST(Word, CompareAgreesWithFlatKey) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uniform_int_distribution<std::size_t> len(1, 6);
    Word u = random_word(3, len(rng), rng);
    Word v = random_word(3, len(rng), rng);
    EXPECT_EQ(compare(u, v), testing::deglex_key(u) <=> testing::deglex_key(v));
    EXPECT_EQ(u == v, testing::deglex_key(u) == testing::deglex_key(v));
  }
}

TEST(Word, CompareIsATotalOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    Word a = random_word(2, len(rng), rng);
    Word b = random_word(2, len(rng), rng);
    Word c = random_word(2, len(rng), rng);
    EXPECT_EQ(compare(a, b) < 0, compare(b, a) > 0);
    EXPECT_EQ(compare(a, b) == 0, a == b);
    if (compare(a, b) < 0 && compare(b, c) < 0) EXPECT_TRUE(compare(a, c) < 0);
  }
}

TEST(Word, OrderIsMonomial) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = random_word(3, len(rng), rng);
    Word v = random_word(3, len(rng), rng);
    Word x = random_word(3, len(rng), rng);
    if (compare(u, v) <= 0) std::swap(u, v);
    if (u == v) continue;
    EXPECT_TRUE(compare(Word::node(u, x), Word::node(v, x)) > 0);
    EXPECT_TRUE(compare(Word::node(x, u), Word::node(x, v)) > 0);
  }
}

TEST(Word, BoundedLengthWordsAreFinite) {
  // No infinite descending chain: below any word there are only finitely
  // many words, all of which appear in the enumeration up to its length.
  Word top = w("((x1 x0) (x0 x1))");
  std::size_t below = 0;
  for (std::size_t d = 1; d <= top.length(); ++d) {
    for (const auto& u : enumerate_words(2, d)) below += compare(u, top) < 0 ? 1 : 0;
  }
  std::size_t total = 0;
  for (std::size_t d = 1; d <= top.length(); ++d) total += word_count(2, d);
  EXPECT_LT(below, total);
  EXPECT_GT(below, 0U);
}

TEST(Word, FlattenAndSubtrees) {
  Word u = w("((x1 x2) (x3 x1))");
  auto leaves = u.flatten();
  ASSERT_EQ(leaves.size(), u.length());
  EXPECT_EQ(leaves[0].id, 1U);
  EXPECT_EQ(leaves[2].id, 3U);
  EXPECT_EQ(*u.subtree(Position{Side::Right}), w("(x3 x1)"));
  EXPECT_EQ(u.subtree(Position{Side::Left, Side::Left, Side::Left}), nullptr);
  EXPECT_EQ(u.replace(Position{Side::Left}, w("x0")), w("(x0 (x3 x1))"));
}

}  // namespace
}  // namespace nagsb
