#include "unshuffle/shuffles.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace unshuffle;
using namespace unshuffle::testing;

namespace {

Permutation gen(Letter l, std::uint32_t two_n) { return generator_permutation(l, DeckSize(two_n)); }

}  // namespace

TEST(DeckSize, Validation) {
  EXPECT_NO_THROW(DeckSize(2));
  EXPECT_NO_THROW(DeckSize(1u << 20));
  EXPECT_THROW(DeckSize(0), std::invalid_argument);
  EXPECT_THROW(DeckSize(7), std::invalid_argument);
  EXPECT_THROW(DeckSize((1u << 20) + 2), std::invalid_argument);
  EXPECT_TRUE(DeckSize(64).is_power_of_two());
  EXPECT_EQ(DeckSize(64).log2(), 6u);
  EXPECT_FALSE(DeckSize(52).is_power_of_two());
}

TEST(ShuffleWord, ParseAndPrint) {
  const ShuffleWord w = ShuffleWord::parse("L R' I O'V");
  ASSERT_EQ(w.size(), 5u);
  EXPECT_EQ(w.symbols()[1], (ShuffleSymbol{Letter::R, true}));
  EXPECT_EQ(w.to_string(), "LR'IO'V");
  EXPECT_TRUE(ShuffleWord::parse("").empty());
  EXPECT_THROW(ShuffleWord::parse("LX"), std::invalid_argument);
  EXPECT_THROW(ShuffleWord::parse("'L"), std::invalid_argument);
  EXPECT_EQ(ShuffleWord::parse("LI'").inverse().to_string(), "IL'");
  EXPECT_EQ(ShuffleWord::parse("LR").power(-2).to_string(), "R'L'R'L'");
  // Function notation: x*y performs y first.
  EXPECT_EQ((ShuffleWord::parse("L") * ShuffleWord::parse("R")).to_string(), "RL");
}

TEST(Generators, SixCards) {
  EXPECT_EQ(gen(Letter::L, 6), Permutation({2, 5, 1, 4, 0, 3}));
  EXPECT_EQ(to_arrangement_string(gen(Letter::L, 6)), "4,2,0,5,3,1");
  EXPECT_EQ(gen(Letter::R, 6), Permutation({5, 2, 4, 1, 3, 0}));
  EXPECT_EQ(to_arrangement_string(gen(Letter::R, 6)), "5,3,1,4,2,0");
  EXPECT_EQ(gen(Letter::V, 6), Permutation({5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(image_of(gen(Letter::I, 6)), in_shuffle_image(6));
  EXPECT_EQ(gen(Letter::I, 6), Permutation({1, 3, 5, 0, 2, 4}));
  EXPECT_EQ(image_of(gen(Letter::O, 6)), out_shuffle_image(6));
}

TEST(Generators, InvertedSymbolGivesInverse) {
  for (Letter l : {Letter::L, Letter::R, Letter::I, Letter::O, Letter::V}) {
    const DeckSize deck(10);
    EXPECT_EQ(generator_permutation({l, true}, deck), inverse(generator_permutation(l, deck)));
  }
}

TEST(Generators, TwoCardDeck) {
  EXPECT_EQ(gen(Letter::L, 2), Permutation(2));
  EXPECT_EQ(gen(Letter::R, 2), Permutation({1, 0}));
  EXPECT_EQ(deal_oracle(Pile::left, DeckSize(2)), Permutation(2));
  EXPECT_EQ(deal_oracle(Pile::right, DeckSize(2)), Permutation({1, 0}));
}

TEST(DealOracle, SixCards) {
  EXPECT_EQ(deal_oracle(Pile::left, DeckSize(6)), Permutation({2, 5, 1, 4, 0, 3}));
  EXPECT_EQ(deal_oracle(Pile::right, DeckSize(6)), Permutation({5, 2, 4, 1, 3, 0}));
}

TEST(DealOracle, MatchesClosedFormsUpTo2000) {
  for (std::uint32_t d = 2; d <= 2000; d += 2) {
    ASSERT_EQ(deal_oracle(Pile::left, DeckSize(d)), gen(Letter::L, d)) << d;
    ASSERT_EQ(deal_oracle(Pile::right, DeckSize(d)), gen(Letter::R, d)) << d;
  }
}

TEST(Words, Evaluation) {
  EXPECT_EQ(word_to_permutation(ShuffleWord::parse("LI"), DeckSize(6)), gen(Letter::V, 6));
  EXPECT_EQ(word_to_permutation(ShuffleWord{}, DeckSize(12)), Permutation(12));
  EXPECT_EQ(word_to_permutation(ShuffleWord::parse("RLR"), DeckSize(8))(0), 5u);
}

TEST(Words, ConnectionIdentitiesUpTo2000) {
  for (std::uint32_t d = 2; d <= 2000; d += 2) {
    const Permutation l = gen(Letter::L, d), r = gen(Letter::R, d), i = gen(Letter::I, d), o = gen(Letter::O, d),
                      v = gen(Letter::V, d);
    ASSERT_EQ(compose(l, i), v) << d;
    ASSERT_EQ(compose(i, l), v) << d;
    ASSERT_EQ(compose(r, o), v) << d;
    ASSERT_EQ(compose(o, r), v) << d;
    ASSERT_EQ(l, compose(inverse(i), v)) << d;
    ASSERT_EQ(r, compose(inverse(o), v)) << d;
  }
}

TEST(Words, RightShuffleIsOuterSwapPlusInnerLeftShuffle) {
  for (std::uint32_t d = 4; d <= 200; d += 2) {
    const Permutation r = gen(Letter::R, d);
    const Permutation inner_left = gen(Letter::L, d - 2);
    ASSERT_EQ(r(0), d - 1);
    ASSERT_EQ(r(d - 1), 0u);
    for (Point i = 1; i + 1 < d; ++i) ASSERT_EQ(r(i), inner_left(i - 1) + 1) << d << " " << i;
  }
}

TEST(Words, RandomWordsStayCentrallySymmetric) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    const DeckSize deck(2 * (1 + rng() % 100));
    const ShuffleWord w = random_word(rng() % 12, rng);
    ASSERT_TRUE(is_centrally_symmetric(word_to_permutation(w, deck))) << w.to_string();
  }
}

TEST(Words, ReversalPowers) {
  auto p = [](const char* word, std::uint32_t d) { return word_to_permutation(ShuffleWord::parse(word), DeckSize(d)); };
  const Permutation v12 = gen(Letter::V, 12);
  EXPECT_EQ(power(gen(Letter::I, 12), 6), v12);
  EXPECT_EQ(power(gen(Letter::L, 12), 6), v12);
  const Permutation v24 = gen(Letter::V, 24);
  EXPECT_EQ(power(gen(Letter::I, 24), 10), v24);
  EXPECT_EQ(power(gen(Letter::L, 24), 10), v24);
  EXPECT_EQ(p("IIIIII", 12), v12);
  for (unsigned k = 1; k <= 10; ++k) {
    const std::uint32_t d = 1u << k;
    const Permutation v = gen(Letter::V, d);
    EXPECT_EQ(power(gen(Letter::I, d), k), v) << k;
    EXPECT_EQ(power(gen(k % 2 == 0 ? Letter::L : Letter::R, d), k), v) << k;
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(-2, 53), 52u);
  EXPECT_EQ(multiplicative_order(-2, 9), brute_multiplicative_order(-2, 9));
  EXPECT_EQ(multiplicative_order(-2, 9), 3u);
  EXPECT_EQ(multiplicative_order(1, 17), 1u);
  EXPECT_EQ(multiplicative_order(-2, 51), 8u);
  EXPECT_THROW(multiplicative_order(-2, 50), std::invalid_argument);
  EXPECT_THROW(multiplicative_order(3, 1), std::invalid_argument);
}

TEST(MultiplicativeOrder, AgreesWithBruteForce) {
  for (std::int64_t m = 2; m < 400; ++m) {
    for (std::int64_t a = -5; a <= 5; ++a) {
      if (std::gcd(((a % m) + m) % m, m) != 1) {
        EXPECT_THROW(multiplicative_order(a, m), std::invalid_argument);
        continue;
      }
      ASSERT_EQ(multiplicative_order(a, static_cast<std::uint64_t>(m)), brute_multiplicative_order(a, m));
    }
  }
}

TEST(ShuffleOrder, Examples) {
  EXPECT_EQ(shuffle_order(Pile::left, DeckSize(52)), 52u);
  EXPECT_EQ(shuffle_order(Pile::right, DeckSize(52)), 8u);
  EXPECT_EQ(shuffle_order(Pile::right, DeckSize(6)), 4u);
  EXPECT_EQ(shuffle_order(Pile::right, DeckSize(6)), repeated_order(image_of(gen(Letter::R, 6))));
  EXPECT_EQ(shuffle_order(Pile::left, DeckSize(6)), 6u);
  EXPECT_EQ(shuffle_order(Pile::right, DeckSize(2)), 2u);
  EXPECT_EQ(shuffle_order(Pile::left, DeckSize(2)), 1u);
}

TEST(ShuffleOrder, AgreesWithCycleStructure) {
  for (std::uint32_t d = 2; d <= 2000; d += 2) {
    ASSERT_EQ(shuffle_order(Pile::left, DeckSize(d)), element_order(gen(Letter::L, d))) << d;
    ASSERT_EQ(shuffle_order(Pile::right, DeckSize(d)), element_order(gen(Letter::R, d))) << d;
  }
}
