#include "unshuffle/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace unshuffle;
using namespace unshuffle::testing;

namespace {

const Permutation kL6({2, 5, 1, 4, 0, 3});
const Permutation kI6({1, 3, 5, 0, 2, 4});
const Permutation kR6({5, 2, 4, 1, 3, 0});
const Permutation kV6({5, 4, 3, 2, 1, 0});

constexpr int kIterations = 500;

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 3, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<Point>{}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::size_t{0}), std::invalid_argument);
}

TEST(Permutation, Compose) {
  EXPECT_EQ(compose(Permutation({1, 0}), Permutation({1, 0})), Permutation(2));
  EXPECT_EQ(compose(kL6, kI6), kV6);
  EXPECT_EQ(compose(Permutation(6), kR6), kR6);
  EXPECT_THROW(compose(kL6, Permutation(4)), std::invalid_argument);
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(kV6), kV6);
  // Preimage search oracle: [4,2,0,5,3,1].
  EXPECT_EQ(image_of(inverse(kL6)), search_inverse(image_of(kL6)));
  EXPECT_EQ(inverse(kL6), Permutation({4, 2, 0, 5, 3, 1}));
  EXPECT_EQ(inverse(Permutation(7)), Permutation(7));
}

TEST(Permutation, Parity) {
  EXPECT_EQ(parity(kV6), Sign::minus());
  EXPECT_EQ(parity(kL6), Sign::minus());
  EXPECT_EQ(parity(Permutation(9)), Sign::plus());
}

TEST(Permutation, ElementOrder) {
  EXPECT_EQ(element_order(kV6), 2u);
  EXPECT_EQ(element_order(Permutation(3)), 1u);
  EXPECT_EQ(element_order(kR6), repeated_order(image_of(kR6)));
}

TEST(Permutation, ElementOrderOverflowIsReported) {
  // Cycles of every prime length up to 113 sum to 1480 points; their lcm
  // is far beyond 2^64.
  std::vector<Point> image;
  const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                        53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  Point start = 0;
  for (int p : primes) {
    for (int i = 0; i < p; ++i) image.push_back(start + static_cast<Point>((i + 1) % p));
    start += static_cast<Point>(p);
  }
  EXPECT_THROW(element_order(Permutation(image)), std::overflow_error);
}

TEST(Permutation, CentralSymmetry) {
  EXPECT_TRUE(is_centrally_symmetric(kL6));
  EXPECT_TRUE(is_centrally_symmetric(kV6));
  EXPECT_FALSE(is_centrally_symmetric(Permutation({1, 2, 0, 3, 4, 5})));
  EXPECT_THROW(is_centrally_symmetric(Permutation(5)), std::invalid_argument);
}

TEST(Permutation, Phi) {
  EXPECT_EQ(phi(kV6), PairPermutation({0, 1, 2}));
  EXPECT_EQ(phi(kL6), PairPermutation({2, 0, 1}));
  EXPECT_EQ(phi(Permutation(6)), PairPermutation({0, 1, 2}));
  EXPECT_THROW(phi(Permutation({1, 2, 0, 3, 4, 5})), std::invalid_argument);
}

TEST(Permutation, SgnBar) {
  EXPECT_EQ(sgn_bar(kV6), Sign::plus());
  EXPECT_EQ(sgn_bar(kL6), Sign::plus());
  EXPECT_EQ(sgn_bar(kR6), Sign::minus());
  EXPECT_THROW(sgn_bar(Permutation({1, 2, 0, 3, 4, 5})), std::invalid_argument);
}

TEST(Permutation, TextForms) {
  EXPECT_EQ(to_image_string(kL6), "2,5,1,4,0,3");
  EXPECT_EQ(to_cycle_string(kL6), "(0 2 1 5 3 4)");
  EXPECT_EQ(to_cycle_string(Permutation(4)), "()");
  EXPECT_EQ(to_cycle_string(kV6), "(0 5)(1 4)(2 3)");
  EXPECT_EQ(parse_image_string("2,5,1,4,0,3"), kL6);
  EXPECT_EQ(parse_cycle_string("(0 2 1 5 3 4)", 6), kL6);
  EXPECT_EQ(parse_cycle_string("()", 3), Permutation(3));
  EXPECT_THROW(parse_image_string("1,1"), std::invalid_argument);
  EXPECT_THROW(parse_image_string("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_cycle_string("(0 1)(1 2)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycle_string("(0 9)", 3), std::invalid_argument);
}

TEST(Permutation, ArrangementIsTheInverseMap) {
  EXPECT_EQ(arrangement(kL6), (std::vector<Point>{4, 2, 0, 5, 3, 1}));
  EXPECT_EQ(from_arrangement({4, 2, 0, 5, 3, 1}), kL6);
  EXPECT_EQ(to_arrangement_string(kR6), "5,3,1,4,2,0");
}

TEST(PermutationProperty, BijectionAndTextRoundTrip) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < kIterations; ++it) {
    const Permutation p = random_permutation(1 + rng() % 100, rng);
    std::vector<Point> sorted(p.image().begin(), p.image().end());
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, identity_image(p.degree()));
    EXPECT_EQ(parse_image_string(to_image_string(p)), p);
    EXPECT_EQ(parse_cycle_string(to_cycle_string(p), p.degree()), p);
  }
}

TEST(PermutationProperty, GroupLaws) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t d = 1 + rng() % 100;
    const Permutation a = random_permutation(d, rng);
    const Permutation b = random_permutation(d, rng);
    const Permutation c = random_permutation(d, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
    EXPECT_TRUE(compose(a, inverse(a)).is_identity());
    EXPECT_EQ(image_of(compose(a, b)), apply_then(image_of(a), image_of(b)));
  }
}

TEST(PermutationProperty, ParityIsAHomomorphismAndMatchesInversions) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t d = 1 + rng() % 100;
    const Permutation a = random_permutation(d, rng);
    const Permutation b = random_permutation(d, rng);
    EXPECT_EQ(parity(compose(a, b)), parity(a) * parity(b));
    EXPECT_EQ(parity(a).value(), inversion_sign(image_of(a)));
  }
}

TEST(PermutationProperty, ElementOrderMatchesRepeatedApplication) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 200; ++it) {
    const Permutation p = random_permutation(1 + rng() % 30, rng);
    const std::uint64_t k = element_order(p);
    EXPECT_EQ(k, repeated_order(image_of(p)));
    EXPECT_TRUE(power(p, static_cast<std::int64_t>(k)).is_identity());
    for (const auto& cyc : cycles(p)) EXPECT_EQ(k % cyc.size(), 0u);
  }
}

TEST(PermutationProperty, PhiHomomorphismAndClosure) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < kIterations; ++it) {
    const std::size_t n = 1 + rng() % 40;
    const Permutation a = random_centrally_symmetric(n, rng);
    const Permutation b = random_centrally_symmetric(n, rng);
    ASSERT_TRUE(is_centrally_symmetric(a));
    EXPECT_TRUE(is_centrally_symmetric(compose(a, b)));
    EXPECT_TRUE(is_centrally_symmetric(inverse(a)));
    EXPECT_EQ(phi(compose(a, b)).as_permutation(), compose(phi(a).as_permutation(), phi(b).as_permutation()));
    EXPECT_EQ(sgn_bar(compose(a, b)), sgn_bar(a) * sgn_bar(b));
  }
}

TEST(PermutationProperty, PowerAgreesWithRepeatedCompose) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 100; ++it) {
    const Permutation p = random_permutation(1 + rng() % 20, rng);
    Permutation acc(p.degree());
    for (int e = 0; e < 12; ++e) {
      EXPECT_EQ(power(p, e), acc);
      EXPECT_EQ(power(p, -e), inverse(acc));
      acc = compose(acc, p);
    }
  }
}
