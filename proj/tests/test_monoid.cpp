#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

namespace mca {
namespace {

using test::cv;
using test::monoid;

// Brute-force membership: some multiset of generators sums to v.
bool sub_sum_member(const IntVector& v, const std::vector<CharVector>& gens, std::size_t from = 0) {
  if (vec::is_zero(v)) return true;
  for (std::size_t i = from; i < gens.size(); ++i)
    if (vec::dominated(gens[i].coords(), v) && sub_sum_member(vec::sub(v, gens[i].coords()), gens, i)) return true;
  return false;
}

TEST(CharVector, RejectsNegativeEntries) { EXPECT_THROW(CharVector(test::ints({1, -1})), Error); }

TEST(MonoidPresentation, DropsZeroAndDuplicatesAndSorts) {
  auto m = monoid(2, {{1, 1}, {0, 0}, {0, 1}, {1, 1}, {2, 0}});
  EXPECT_EQ(m.dropped(), 2u);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0], cv({0, 1}));
  EXPECT_EQ(m[1], cv({2, 0}));
  EXPECT_EQ(m[2], cv({1, 1}));
  EXPECT_THROW(monoid(2, {{1, 0, 0}}), Error);
}

TEST(Member, Examples) {
  auto sl23 = hilbert_basis(test::dataset("sl23.json"));
  auto zero = member(CharVector::zero(7), sl23);
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->multiplicities.empty());
  auto cert = member(cv({0, 0, 0, 1, 1, 1, 0}), sl23);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->expand(sl23), cv({0, 0, 0, 1, 1, 1, 0}));
  EXPECT_FALSE(member(CharVector::unit(7, 3), sl23));
  EXPECT_THROW(member(cv({1, 0}), sl23), Error);
}

TEST(Member, AgreesWithSubSumSearch) {
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    auto m = test::random_monoid(rng, 3, 2 + rng() % 3, 3);
    IntVector v(3);
    for (auto& x : v) x = test::uniform(rng, 0, 7);
    auto cert = member(CharVector(v), m);
    ASSERT_EQ(cert.has_value(), sub_sum_member(v, m.generators()));
    if (cert) EXPECT_EQ(cert->expand(m).coords(), v);
  }
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(minimal_generators(monoid(2, {{1, 0}, {0, 1}, {1, 1}})), monoid(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(minimal_generators(monoid(1, {{2}, {3}})), monoid(1, {{2}, {3}}));
  auto sl23 = hilbert_basis(test::dataset("sl23.json"));
  EXPECT_EQ(sl23, monoid(7, {{1, 0, 0, 0, 0, 0, 0},
                             {0, 1, 0, 0, 0, 0, 0},
                             {0, 0, 1, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 1},
                             {0, 0, 0, 1, 1, 0, 0},
                             {0, 0, 0, 1, 0, 1, 0},
                             {0, 0, 0, 0, 1, 1, 0},
                             {0, 0, 0, 1, 1, 1, 0}}));
}

TEST(MinimalGenerators, KeptAreIrreducibleDroppedDecompose) {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto m = test::random_monoid(rng, 3, 3 + rng() % 4, 3);
    auto h = minimal_generators(m);
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::vector<CharVector> others;
      for (std::size_t j = 0; j < h.size(); ++j)
        if (j != i) others.push_back(h[j]);
      EXPECT_FALSE(sub_sum_member(h[i].coords(), others));
    }
    for (const auto& g : m.generators()) EXPECT_TRUE(sub_sum_member(g.coords(), h.generators()));
    EXPECT_EQ(minimal_generators(h), h);
    EXPECT_TRUE(is_minimized(h));
  }
}

TEST(MonoidEqual, Examples) {
  EXPECT_TRUE(monoid_equal(monoid(1, {{1}}), monoid(1, {{1}, {2}})));
  EXPECT_FALSE(monoid_equal(monoid(1, {{2}}), monoid(1, {{3}})));
  EXPECT_THROW(monoid_equal(monoid(1, {{1}}), monoid(2, {{1, 0}})), Error);
  auto s3 = hilbert_basis(test::dataset("s3.json"));
  EXPECT_TRUE(monoid_equal(sl2_conjecture_generators(1), s3));
}

TEST(MonoidEqual, IsAnEquivalence) {
  std::mt19937 rng(9);
  for (int it = 0; it < 200; ++it) {
    auto a = test::random_monoid(rng, 2, 2 + rng() % 2, 2);
    auto b = test::random_monoid(rng, 2, 2 + rng() % 2, 2);
    auto c = test::random_monoid(rng, 2, 2 + rng() % 2, 2);
    EXPECT_TRUE(monoid_equal(a, a));
    EXPECT_EQ(monoid_equal(a, b), monoid_equal(b, a));
    if (monoid_equal(a, b) && monoid_equal(b, c)) EXPECT_TRUE(monoid_equal(a, c));
    EXPECT_TRUE(monoid_equal(a, minimal_generators(a)));
  }
}

TEST(RestrictSupport, Examples) {
  auto sl23 = hilbert_basis(test::dataset("sl23.json"));
  auto r = restrict_support(sl23, {0, 1, 2, 6});
  EXPECT_EQ(r, monoid(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(restrict_support(sl23, {0, 1, 2, 3, 4, 5, 6}), sl23);
  EXPECT_EQ(restrict_support(monoid(2, {{1, 1}, {1, 0}}), {0}), monoid(1, {{1}}));
}

TEST(RestrictSupport, MembershipIsPreserved) {
  std::mt19937 rng(13);
  for (int it = 0; it < 200; ++it) {
    auto m = test::random_monoid(rng, 4, 4, 2);
    std::vector<std::size_t> keep{0, 2};
    auto r = restrict_support(m, keep);
    IntVector small{Integer(test::uniform(rng, 0, 4)), Integer(test::uniform(rng, 0, 4))};
    IntVector full = vec::zeros(4);
    full[0] = small[0];
    full[2] = small[1];
    EXPECT_EQ(member(CharVector(full), m).has_value(), member(CharVector(small), r).has_value());
  }
}

TEST(OuterProduct, Examples) {
  auto units3 = monoid(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto p = outer_product_monoid(units3, units3);
  EXPECT_EQ(p.rank(), 9u);
  EXPECT_EQ(p.size(), 9u);
  for (const auto& g : p.generators()) EXPECT_EQ(g.total(), 1);
  EXPECT_EQ(outer_product_monoid(monoid(1, {{2}}), monoid(1, {{3}})), monoid(1, {{6}}));
}

TEST(OuterProduct, GeneratorsHaveRankOne) {
  std::mt19937 rng(19);
  for (int it = 0; it < 50; ++it) {
    auto a = test::random_monoid(rng, 2, 2, 3);
    auto b = test::random_monoid(rng, 3, 2, 3);
    auto p = outer_product_monoid(a, b);
    for (const auto& g : p.generators()) {
      IntMatrix m(2, 3);
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 3; ++t) m(s, t) = g[s * 3 + t];
      EXPECT_EQ(integer_rank(m), 1u);
    }
  }
}

TEST(RegularVector, Examples) {
  EXPECT_EQ(regular_vector(test::ints({1, 1, 1, 2, 2, 2, 3})), cv({1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(regular_vector(test::ints({1})), cv({1}));
  EXPECT_EQ(regular_vector(test::ints({1, 5, 5, 8, 8, 9, 10})), cv({1, 5, 5, 8, 8, 9, 10}));
  EXPECT_THROW(regular_vector(test::ints({2, 1})), Error);
}

}  // namespace
}  // namespace mca
