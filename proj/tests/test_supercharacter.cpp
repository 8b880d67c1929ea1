#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

namespace mca {
namespace {

using test::cv;
using test::ints;
using test::monoid;

const std::vector<std::string> kSmall{"trivial.json", "c2.json", "c3.json", "s3.json", "a4.json",
                                      "s4.json",      "sl23.json", "gl23.json", "s3xs3.json"};

// Coefficient vectors c in [0, box]^m whose expansion lies in M, reduced to
// the irreducible ones.
std::vector<CharVector> brute_coefficients(const SupertheoryData& t, const MonoidPresentation& m, long box) {
  const std::size_t k = t.size();
  std::vector<IntVector> in;
  IntVector c = vec::zeros(k);
  for (;;) {
    if (!vec::is_zero(c) && member(detail::expand_sigma(t.sigma, c), m)) in.push_back(c);
    std::size_t pos = 0;
    while (pos < k && ++c[pos] > box) c[pos++] = 0;
    if (pos == k) break;
  }
  std::set<IntVector> all(in.begin(), in.end());
  std::vector<CharVector> out;
  for (const auto& x : in) {
    bool reducible = false;
    for (const auto& y : in)
      if (y != x && vec::dominated(y, x) && all.count(vec::sub(x, y))) reducible = true;
    if (!reducible) out.emplace_back(x);
  }
  return out;
}

TEST(Sigma, S3Theories) {
  auto& d = test::dataset("s3.json");
  auto classical = theory_of(d, "classical");
  EXPECT_EQ(classical.sigma, (std::vector<CharVector>{cv({1, 0, 0}), cv({0, 1, 0}), cv({0, 0, 2})}));
  auto maximal = theory_of(d, "maximal");
  EXPECT_EQ(maximal.sigma, (std::vector<CharVector>{cv({1, 0, 0}), cv({0, 1, 2})}));
  EXPECT_THROW(theory_of(d, "nonesuch"), Error);
}

TEST(Sigma, SumsToRegularOnEveryDataset) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    for (const auto& theory : {"classical", "maximal"}) {
      auto t = theory_of(d, theory);
      IntVector sum = vec::zeros(d.rank());
      for (const auto& s : t.sigma) sum = vec::add(sum, s.coords());
      EXPECT_EQ(sum, regular_vector(d.degrees()).coords()) << name;
    }
  }
}

TEST(Sigma, BadPartitionsAreRejected) {
  auto degrees = ints({1, 1, 2});
  EXPECT_THROW(make_supertheory("x", {{1}, {2}}, degrees), Error);
  EXPECT_THROW(make_supertheory("x", {{1}, {2, 2}, {3}}, degrees), Error);
  EXPECT_THROW(make_supertheory("x", {{0}, {1, 2}}, degrees), Error);
}

TEST(Validation, BundledTheoriesAreValid) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    for (const auto& spec : d.supertheories) {
      auto t = theory_of(d, spec.name);
      auto v = validate_supertheory(t, d.char_values);
      EXPECT_TRUE(v.valid()) << name << " " << spec.name;
      if (d.char_values) EXPECT_EQ(v.constant_on_superclasses, true) << name;
    }
  }
}

TEST(Validation, MergingTheTrivialBlockIsInvalid) {
  auto& d = test::dataset("s3.json");
  auto t = make_supertheory("merged", {{1, 2}, {3}}, d.degrees(), std::vector<std::vector<std::size_t>>{{1}, {2, 3}});
  auto v = validate_supertheory(t, d.char_values);
  EXPECT_FALSE(v.valid());
  EXPECT_FALSE(v.issues.empty());
}

TEST(Validation, MissingSuperclassesGiveANotice) {
  auto& d = test::dataset("s3.json");
  auto v = validate_supertheory(make_supertheory("bare", {{1}, {2, 3}}, d.degrees()), d.char_values);
  EXPECT_TRUE(v.valid());
  EXPECT_FALSE(v.notices.empty());
}

TEST(SuperMonoid, MaximalSL23ContainsTheSecondSigma) {
  auto& d = test::dataset("sl23.json");
  auto sm = super_monoid(theory_of(d, "maximal"), hilbert_basis(d));
  EXPECT_EQ(sm.coefficients, monoid(2, {{1, 0}, {0, 1}}));
  EXPECT_TRUE(member(cv({0, 1}), sm.coefficients));
}

TEST(SuperMonoid, GeneratorsExpandToIrreducibleMembers) {
  for (const auto& name : kSmall) {
    auto& d = test::dataset(name);
    auto m = hilbert_basis(d);
    for (const auto& theory : {"classical", "maximal"}) {
      auto sm = super_monoid(theory_of(d, theory), m);
      for (std::size_t i = 0; i < sm.coefficients.size(); ++i) {
        EXPECT_TRUE(member(detail::expand_sigma(sm.theory.sigma, sm.coefficients[i].coords()), m)) << name;
        std::vector<CharVector> others;
        for (std::size_t j = 0; j < sm.coefficients.size(); ++j)
          if (j != i) others.push_back(sm.coefficients[j]);
        EXPECT_FALSE(member(sm.coefficients[i], MonoidPresentation(sm.coefficients.rank(), others))) << name;
      }
    }
  }
}

TEST(SuperMonoid, ClassicalMatchesBoxEnumeration) {
  for (const auto& name : {"s3.json", "a4.json", "s4.json", "sl23.json"}) {
    auto& d = test::dataset(name);
    auto m = hilbert_basis(d);
    auto t = theory_of(d, "classical");
    auto sm = super_monoid(t, m);
    for (const auto& g : sm.coefficients.generators())
      for (std::size_t i = 0; i < g.rank(); ++i) ASSERT_LE(g[i], 3) << name;
    EXPECT_EQ(sm.coefficients, MonoidPresentation(t.size(), brute_coefficients(t, m, 3))) << name;
  }
}

TEST(SuperMonoid, ClassicalEqualsMonoidWhenDegreesAreOne) {
  for (const auto& name : {"trivial.json", "c2.json", "c3.json"}) {
    auto& d = test::dataset(name);
    EXPECT_EQ(super_monoid(theory_of(d, "classical"), hilbert_basis(d)).coefficients, hilbert_basis(d)) << name;
  }
}

TEST(SuperMonoid, ConeSolverAgreesWithCompletion) {
  std::mt19937 rng(47);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 2 + rng() % 2;
    auto m = minimal_generators(test::random_monoid(rng, r, 2 + rng() % 3, 2));
    std::vector<Integer> degrees(r);
    degrees[0] = 1;
    for (std::size_t j = 1; j < r; ++j) degrees[j] = test::uniform(rng, 1, 3);
    auto t = make_supertheory("random", test::random_blocks(rng, r), degrees);
    IntMatrix sys = detail::super_system(t.sigma, m);
    ASSERT_EQ(minimal_solutions_by_cone(sys), minimal_homogeneous_solutions(sys)) << "case " << it;
  }
}

TEST(CQuasi, MaximalExponentIsTheAramataAlpha) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    if (d.rank() < 2) continue;
    auto m = hilbert_basis(d);
    auto q = c_quasi_monomial(theory_of(d, "maximal"), m);
    ASSERT_TRUE(q) << name;
    EXPECT_EQ(q->exponents[0], 1) << name;
    EXPECT_EQ(q->exponents[1], aramata(m, d.degrees()).alpha) << name;
  }
}

TEST(CAlmost, ClassicalAgreesWithClassify) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    auto m = hilbert_basis(d);
    EXPECT_EQ(c_almost_monomial(theory_of(d, "classical"), m).almost_monomial(),
              classify(m, d.degrees()).almost_monomial)
        << name;
  }
}

TEST(CAlmost, MaximalTheoryIsAlwaysAlmostMonomial) {
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    EXPECT_TRUE(c_almost_monomial(theory_of(d, "maximal"), hilbert_basis(d)).almost_monomial()) << name;
  }
}

TEST(CAlmost, PairwiseAndProductFormsAgree) {
  std::size_t cases = 0;
  auto check = [&](const GroupCharData& d, const SupertheoryData& t, const MonoidPresentation& m) {
    auto rep = c_almost_monomial(t, m);
    EXPECT_EQ(rep.pairwise, rep.product) << d.name << " " << t.name;
    for (const auto& [kl, c] : rep.pairwise_witnesses) {
      EXPECT_GT(c[kl.first], 0);
      EXPECT_EQ(c[kl.second], 0);
    }
    for (const auto& [l, c] : rep.product_witnesses)
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i] == 0, i == l);
    ++cases;
  };
  for (const auto& name : test::dataset_names()) {
    auto& d = test::dataset(name);
    auto m = hilbert_basis(d);
    check(d, theory_of(d, "classical"), m);
    check(d, theory_of(d, "maximal"), m);
  }
  std::mt19937 rng(53);
  while (cases < 200) {
    auto& d = test::dataset(kSmall[rng() % kSmall.size()]);
    check(d, make_supertheory("random", test::random_blocks(rng, d.rank()), d.degrees()), hilbert_basis(d));
  }
}

TEST(SuperQuotient, SL23Classical) {
  auto& g = test::dataset("sl23.json");
  auto& a4 = test::dataset("a4.json");
  auto& c3 = test::dataset("c3.json");
  EXPECT_TRUE(super_quotient_check(g, theory_of(g, "classical"), {1, 2, 3, 7}, a4, theory_of(a4, "classical")));
  EXPECT_TRUE(super_quotient_check(g, theory_of(g, "classical"), {1, 2, 3}, c3, theory_of(c3, "classical")));
  EXPECT_THROW(super_quotient_check(g, theory_of(g, "maximal"), {1, 2, 3}, c3, theory_of(c3, "maximal")), Error);
}

TEST(SuperProduct, KnownProducts) {
  auto& t = test::dataset("trivial.json");
  EXPECT_TRUE(super_product_check(t, theory_of(t, "classical"), t, theory_of(t, "classical"), t));
  auto& s3 = test::dataset("s3.json");
  auto& s3s3 = test::dataset("s3xs3.json");
  EXPECT_TRUE(super_product_check(s3, theory_of(s3, "classical"), s3, theory_of(s3, "classical"), s3s3));
  EXPECT_NO_THROW(super_product_check(s3, theory_of(s3, "maximal"), s3, theory_of(s3, "maximal"), s3s3));
  auto& sl23 = test::dataset("sl23.json");
  auto& c2 = test::dataset("c2.json");
  EXPECT_TRUE(super_product_check(sl23, theory_of(sl23, "maximal"), c2, theory_of(c2, "maximal"),
                                  test::dataset("sl23xc2.json")));
  EXPECT_THROW(super_product_check(s3, theory_of(s3, "classical"), s3, theory_of(s3, "classical"), sl23), Error);
}

TEST(SuperMonoid, BudgetExhaustionIsReported) {
  auto& d = test::dataset("a6.json");
  try {
    super_monoid(theory_of(d, "classical"), hilbert_basis(d), SolverBudget{1000});
    FAIL() << "expected a resource limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

}  // namespace
}  // namespace mca
