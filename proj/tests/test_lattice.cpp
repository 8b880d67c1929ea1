#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "oracles.hpp"
#include "support.hpp"

namespace mca {
namespace {

using test::ints;
using test::matrix;

// Leibniz expansion, independent of the elimination routine.
Integer leibniz_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool is_hermite(const IntMatrix& h) {
  std::optional<std::size_t> prev;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || (prev && c <= *prev) || h(i, c) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, c) < 0 || h(k, c) >= h(i, c)) return false;
    prev = c;
  }
  return true;
}

TEST(HermiteNormalForm, IdentityIsFixed) {
  auto hf = hermite_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(hf.h, IntMatrix::identity(3));
  EXPECT_EQ(hf.u, IntMatrix::identity(3));
}

TEST(HermiteNormalForm, CoprimeColumnCollapses) {
  auto hf = hermite_normal_form(matrix({{2, 0}, {3, 0}}));
  EXPECT_EQ(hf.h.row(0), ints({1, 0}));
  EXPECT_EQ(hf.h.row(1), ints({0, 0}));
  EXPECT_EQ(hf.u * matrix({{2, 0}, {3, 0}}), hf.h);
}

TEST(HermiteNormalForm, SL23GeneratorsGiveIdentityOverZeroRow) {
  auto m = hilbert_basis(test::dataset("sl23.json")).matrix();
  auto hf = hermite_normal_form(m);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(hf.h.row(i), vec::unit(7, i));
  EXPECT_EQ(hf.h.row(7), vec::zeros(7));
  EXPECT_EQ(hf.u * m, hf.h);
}

TEST(HermiteNormalForm, RandomInputsAreCanonicalAndReproduced) {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = test::uniform(rng, -6, 6);
    auto hf = hermite_normal_form(m);
    EXPECT_EQ(hf.u * m, hf.h);
    EXPECT_EQ(abs(leibniz_determinant(hf.u)), 1);
    EXPECT_TRUE(is_hermite(hf.h));
    // a unimodular change of rows leaves the form unchanged
    IntMatrix shuffled = m;
    for (std::size_t i = 1; i < rows; ++i) shuffled.subtract_row(i, i - 1, Integer(test::uniform(rng, -3, 3)));
    if (rows > 1) shuffled.swap_rows(0, rows - 1);
    EXPECT_EQ(hermite_normal_form(shuffled).h, hf.h);
  }
}

TEST(Determinant, AgreesWithLeibnizExpansion) {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = test::uniform(rng, -5, 5);
    Integer det = leibniz_determinant(m);
    ASSERT_EQ(determinant(m), det);
    IntMatrix prod = m * adjugate(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(prod(i, j), i == j ? det : Integer(0));
  }
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(lattice_is_full_unimodular(matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
  EXPECT_FALSE(lattice_is_full_unimodular(matrix({{2}})));
  EXPECT_TRUE(lattice_is_full_unimodular(matrix({{2}, {3}})));
  EXPECT_FALSE(lattice_is_full_unimodular(matrix({{1, 1}, {2, 2}})));
}

TEST(Unimodular, AgreesWithSquareSelection) {
  std::mt19937 rng(17);
  for (int it = 0; it < 200; ++it) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = test::uniform(rng, -2, 2);
    EXPECT_EQ(lattice_is_full_unimodular(m), abs(leibniz_determinant(m)) == 1);
  }
}

TEST(Unimodular, EveryBundledDataset) {
  for (const auto& name : test::dataset_names())
    EXPECT_TRUE(lattice_is_full_unimodular(monoid_of(test::dataset(name)).matrix())) << name;
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(integer_kernel_basis(matrix({{1, 0}, {0, 1}})).empty());
  auto k = integer_kernel_basis(matrix({{1, 1}, {2, 2}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(k[0] == ints({2, -1}) || k[0] == ints({-2, 1}));
}

TEST(Kernel, SL23SpansTheRelation) {
  auto m = hilbert_basis(test::dataset("sl23.json")).matrix();
  auto k = integer_kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  IntVector expected = ints({0, 0, 0, 0, 1, 1, 1, -2});
  EXPECT_TRUE(k[0] == expected || k[0] == vec::scale(expected, -1));
}

TEST(Kernel, RandomBasesAnnihilateAndHaveFullCount) {
  std::mt19937 rng(23);
  for (int it = 0; it < 150; ++it) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = test::uniform(rng, -3, 3);
    auto k = integer_kernel_basis(m);
    EXPECT_EQ(k.size(), rows - integer_rank(m));
    for (const auto& c : k) EXPECT_EQ(m.left_multiply(c), vec::zeros(cols));
  }
}

TEST(MinimalSolutions, Examples) {
  EXPECT_EQ(minimal_homogeneous_solutions(matrix({{2}, {-3}})), std::vector<IntVector>{ints({3, 2})});
  EXPECT_EQ(minimal_homogeneous_solutions(matrix({{1}, {-1}})), std::vector<IntVector>{ints({1, 1})});
  auto sols = minimal_homogeneous_solutions(matrix({{1}, {1}, {-2}}));
  std::vector<IntVector> expected{ints({0, 2, 1}), ints({1, 1, 1}), ints({2, 0, 1})};
  EXPECT_EQ(sols, expected);
  EXPECT_TRUE(minimal_homogeneous_solutions(matrix({{1}, {2}})).empty());
}

TEST(MinimalSolutions, BudgetIsEnforced) {
  SolverBudget tiny{1};
  EXPECT_THROW(
      {
        try {
          minimal_homogeneous_solutions(matrix({{3, 1}, {-5, 2}, {2, -3}, {1, 1}}), tiny);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
          throw;
        }
      },
      Error);
}

TEST(MinimalSolutions, ConeRouteMatchesOnExamples) {
  for (const auto& m : {matrix({{2}, {-3}}), matrix({{1}, {1}, {-2}}), matrix({{1, 0}, {0, 1}, {-1, -1}}),
                        matrix({{1}, {2}})})
    EXPECT_EQ(minimal_solutions_by_cone(m), minimal_homogeneous_solutions(m));
}

TEST(MinimalSolutions, ThreeUnknownsMatchBoxEnumeration) {
  std::mt19937 rng(41);
  for (int it = 0; it < 200; ++it) {
    std::size_t cols = 1 + rng() % 2;
    IntMatrix m(3, cols);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = test::uniform(rng, -4, 4);
    auto cd = minimal_homogeneous_solutions(m);
    auto by_cone = minimal_solutions_by_cone(m);
    EXPECT_EQ(by_cone, cd) << "case " << it;
    std::sort(cd.begin(), cd.end());
    ASSERT_EQ(cd, test::brute_minimal_solutions(m, 40)) << "case " << it;
  }
}

TEST(NonnegativeSolution, DecidesPositivityWithWitness) {
  IntMatrix m = matrix({{1}, {1}, {-2}});
  auto x = nonnegative_solution_with(m, {0}, {1});
  ASSERT_TRUE(x);
  EXPECT_EQ(m.left_multiply(*x), vec::zeros(1));
  EXPECT_GT((*x)[0], 0);
  EXPECT_EQ((*x)[1], 0);
  EXPECT_FALSE(nonnegative_solution_with(m, {2}, {0, 1}));
}

}  // namespace
}  // namespace mca
