#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mca/dataset.hpp"
#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"
#include "mca/monoid.hpp"
#include "mca/toric.hpp"

namespace mca {

struct ClassificationReport {
  bool monomial = false;
  bool quasi_monomial = false;
  std::optional<std::vector<Integer>> quasi_exponents;  ///< a_j with a_j·e_j minimal generators
  bool almost_monomial = false;
  /// (j, k) -> index of a generator with coordinate j positive and k zero (0-based).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> am_witnesses;
  bool factorial = false;
  std::size_t hilbert_basis_size = 0;
};

inline void require_minimized(const MonoidPresentation& m) {
  if (!is_minimized(m)) fail(ErrorKind::NotMinimized, "generators are not the minimal generating set");
}

inline ClassificationReport classify(const MonoidPresentation& m, const std::vector<Integer>& degrees) {
  if (degrees.size() != m.rank())
    fail(ErrorKind::RankMismatch, "degree list length differs from the monoid rank");
  require_minimized(m);
  const std::size_t r = m.rank();
  ClassificationReport rep;
  rep.hilbert_basis_size = m.size();

  // quasi-monomial: one generator a_j·e_j per coordinate and nothing else
  std::vector<Integer> exps(r, Integer(0));
  bool axis_only = m.size() == r;
  for (const auto& g : m.generators()) {
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (g.in_support(j)) {
        ++nz;
        at = j;
      }
    if (nz != 1 || exps[at] != 0) {
      axis_only = false;
      break;
    }
    exps[at] = g[at];
  }
  rep.quasi_monomial = axis_only;
  if (axis_only) {
    rep.quasi_exponents = exps;
    rep.monomial = std::all_of(exps.begin(), exps.end(), [](const Integer& a) { return a == 1; });
  }

  rep.almost_monomial = true;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      if (j == k) continue;
      std::optional<std::size_t> w;
      for (std::size_t i = 0; i < m.size() && !w; ++i)
        if (m[i].in_support(j) && !m[i].in_support(k)) w = i;
      if (w)
        rep.am_witnesses[{j, k}] = *w;
      else
        rep.almost_monomial = false;
    }
  if (!rep.almost_monomial) rep.am_witnesses.clear();
  rep.factorial = is_factorial(m);
  return rep;
}

/// Generators (0-based, canonical order) whose supports avoid coordinate k
/// and together cover every other coordinate; none if impossible.
inline std::optional<std::vector<std::size_t>> support_cover(const MonoidPresentation& m, std::size_t k) {
  if (k >= m.rank()) fail(ErrorKind::IndexMismatch, "coordinate " + std::to_string(k + 1) + " is out of range");
  std::vector<bool> covered(m.rank(), false);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].in_support(k)) continue;
    bool fresh = false;
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (m[i].in_support(j) && !covered[j]) fresh = true;
    if (!fresh) continue;
    chosen.push_back(i);
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (m[i].in_support(j)) covered[j] = true;
  }
  for (std::size_t j = 0; j < m.rank(); ++j)
    if (j != k && !covered[j]) return std::nullopt;
  return chosen;
}

struct MultipleWitness {
  Integer multiple;
  DecompositionCertificate certificate;
};

/// Smallest a ≥ 1 with a·v ∈ M, with a decomposition of a·v; none when no
/// positive multiple of v lies in M.
inline std::optional<MultipleWitness> smallest_multiple_in(const CharVector& v, const MonoidPresentation& m) {
  if (v.is_zero()) return MultipleWitness{1, {}};
  std::vector<IntVector> rows;
  for (const auto& g : m.generators()) rows.push_back(g.coords());
  rows.push_back(vec::scale(v.coords(), -1));
  IntMatrix sys = IntMatrix::from_rows(rows, m.rank());
  auto x = nonnegative_solution_with(sys, {m.size()});
  if (!x) return std::nullopt;
  // (*x).back()·v is a member, so the ladder stops by then
  const Integer bound = x->back();
  for (Integer a = 1; a <= bound; ++a)
    if (auto cert = member(a * v, m)) return MultipleWitness{a, *cert};
  fail(ErrorKind::InvariantViolation, "rational solution did not lift to a monoid member");
}

struct AramataReport {
  Integer alpha;
  std::vector<Integer> alphas;
  std::vector<DecompositionCertificate> certificates;  ///< alphas[j]·(Reg − e_j)
};

inline AramataReport aramata(const MonoidPresentation& m, const std::vector<Integer>& degrees) {
  if (degrees.size() != m.rank())
    fail(ErrorKind::RankMismatch, "degree list length differs from the monoid rank");
  CharVector reg = regular_vector(degrees);
  AramataReport rep;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    IntVector v = reg.coords();
    v[j] -= 1;
    auto w = smallest_multiple_in(CharVector(v), m);
    if (!w)
      fail(ErrorKind::NoSolution, "no positive multiple of Reg - e" + std::to_string(j + 1) + " lies in the monoid");
    rep.alphas.push_back(w->multiple);
    rep.certificates.push_back(std::move(w->certificate));
  }
  rep.alpha = rep.alphas.front();
  return rep;
}

/// Square matrix as rows.
using SquareRows = std::vector<IntVector>;

struct Prop24Verdict {
  bool first_row_trivial = false;
  bool almost_monomial = false;
  Integer determinant;
  bool permutation = false;
  /// det = ±1, first row e_1, almost-monomial pattern, yet not a permutation.
  bool violation() const { return first_row_trivial && almost_monomial && abs(determinant) == 1 && !permutation; }
};

inline bool rows_almost_monomial(const SquareRows& rows) {
  const std::size_t r = rows.empty() ? 0 : rows.front().size();
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      if (j == k) continue;
      bool found = false;
      for (const auto& row : rows)
        if (row[j] != 0 && row[k] == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

inline bool is_permutation_matrix(const SquareRows& rows) {
  const std::size_t r = rows.size();
  std::vector<bool> used(r, false);
  for (const auto& row : rows) {
    std::optional<std::size_t> at;
    for (std::size_t j = 0; j < r; ++j) {
      if (row[j] == 0) continue;
      if (row[j] != 1 || at) return false;
      at = j;
    }
    if (!at || used[*at]) return false;
    used[*at] = true;
  }
  return true;
}

inline Prop24Verdict prop24_screen(const SquareRows& rows) {
  const std::size_t r = rows.size();
  for (const auto& row : rows)
    if (row.size() != r) fail(ErrorKind::LengthMismatch, "matrix is not square");
  Prop24Verdict v;
  v.first_row_trivial = r > 0 && rows.front() == vec::unit(r, 0);
  v.almost_monomial = rows_almost_monomial(rows);
  v.determinant = determinant(IntMatrix::from_rows(rows, r));
  v.permutation = is_permutation_matrix(rows);
  return v;
}

/// Nonnegative r×r matrices with entries ≤ bound, first row e_1, the
/// almost-monomial pattern and |det| = 1 that are not permutation matrices.
/// Rows 2..r are enumerated in one fixed order (by zero pattern, then by
/// value), so each matrix is reported once up to reordering of those rows.
inline std::vector<SquareRows> prop24_harness(std::size_t r, const Integer& bound) {
  if (r == 0) fail(ErrorKind::IndexMismatch, "rank must be positive");
  if (bound < 1) fail(ErrorKind::IndexMismatch, "entry bound must be at least 1");
  std::vector<SquareRows> out;
  const std::size_t free_rows = r - 1;
  const std::size_t cells = free_rows * r;
  if (cells >= 8 * sizeof(std::size_t)) fail(ErrorKind::ResourceLimit, "rank too large for exhaustive search");
  const std::size_t patterns = std::size_t{1} << cells;

  for (std::size_t pat = 0; pat < patterns; ++pat) {
    // zero pattern first: the almost-monomial condition depends on nothing else
    SquareRows shape(r, vec::zeros(r));
    shape[0][0] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> nonzero;
    bool empty_row = false;
    for (std::size_t i = 0; i < free_rows; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < r; ++j)
        if (pat >> (i * r + j) & 1) {
          shape[i + 1][j] = 1;
          nonzero.emplace_back(i + 1, j);
          any = true;
        }
      if (!any) empty_row = true;
    }
    if (empty_row || !rows_almost_monomial(shape)) continue;
    // rows ordered by pattern, then by value among equal patterns
    auto row_pattern = [&](std::size_t i) { return pat >> (i * r) & ((std::size_t{1} << r) - 1); };
    bool ordered = true;
    for (std::size_t i = 1; i < free_rows; ++i)
      if (row_pattern(i - 1) < row_pattern(i)) ordered = false;
    if (!ordered) continue;

    std::vector<Integer> vals(nonzero.size(), Integer(1));
    for (;;) {
      SquareRows m = shape;
      for (std::size_t t = 0; t < nonzero.size(); ++t) m[nonzero[t].first][nonzero[t].second] = vals[t];
      bool decreasing = true;
      for (std::size_t i = 1; i + 1 < r; ++i)
        if (row_pattern(i - 1) == row_pattern(i) && !(m[i + 1] < m[i])) decreasing = false;
      if (decreasing && abs(determinant(IntMatrix::from_rows(m, r))) == 1 && !is_permutation_matrix(m))
        out.push_back(m);
      std::size_t pos = 0;
      while (pos < vals.size()) {
        vals[pos] += 1;
        if (vals[pos] <= bound) break;
        vals[pos] = 1;
        ++pos;
      }
      if (pos == vals.size()) break;
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& idx, std::size_t rank) {
  std::vector<std::size_t> out;
  for (auto i : idx) {
    if (i == 0 || i > rank)
      fail(ErrorKind::IndexMismatch, "index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace detail

/// M(G) ∩ span{x_i : i ∈ indices} equals M(G/N), indices 1-based and in the
/// quotient's character order.
inline bool quotient_check(const GroupCharData& g, const std::vector<std::size_t>& quotient_indices,
                           const GroupCharData& q) {
  if (quotient_indices.size() != q.rank())
    fail(ErrorKind::IndexMismatch, std::to_string(quotient_indices.size()) + " indices for a quotient with " +
                                       std::to_string(q.rank()) + " characters");
  auto keep = detail::to_zero_based(quotient_indices, g.rank());
  for (std::size_t t = 0; t < keep.size(); ++t)
    if (g.irr[keep[t]].degree != q.irr[t].degree)
      fail(ErrorKind::IndexMismatch, "degree of character " + std::to_string(quotient_indices[t]) +
                                         " differs from quotient character " + std::to_string(t + 1));
  return monoid_equal(restrict_support(hilbert_basis(g), keep), hilbert_basis(q));
}

/// Outer products of M(A) and M(B) generate M(A×B); ab's characters are
/// paired row-major.
inline bool product_check(const GroupCharData& a, const GroupCharData& b, const GroupCharData& ab) {
  if (ab.rank() != a.rank() * b.rank())
    fail(ErrorKind::IndexMismatch, "product data has " + std::to_string(ab.rank()) + " characters, expected " +
                                       std::to_string(a.rank() * b.rank()));
  for (std::size_t s = 0; s < a.rank(); ++s)
    for (std::size_t t = 0; t < b.rank(); ++t)
      if (ab.irr[s * b.rank() + t].degree != a.irr[s].degree * b.irr[t].degree)
        fail(ErrorKind::IndexMismatch, "product character " + std::to_string(s * b.rank() + t + 1) +
                                           " is not the row-major pairing of the factors");
  return monoid_equal(outer_product_monoid(hilbert_basis(a), hilbert_basis(b)), hilbert_basis(ab));
}

/// Exponent vectors of the conjectured generators of M(SL(2,2^n)).
inline MonoidPresentation sl2_conjecture_generators(std::size_t n) {
  if (n == 0 || n > 20) fail(ErrorKind::IndexMismatch, "n must lie in 1..20");
  const std::size_t q = std::size_t{1} << n;
  const std::size_t rank = q + 1;
  const std::size_t half = q / 2;
  auto x = [&](std::initializer_list<std::size_t> idx) {
    IntVector v = vec::zeros(rank);
    for (auto i : idx) v[i - 1] += 1;
    return CharVector(v);
  };
  std::vector<CharVector> gens;
  gens.push_back(x({1}));
  gens.push_back(x({1, half + 2}));
  for (std::size_t k = half + 3; k <= q + 1; ++k) gens.push_back(x({k}));
  for (std::size_t k = 2; k <= half + 1; ++k) {
    IntVector u = vec::zeros(rank);
    for (std::size_t i = 2; i <= q + 1; ++i)
      if (i != k) u[i - 1] = 1;
    gens.emplace_back(u);
  }
  IntVector v = vec::zeros(rank);
  for (std::size_t i = 2; i <= half + 1; ++i) v[i - 1] = 1;
  gens.emplace_back(v);
  v[half + 1] = 1;
  gens.emplace_back(v);
  return MonoidPresentation(rank, std::move(gens));
}

/// Stable sort of the characters by degree: new position t holds old
/// character perm[t] (0-based). Fails unless the degrees match SL(2,2^n).
inline std::vector<std::size_t> sl2_character_order(std::size_t n, const GroupCharData& data) {
  const std::size_t q = std::size_t{1} << n;
  if (data.rank() != q + 1)
    fail(ErrorKind::IndexMismatch, "SL(2," + std::to_string(q) + ") has " + std::to_string(q + 1) +
                                       " characters, data has " + std::to_string(data.rank()));
  std::vector<std::size_t> perm(data.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return data.irr[a].degree < data.irr[b].degree; });
  std::vector<Integer> expected{1};
  for (std::size_t i = 0; i < q / 2; ++i) expected.emplace_back(q - 1);
  expected.emplace_back(q);
  for (std::size_t i = 0; i + 1 < q / 2; ++i) expected.emplace_back(q + 1);
  for (std::size_t t = 0; t < perm.size(); ++t)
    if (data.irr[perm[t]].degree != expected[t])
      fail(ErrorKind::IndexMismatch, "character degrees do not match SL(2," + std::to_string(q) + ")");
  return perm;
}

inline bool sl2_conjecture_check(std::size_t n, const GroupCharData& data) {
  auto perm = sl2_character_order(n, data);
  MonoidPresentation m = restrict_support(hilbert_basis(data), perm);
  return monoid_equal(sl2_conjecture_generators(n), m);
}

}  // namespace mca
