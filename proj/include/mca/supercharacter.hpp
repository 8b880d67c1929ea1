#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mca/classify.hpp"
#include "mca/cone.hpp"
#include "mca/cyclotomic.hpp"
#include "mca/dataset.hpp"
#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"
#include "mca/monoid.hpp"

namespace mca {

/// A partition of Irr(G) into blocks X_1, ..., X_m (0-based indices, the block
/// holding the trivial character first, the rest by smallest member) with
/// sigma_i = Σ_{j ∈ X_i} d_j·e_j.
struct SupertheoryData {
  std::string name;
  std::vector<std::vector<std::size_t>> blocks;
  std::optional<std::vector<std::vector<std::size_t>>> superclasses;  ///< 0-based class indices
  std::vector<CharVector> sigma;

  std::size_t size() const { return blocks.size(); }
};

namespace detail {

inline void check_partition(const std::vector<std::vector<std::size_t>>& parts, std::size_t n, const std::string& what) {
  std::vector<bool> seen(n, false);
  for (const auto& b : parts) {
    if (b.empty()) fail(ErrorKind::BadPartition, what + " partition has an empty block");
    for (auto i : b) {
      if (i >= n) fail(ErrorKind::BadPartition, what + " index " + std::to_string(i + 1) + " is out of range");
      if (seen[i]) fail(ErrorKind::BadPartition, what + " index " + std::to_string(i + 1) + " occurs twice");
      seen[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) fail(ErrorKind::BadPartition, what + " index " + std::to_string(i + 1) + " is in no block");
}

inline std::vector<std::vector<std::size_t>> canonical_blocks(std::vector<std::vector<std::size_t>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace detail

/// sigma_i = Σ_{j ∈ X_i} d_j·e_j for 0-based blocks, in the given order.
inline std::vector<CharVector> sigma_vectors(const std::vector<std::vector<std::size_t>>& blocks,
                                             const std::vector<Integer>& degrees) {
  detail::check_partition(blocks, degrees.size(), "character");
  std::vector<CharVector> out;
  for (const auto& b : blocks) {
    IntVector s = vec::zeros(degrees.size());
    for (auto j : b) s[j] = degrees[j];
    out.emplace_back(std::move(s));
  }
  return out;
}

/// Theory from 1-based block lists; blocks are put in canonical order.
inline SupertheoryData make_supertheory(const std::string& name,
                                        const std::vector<std::vector<std::size_t>>& blocks_one_based,
                                        const std::vector<Integer>& degrees,
                                        const std::optional<std::vector<std::vector<std::size_t>>>& classes_one_based = {}) {
  auto zero_based = [](const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& b : parts) {
      std::vector<std::size_t> z;
      for (auto i : b) {
        if (i == 0) fail(ErrorKind::BadPartition, "indices are 1-based");
        z.push_back(i - 1);
      }
      out.push_back(std::move(z));
    }
    return out;
  };
  SupertheoryData t;
  t.name = name;
  auto raw = zero_based(blocks_one_based);
  detail::check_partition(raw, degrees.size(), "character");
  t.blocks = detail::canonical_blocks(std::move(raw));
  if (classes_one_based) t.superclasses = detail::canonical_blocks(zero_based(*classes_one_based));
  t.sigma = sigma_vectors(t.blocks, degrees);
  return t;
}

inline SupertheoryData theory_of(const GroupCharData& d, const std::string& name) {
  if (const auto* spec = d.find_theory(name)) return make_supertheory(spec->name, spec->blocks, d.degrees(), spec->superclasses);
  if (name == "classical") {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t j = 1; j <= d.rank(); ++j) blocks.push_back({j});
    return make_supertheory(name, blocks, d.degrees());
  }
  if (name == "maximal") {
    std::vector<std::vector<std::size_t>> blocks{{1}};
    if (d.rank() > 1) {
      blocks.emplace_back();
      for (std::size_t j = 2; j <= d.rank(); ++j) blocks.back().push_back(j);
    }
    return make_supertheory(name, blocks, d.degrees());
  }
  fail(ErrorKind::BadPartition, "dataset " + d.name + " has no supercharacter theory named \"" + name + "\"");
}

struct SupertheoryValidation {
  std::vector<std::string> issues;
  /// Constancy of each sigma on each superclass; empty when values are absent.
  std::optional<bool> constant_on_superclasses;
  std::vector<std::string> notices;

  bool valid() const { return issues.empty() && constant_on_superclasses.value_or(true); }
};

/// Structural checks, plus constancy of Σ_{ψ∈X} ψ(1)ψ on every superclass
/// when character values are supplied.
inline SupertheoryValidation validate_supertheory(const SupertheoryData& t, const std::optional<CyclotomicTable>& values,
                                                  std::optional<std::size_t> class_count = {}) {
  SupertheoryValidation rep;
  const std::size_t r = t.sigma.empty() ? 0 : t.sigma.front().rank();
  detail::check_partition(t.blocks, r, "character");
  if (t.blocks.empty() || t.blocks.front() != std::vector<std::size_t>{0})
    rep.issues.push_back("the trivial character does not form its own block");
  if (!t.superclasses) {
    rep.notices.push_back("no superclasses given; class-side axioms not checked");
    if (values) rep.notices.push_back("character values present but unused without superclasses");
    return rep;
  }
  const auto& classes = *t.superclasses;
  std::size_t c = 0;
  for (const auto& k : classes)
    for (auto i : k) c = std::max(c, i + 1);
  if (class_count) c = *class_count;
  if (values && !values->values.empty()) c = values->values.front().size();
  detail::check_partition(classes, c, "class");
  if (classes.front() != std::vector<std::size_t>{0}) rep.issues.push_back("the identity class is not a singleton superclass");
  if (classes.size() != t.blocks.size())
    rep.issues.push_back(std::to_string(t.blocks.size()) + " character blocks but " + std::to_string(classes.size()) +
                         " superclasses");
  if (!values) {
    rep.notices.push_back("no character values; constancy not checked");
    return rep;
  }
  const auto& tab = *values;
  if (tab.values.size() != r) fail(ErrorKind::BadCyclotomicData, "value table has the wrong number of characters");
  for (const auto& row : tab.values) {
    if (row.size() != c) fail(ErrorKind::BadCyclotomicData, "value table has the wrong number of classes");
    for (const auto& v : row)
      if (v.size() != tab.conductor) fail(ErrorKind::BadCyclotomicData, "value has the wrong number of coordinates");
  }
  cyclo::Poly phi = cyclo::cyclotomic_polynomial(tab.conductor);
  bool constant = true;
  for (std::size_t b = 0; b < t.blocks.size() && constant; ++b) {
    auto sigma_at = [&](std::size_t cls) {
      IntVector s = vec::zeros(tab.conductor);
      for (auto j : t.blocks[b]) s = vec::add(s, vec::scale(tab.values[j][cls], t.sigma[b][j]));
      return s;
    };
    for (const auto& k : classes) {
      IntVector base = sigma_at(k.front());
      for (auto cls : k)
        if (!cyclo::is_zero(vec::sub(sigma_at(cls), base), phi)) {
          constant = false;
          rep.issues.push_back("sigma of block " + std::to_string(b + 1) + " is not constant on superclass containing class " +
                               std::to_string(k.front() + 1));
          break;
        }
    }
  }
  rep.constant_on_superclasses = constant;
  return rep;
}

namespace detail {

/// Rows of λ·A − c·Σ = 0: generators first, then −sigma_i.
inline IntMatrix super_system(const std::vector<CharVector>& sigma, const MonoidPresentation& m) {
  std::vector<IntVector> rows;
  for (const auto& g : m.generators()) rows.push_back(g.coords());
  for (const auto& s : sigma) rows.push_back(vec::scale(s.coords(), -1));
  return IntMatrix::from_rows(rows, m.rank());
}

inline CharVector expand_sigma(const std::vector<CharVector>& sigma, const IntVector& c) {
  IntVector out = vec::zeros(sigma.front().rank());
  for (std::size_t i = 0; i < sigma.size(); ++i) out = vec::add(out, vec::scale(sigma[i].coords(), c[i]));
  return CharVector(out);
}

inline MonoidPresentation coefficient_monoid(const std::vector<CharVector>& sigma, const MonoidPresentation& m,
                                             const SolverBudget& budget) {
  if (std::all_of(sigma.begin(), sigma.end(), [&](const CharVector& s) { return member(s, m); })) {
    std::vector<CharVector> units;
    for (std::size_t i = 0; i < sigma.size(); ++i) units.emplace_back(vec::unit(sigma.size(), i));
    return MonoidPresentation(sigma.size(), std::move(units));
  }
  IntMatrix sys = super_system(sigma, m);
  std::vector<CharVector> cs;
  for (const auto& x : minimal_solutions_by_cone(sys, budget))
    cs.emplace_back(IntVector(x.begin() + static_cast<std::ptrdiff_t>(m.size()), x.end()));
  return minimal_generators(MonoidPresentation(sigma.size(), std::move(cs)));
}

}  // namespace detail

/// M(G,C) = Ch(G,C) ∩ M(G) in coefficient coordinates c ↦ Σ c_i·sigma_i.
struct SuperMonoid {
  SupertheoryData theory;
  MonoidPresentation coefficients;
};

inline SuperMonoid super_monoid(const SupertheoryData& t, const MonoidPresentation& m, const SolverBudget& budget = {}) {
  if (!t.sigma.empty() && t.sigma.front().rank() != m.rank())
    fail(ErrorKind::RankMismatch, "theory and monoid have different ranks");
  return {t, detail::coefficient_monoid(t.sigma, m, budget)};
}

struct CQuasiReport {
  std::vector<Integer> exponents;  ///< a_i ≥ 1 minimal with a_i·sigma_i ∈ M
  std::vector<DecompositionCertificate> certificates;
};

inline std::optional<CQuasiReport> c_quasi_monomial(const SupertheoryData& t, const MonoidPresentation& m) {
  CQuasiReport rep;
  for (const auto& s : t.sigma) {
    auto w = smallest_multiple_in(s, m);
    if (!w) return std::nullopt;
    rep.exponents.push_back(w->multiple);
    rep.certificates.push_back(std::move(w->certificate));
  }
  return rep;
}

struct CAlmostReport {
  /// (k, l) -> c with c_k > 0, c_l = 0 and Σ c_i·sigma_i ∈ M, for k ≠ l (0-based).
  std::map<std::pair<std::size_t, std::size_t>, IntVector> pairwise_witnesses;
  /// l -> c with c_l = 0, c_i > 0 otherwise and Σ c_i·sigma_i ∈ M.
  std::map<std::size_t, IntVector> product_witnesses;
  bool pairwise = true;
  bool product = true;

  bool almost_monomial() const { return pairwise; }
};

/// Both forms of the C-almost-monomial condition, each decided exactly over
/// the rationals; every witness is re-verified by membership.
inline CAlmostReport c_almost_monomial(const SupertheoryData& t, const MonoidPresentation& m) {
  const std::size_t p = m.size();
  const std::size_t k_count = t.size();
  IntMatrix sys = detail::super_system(t.sigma, m);
  auto touching = [&](std::size_t l) {
    std::vector<std::size_t> z{p + l};
    for (std::size_t i = 0; i < p; ++i)
      for (auto j : t.blocks[l])
        if (m[i].in_support(j)) {
          z.push_back(i);
          break;
        }
    return z;
  };
  auto verified = [&](const IntVector& x) {
    IntVector c(x.begin() + static_cast<std::ptrdiff_t>(p), x.end());
    if (!member(detail::expand_sigma(t.sigma, c), m))
      fail(ErrorKind::InvariantViolation, "C-almost-monomial witness failed membership");
    return c;
  };
  CAlmostReport rep;
  for (std::size_t l = 0; l < k_count; ++l) {
    auto zero = touching(l);
    for (std::size_t k = 0; k < k_count; ++k) {
      if (k == l) continue;
      if (auto x = nonnegative_solution_with(sys, {p + k}, zero))
        rep.pairwise_witnesses[{k, l}] = verified(*x);
      else
        rep.pairwise = false;
    }
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < k_count; ++i)
      if (i != l) positive.push_back(p + i);
    if (auto x = nonnegative_solution_with(sys, positive, zero))
      rep.product_witnesses[l] = verified(*x);
    else
      rep.product = false;
  }
  return rep;
}

/// Theory blocks of G inside the quotient set, mapped to the quotient's
/// character numbering, must be exactly the quotient theory's blocks; then the
/// coefficient monoids agree under that block matching.
inline bool super_quotient_check(const GroupCharData& g, const SupertheoryData& t,
                                 const std::vector<std::size_t>& quotient_indices, const GroupCharData& q,
                                 const SupertheoryData& tq, const SolverBudget& budget = {}) {
  if (quotient_indices.size() != q.rank())
    fail(ErrorKind::IndexMismatch, "index list length differs from the quotient's character count");
  auto keep = detail::to_zero_based(quotient_indices, g.rank());
  std::map<std::size_t, std::size_t> to_q;
  for (std::size_t s = 0; s < keep.size(); ++s) to_q[keep[s]] = s;

  std::vector<std::size_t> inside;                // blocks of t inside the quotient set
  std::vector<std::vector<std::size_t>> mapped;   // their images in q numbering
  for (std::size_t b = 0; b < t.size(); ++b) {
    std::vector<std::size_t> img;
    for (auto j : t.blocks[b])
      if (auto it = to_q.find(j); it != to_q.end()) img.push_back(it->second);
    if (img.empty()) continue;
    if (img.size() != t.blocks[b].size())
      fail(ErrorKind::IndexMismatch, "block " + std::to_string(b + 1) + " straddles the quotient index set");
    std::sort(img.begin(), img.end());
    inside.push_back(b);
    mapped.push_back(img);
  }
  std::vector<std::size_t> order;  // order[s] = position in `inside` matching tq block s
  for (const auto& blk : tq.blocks) {
    auto it = std::find(mapped.begin(), mapped.end(), blk);
    if (it == mapped.end()) fail(ErrorKind::IndexMismatch, "quotient theory blocks do not match the restricted theory");
    order.push_back(static_cast<std::size_t>(it - mapped.begin()));
  }
  if (order.size() != mapped.size())
    fail(ErrorKind::IndexMismatch, "quotient theory blocks do not match the restricted theory");

  MonoidPresentation hg = hilbert_basis(g);
  // coefficient monoid of G restricted to the blocks inside the quotient set
  std::vector<CharVector> sigma;
  for (auto pos : order) sigma.push_back(t.sigma[inside[pos]]);
  MonoidPresentation left = detail::coefficient_monoid(sigma, hg, budget);
  MonoidPresentation right = detail::coefficient_monoid(tq.sigma, hilbert_basis(q), budget);
  return monoid_equal(left, right);
}

/// The product theory on A×B (row-major character pairing) has blocks
/// X_s × Y_t ordered row-major in (s, t).
inline std::vector<CharVector> product_sigma(const SupertheoryData& ta, const SupertheoryData& tb,
                                             const GroupCharData& ab, std::size_t rank_b) {
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& x : ta.blocks)
    for (const auto& y : tb.blocks) {
      std::vector<std::size_t> blk;
      for (auto i : x)
        for (auto j : y) blk.push_back(i * rank_b + j);
      std::sort(blk.begin(), blk.end());
      blocks.push_back(std::move(blk));
    }
  return sigma_vectors(blocks, ab.degrees());
}

inline bool super_product_check(const GroupCharData& a, const SupertheoryData& ta, const GroupCharData& b,
                                const SupertheoryData& tb, const GroupCharData& ab, const SolverBudget& budget = {}) {
  if (ab.rank() != a.rank() * b.rank())
    fail(ErrorKind::IndexMismatch, "product data has the wrong number of characters");
  for (std::size_t s = 0; s < a.rank(); ++s)
    for (std::size_t u = 0; u < b.rank(); ++u)
      if (ab.irr[s * b.rank() + u].degree != a.irr[s].degree * b.irr[u].degree)
        fail(ErrorKind::IndexMismatch, "product characters are not the row-major pairing of the factors");
  MonoidPresentation ma = super_monoid(ta, hilbert_basis(a), budget).coefficients;
  MonoidPresentation mb = super_monoid(tb, hilbert_basis(b), budget).coefficients;
  MonoidPresentation mab = detail::coefficient_monoid(product_sigma(ta, tb, ab, b.rank()), hilbert_basis(ab), budget);
  return monoid_equal(outer_product_monoid(ma, mb), mab);
}

}  // namespace mca
