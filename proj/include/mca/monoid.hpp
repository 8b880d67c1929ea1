#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"

namespace mca {

/// A character written in the basis Irr(G): nonnegative coordinates, one per
/// irreducible. The zero vector is the zero character.
class CharVector {
 public:
  CharVector() = default;
  explicit CharVector(IntVector coords) : coords_(std::move(coords)) {
    if (!vec::is_nonnegative(coords_))
      fail(ErrorKind::InvariantViolation, "character coordinates must be nonnegative");
  }
  static CharVector zero(std::size_t rank) { return CharVector(vec::zeros(rank)); }
  static CharVector unit(std::size_t rank, std::size_t i) { return CharVector(vec::unit(rank, i)); }

  std::size_t rank() const noexcept { return coords_.size(); }
  const IntVector& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  Integer total() const { return vec::total(coords_); }
  bool is_zero() const { return vec::is_zero(coords_); }
  bool in_support(std::size_t i) const { return coords_[i] != 0; }

  friend CharVector operator+(const CharVector& a, const CharVector& b) {
    return CharVector(vec::add(a.coords_, b.coords_));
  }
  friend CharVector operator*(const Integer& k, const CharVector& a) {
    return CharVector(vec::scale(a.coords_, k));
  }
  friend bool operator==(const CharVector& a, const CharVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const CharVector& a, const CharVector& b) { return !(a == b); }
  friend bool operator<(const CharVector& a, const CharVector& b) { return a.coords_ < b.coords_; }

 private:
  IntVector coords_;
};

/// Canonical generator order: total degree ascending, then monomial lex with
/// x1 > x2 > ... (larger coordinate tuples first).
inline bool canonical_less(const IntVector& a, const IntVector& b) {
  Integer ta = vec::total(a), tb = vec::total(b);
  if (ta != tb) return ta < tb;
  return b < a;
}

inline bool canonical_less(const CharVector& a, const CharVector& b) {
  return canonical_less(a.coords(), b.coords());
}

/// Finite generating set of an affine submonoid of N^rank. Zero and duplicate
/// generators are dropped on construction; the rest is kept in canonical order.
class MonoidPresentation {
 public:
  MonoidPresentation() = default;
  MonoidPresentation(std::size_t rank, std::vector<CharVector> generators) : rank_(rank) {
    std::set<IntVector> seen;
    for (auto& g : generators) {
      if (g.rank() != rank)
        fail(ErrorKind::RankMismatch, "generator of rank " + std::to_string(g.rank()) +
                                          " in a monoid of rank " + std::to_string(rank));
      if (g.is_zero() || !seen.insert(g.coords()).second) {
        ++dropped_;
        continue;
      }
      generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end(),
              [](const CharVector& a, const CharVector& b) { return canonical_less(a, b); });
  }

  static MonoidPresentation from_rows(std::size_t rank, const std::vector<IntVector>& rows) {
    std::vector<CharVector> gens;
    gens.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.size() != rank)
        fail(ErrorKind::RankMismatch, "row of length " + std::to_string(r.size()) +
                                          " in a monoid of rank " + std::to_string(rank));
      gens.emplace_back(r);
    }
    return MonoidPresentation(rank, std::move(gens));
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<CharVector>& generators() const noexcept { return generators_; }
  const CharVector& operator[](std::size_t i) const { return generators_[i]; }
  /// Number of zero or duplicate inputs removed during construction.
  std::size_t dropped() const noexcept { return dropped_; }

  /// p × rank matrix whose rows are the generators.
  IntMatrix matrix() const {
    IntMatrix m(generators_.size(), rank_);
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = 0; j < rank_; ++j) m(i, j) = generators_[i][j];
    return m;
  }

  friend bool operator==(const MonoidPresentation& a, const MonoidPresentation& b) {
    return a.rank_ == b.rank_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<CharVector> generators_;
  std::size_t dropped_ = 0;
};

/// Witness that a vector lies in a monoid: generator index -> positive count.
struct DecompositionCertificate {
  std::map<std::size_t, Integer> multiplicities;

  CharVector expand(const MonoidPresentation& m) const {
    IntVector sum = vec::zeros(m.rank());
    for (const auto& [i, k] : multiplicities)
      for (std::size_t j = 0; j < m.rank(); ++j) sum[j] += k * m[i][j];
    return CharVector(std::move(sum));
  }
};

namespace detail {

// Depth-first decomposition over a fixed generator list. At each node the
// search branches only on generators covering one chosen coordinate of the
// residual (the one with fewest candidates), and residuals proven
// undecomposable are remembered.
class MembershipSearch {
 public:
  explicit MembershipSearch(const std::vector<const IntVector*>& gens) : gens_(gens) {}

  std::optional<std::vector<Integer>> run(const IntVector& target) {
    counts_.assign(gens_.size(), Integer(0));
    if (!descend(target)) return std::nullopt;
    return counts_;
  }

 private:
  bool descend(const IntVector& residual) {
    if (vec::is_zero(residual)) return true;
    if (dead_.count(residual) != 0) return false;
    std::optional<std::size_t> branch_coord;
    std::vector<std::size_t> branch;
    for (std::size_t j = 0; j < residual.size(); ++j) {
      if (residual[j] == 0) continue;
      std::vector<std::size_t> cands;
      for (std::size_t g = 0; g < gens_.size(); ++g)
        if ((*gens_[g])[j] != 0 && vec::dominated(*gens_[g], residual)) cands.push_back(g);
      if (!branch_coord || cands.size() < branch.size()) {
        branch_coord = j;
        branch = std::move(cands);
        if (branch.empty()) break;
      }
    }
    for (std::size_t g : branch) {
      counts_[g] += 1;
      if (descend(vec::sub(residual, *gens_[g]))) return true;
      counts_[g] -= 1;
    }
    dead_.insert(residual);
    return false;
  }

  std::vector<const IntVector*> gens_;
  std::vector<Integer> counts_;
  std::unordered_set<IntVector, IntVectorHash> dead_;
};

inline std::optional<DecompositionCertificate> decompose(const IntVector& target,
                                                         const std::vector<const IntVector*>& gens,
                                                         const std::vector<std::size_t>& labels) {
  MembershipSearch search(gens);
  auto counts = search.run(target);
  if (!counts) return std::nullopt;
  DecompositionCertificate cert;
  for (std::size_t i = 0; i < counts->size(); ++i)
    if ((*counts)[i] != 0) cert.multiplicities[labels[i]] = (*counts)[i];
  return cert;
}

}  // namespace detail

/// Certificate iff v lies in the monoid generated by m. Exact and complete.
inline std::optional<DecompositionCertificate> member(const CharVector& v, const MonoidPresentation& m) {
  if (v.rank() != m.rank())
    fail(ErrorKind::RankMismatch, "vector of rank " + std::to_string(v.rank()) +
                                      " tested against a monoid of rank " + std::to_string(m.rank()));
  std::vector<const IntVector*> gens;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    gens.push_back(&m[i].coords());
    labels.push_back(i);
  }
  return detail::decompose(v.coords(), gens, labels);
}

/// The unique minimal generating subset (the Hilbert basis of the monoid).
inline MonoidPresentation minimal_generators(const MonoidPresentation& m) {
  std::vector<CharVector> kept;
  std::vector<const IntVector*> kept_ptrs;
  std::vector<std::size_t> labels;
  // canonical order is by ascending total degree, and a generator can only
  // decompose over generators of strictly smaller total degree
  for (const auto& g : m.generators()) {
    if (!detail::decompose(g.coords(), kept_ptrs, labels)) {
      kept.push_back(g);
      labels.push_back(labels.size());
      kept_ptrs.clear();
      for (const auto& k : kept) kept_ptrs.push_back(&k.coords());
    }
  }
  return MonoidPresentation(m.rank(), std::move(kept));
}

inline bool is_minimized(const MonoidPresentation& m) { return minimal_generators(m) == m; }

inline bool monoid_equal(const MonoidPresentation& a, const MonoidPresentation& b) {
  if (a.rank() != b.rank())
    fail(ErrorKind::RankMismatch, "comparing monoids of ranks " + std::to_string(a.rank()) + " and " +
                                      std::to_string(b.rank()));
  for (const auto& g : a.generators())
    if (!member(g, b)) return false;
  for (const auto& g : b.generators())
    if (!member(g, a)) return false;
  return true;
}

/// Generators of {v ∈ M : support(v) ⊆ keep}, re-indexed so that new
/// coordinate t is old coordinate keep[t] (0-based).
inline MonoidPresentation restrict_support(const MonoidPresentation& m, const std::vector<std::size_t>& keep) {
  std::vector<bool> kept(m.rank(), false);
  for (auto k : keep) {
    if (k >= m.rank() || kept[k])
      fail(ErrorKind::IndexMismatch, "restriction index " + std::to_string(k + 1) +
                                         " is out of range or repeated");
    kept[k] = true;
  }
  std::vector<CharVector> out;
  for (const auto& g : m.generators()) {
    bool inside = true;
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!kept[j] && g.in_support(j)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    IntVector r(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) r[t] = g[keep[t]];
    out.emplace_back(std::move(r));
  }
  return MonoidPresentation(keep.size(), std::move(out));
}

/// All outer products g ⊗ h, flattened row-major (entry (s,t) at s·rank(b)+t).
inline MonoidPresentation outer_product_monoid(const MonoidPresentation& a, const MonoidPresentation& b) {
  std::vector<CharVector> out;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      IntVector r(a.rank() * b.rank());
      for (std::size_t s = 0; s < a.rank(); ++s)
        for (std::size_t t = 0; t < b.rank(); ++t) r[s * b.rank() + t] = g[s] * h[t];
      out.emplace_back(std::move(r));
    }
  return MonoidPresentation(a.rank() * b.rank(), std::move(out));
}

/// (d_1, ..., d_r), the regular character. The first degree is the trivial one.
inline CharVector regular_vector(const std::vector<Integer>& degrees) {
  if (degrees.empty()) fail(ErrorKind::BadDegrees, "no character degrees given");
  if (degrees.front() != 1)
    fail(ErrorKind::BadDegrees, "the first degree must be 1 (trivial character first)");
  for (const auto& d : degrees)
    if (d <= 0) fail(ErrorKind::BadDegrees, "character degrees must be positive");
  return CharVector(degrees);
}

}  // namespace mca
