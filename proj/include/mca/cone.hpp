#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"
#include "mca/monoid.hpp"

namespace mca {

/// The cone spanned by a monoid, described inside the lattice gp(M).
///
/// `lattice_basis` is the Hermite basis of gp(M) (k rows in Z^rank). Rays are
/// ambient vectors, primitive in gp(M). Support normals live in lattice
/// coordinates: y ↦ n·y ≥ 0 for every point y·basis of the cone. When
/// gp(M) = Z^rank the basis is the identity and both descriptions agree.
struct RationalCone {
  std::size_t rank = 0;
  std::vector<IntVector> lattice_basis;
  std::vector<CharVector> rays;
  std::vector<IntVector> normals;

  std::size_t dimension() const { return lattice_basis.size(); }

  std::optional<IntVector> coordinates(const CharVector& v) const {
    if (lattice_basis.empty()) {
      if (v.is_zero()) return IntVector{};
      return std::nullopt;
    }
    return lattice_coordinates(lattice_basis, v.coords());
  }

  /// v ∈ cone ∩ gp(M).
  bool contains(const CharVector& v) const {
    auto y = coordinates(v);
    if (!y) return false;
    for (const auto& n : normals)
      if (vec::dot(n, *y) < 0) return false;
    return true;
  }
};

struct NormalizationOptions {
  SolverBudget budget;
  /// Largest k tried when looking for k·h ∈ M.
  Integer witness_bound = 64;
};

struct ClosureWitness {
  CharVector element;
  Integer multiple;  ///< smallest k ≥ 1 with k·element ∈ M
};

struct NormalizationResult {
  MonoidPresentation original;
  std::vector<CharVector> closure_hilbert_basis;
  std::vector<CharVector> added;
  std::vector<ClosureWitness> witnesses;  ///< one per closure basis element
};

namespace detail {

struct ConeFrame {
  std::vector<IntVector> basis;
  std::vector<IntVector> points;  ///< primitive, deduplicated, lattice coordinates
  std::vector<IntVector> ambient;
  std::vector<std::size_t> initial;  ///< indices of a first independent k-subset
};

inline IntVector to_ambient(const std::vector<IntVector>& basis, const IntVector& y, std::size_t rank) {
  IntVector out = vec::zeros(rank);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < rank; ++j) out[j] += y[i] * basis[i][j];
  return out;
}

/// Frame for the points `ambient` (nonzero, inside the lattice spanned by
/// `basis`), in lattice coordinates.
inline ConeFrame make_frame_in(std::vector<IntVector> basis, const std::vector<IntVector>& ambient, std::size_t rank) {
  ConeFrame f;
  f.basis = std::move(basis);
  std::set<IntVector> seen;
  for (const auto& g : ambient) {
    if (vec::is_zero(g)) continue;
    auto coords = lattice_coordinates(f.basis, g);
    if (!coords) fail(ErrorKind::InvariantViolation, "cone point outside its lattice");
    IntVector y = vec::primitive(*coords);
    if (!seen.insert(y).second) continue;
    f.ambient.emplace_back(to_ambient(f.basis, y, rank));
    f.points.push_back(std::move(y));
  }
  const std::size_t k = f.basis.size();
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < f.points.size() && chosen.size() < k; ++i) {
    chosen.push_back(f.points[i]);
    if (integer_rank(IntMatrix::from_rows(chosen, k)) < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    f.initial.push_back(i);
  }
  return f;
}

inline ConeFrame make_frame(const MonoidPresentation& m) {
  std::vector<IntVector> gens;
  for (const auto& g : m.generators()) gens.push_back(g.coords());
  return make_frame_in(row_lattice_basis(m.matrix()), gens, m.rank());
}

/// Normals of the simplicial cone on k independent rows: n_j·s_i = |det|·δ_ij.
inline std::vector<IntVector> simplex_normals(const std::vector<IntVector>& rows) {
  const std::size_t k = rows.size();
  IntMatrix s = IntMatrix::from_rows(rows, k);
  IntMatrix adj = adjugate(s);
  Integer sign = determinant(s) < 0 ? -1 : 1;
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector n(k);
    for (std::size_t i = 0; i < k; ++i) n[i] = sign * adj(i, j);
    out.push_back(vec::primitive(n));
  }
  return out;
}

/// Support hyperplanes by incremental double description.
inline std::vector<IntVector> support_normals(const ConeFrame& f, const SolverBudget& budget) {
  const std::size_t k = f.basis.size();
  if (k == 0) return {};
  std::vector<IntVector> init_rows;
  for (auto i : f.initial) init_rows.push_back(f.points[i]);
  std::vector<IntVector> normals = simplex_normals(init_rows);

  std::vector<std::size_t> processed = f.initial;
  std::vector<bool> is_initial(f.points.size(), false);
  for (auto i : f.initial) is_initial[i] = true;

  auto zero_set = [&](const IntVector& n) {
    boost::dynamic_bitset<> z(f.points.size());
    for (auto i : processed)
      if (vec::dot(n, f.points[i]) == 0) z.set(i);
    return z;
  };

  for (std::size_t v = 0; v < f.points.size(); ++v) {
    if (is_initial[v]) continue;
    const IntVector& pt = f.points[v];
    std::vector<Integer> val(normals.size());
    bool outside = false;
    for (std::size_t h = 0; h < normals.size(); ++h) {
      val[h] = vec::dot(normals[h], pt);
      if (val[h] < 0) outside = true;
    }
    if (outside) {
      std::vector<boost::dynamic_bitset<>> zs;
      for (const auto& n : normals) zs.push_back(zero_set(n));
      std::vector<IntVector> next;
      std::set<IntVector> seen;
      for (std::size_t h = 0; h < normals.size(); ++h)
        if (val[h] >= 0 && seen.insert(normals[h]).second) next.push_back(normals[h]);
      for (std::size_t p = 0; p < normals.size(); ++p) {
        if (val[p] <= 0) continue;
        for (std::size_t q = 0; q < normals.size(); ++q) {
          if (val[q] >= 0) continue;
          boost::dynamic_bitset<> common = zs[p] & zs[q];
          if (k >= 2 && common.count() < k - 2) continue;
          bool adjacent = true;
          for (std::size_t o = 0; o < normals.size() && adjacent; ++o)
            if (o != p && o != q && common.is_subset_of(zs[o])) adjacent = false;
          if (!adjacent) continue;
          IntVector n = vec::primitive(vec::sub(vec::scale(normals[q], val[p]), vec::scale(normals[p], val[q])));
          if (seen.insert(n).second) next.push_back(std::move(n));
          if (next.size() > budget.nodes)
            fail(ErrorKind::ResourceLimit, "support hyperplane count exceeded budget");
        }
      }
      normals = std::move(next);
    }
    processed.push_back(v);
  }
  std::sort(normals.begin(), normals.end(), [](const IntVector& a, const IntVector& b) { return b < a; });
  return normals;
}

/// Placing triangulation of the frame points (in order). Each simplex is a
/// sorted list of k point indices.
inline std::vector<std::vector<std::size_t>> placing_triangulation(const ConeFrame& f) {
  const std::size_t k = f.basis.size();
  std::vector<std::vector<std::size_t>> simplices;
  if (k == 0) return simplices;
  std::vector<std::size_t> first = f.initial;
  std::sort(first.begin(), first.end());
  simplices.push_back(first);
  if (k == 1) return simplices;

  std::vector<bool> is_initial(f.points.size(), false);
  for (auto i : f.initial) is_initial[i] = true;
  std::map<std::vector<std::size_t>, IntVector> facet_normal;
  // boundary facet -> opposite vertex
  std::map<std::vector<std::size_t>, std::size_t> boundary;
  auto toggle_facets = [&](const std::vector<std::size_t>& s) {
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t t = 0; t < k; ++t)
        if (t != drop) facet.push_back(s[t]);
      auto it = boundary.find(facet);
      if (it != boundary.end())
        boundary.erase(it);
      else
        boundary.emplace(std::move(facet), s[drop]);
    }
  };
  toggle_facets(first);

  for (std::size_t v = 0; v < f.points.size(); ++v) {
    if (is_initial[v]) continue;
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [facet, opposite] : boundary) {
      auto it = facet_normal.find(facet);
      if (it == facet_normal.end()) {
        std::vector<IntVector> rows;
        for (auto i : facet) rows.push_back(f.points[i]);
        IntMatrix fm = IntMatrix::from_rows(rows, k);
        IntVector n = integer_kernel_basis(fm.transpose()).front();
        it = facet_normal.emplace(facet, vec::primitive(n)).first;
      }
      IntVector n = it->second;
      if (vec::dot(n, f.points[opposite]) < 0) n = vec::scale(n, -1);
      if (vec::dot(n, f.points[v]) < 0) {
        std::vector<std::size_t> s = facet;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    for (auto& s : added) {
      toggle_facets(s);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

/// Lattice points of the half-open parallelepiped of a simplicial cone.
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& verts, const SolverBudget& budget) {
  const std::size_t k = verts.size();
  IntMatrix v = IntMatrix::from_rows(verts, k);
  Integer det = determinant(v);
  IntMatrix adj = adjugate(v);
  if (det < 0) {
    det = -det;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) adj(i, j) = -adj(i, j);
  }
  if (det > Integer(budget.nodes))
    fail(ErrorKind::ResourceLimit, "simplicial cone of volume " + det.str() + " exceeds budget");
  std::vector<IntVector> h = row_lattice_basis(v);
  std::vector<Integer> bound(k);
  for (std::size_t i = 0; i < k; ++i) bound[i] = h[i][i];

  std::vector<IntVector> out;
  IntVector y = vec::zeros(k);
  for (;;) {
    IntVector c = vec::zeros(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[j] += y[i] * adj(i, j);
    IntVector pt = vec::zeros(k);
    for (std::size_t i = 0; i < k; ++i) {
      Integer fr = floor_mod(c[i], det);
      if (fr == 0) continue;
      for (std::size_t j = 0; j < k; ++j) pt[j] += fr * verts[i][j];
    }
    for (auto& x : pt) x /= det;
    if (!vec::is_zero(pt)) out.push_back(std::move(pt));
    std::size_t pos = 0;
    while (pos < k) {
      y[pos] += 1;
      if (y[pos] < bound[pos]) break;
      y[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

inline bool in_cone(const std::vector<IntVector>& normals, const IntVector& y) {
  for (const auto& n : normals)
    if (vec::dot(n, y) < 0) return false;
  return true;
}

}  // namespace detail

/// Extreme rays and support hyperplanes of the cone spanned by m.
inline RationalCone cone_from_generators(const MonoidPresentation& m, const SolverBudget& budget = {}) {
  detail::ConeFrame f = detail::make_frame(m);
  RationalCone cone;
  cone.rank = m.rank();
  cone.lattice_basis = f.basis;
  cone.normals = detail::support_normals(f, budget);
  const std::size_t k = f.basis.size();
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    std::vector<IntVector> tight;
    for (const auto& n : cone.normals)
      if (vec::dot(n, f.points[i]) == 0) tight.push_back(n);
    std::size_t rk = tight.empty() ? 0 : integer_rank(IntMatrix::from_rows(tight, k));
    if (rk + 1 == k) cone.rays.emplace_back(f.ambient[i]);
  }
  std::sort(cone.rays.begin(), cone.rays.end(),
            [](const CharVector& a, const CharVector& b) { return canonical_less(a, b); });
  return cone;
}

namespace detail {

/// Candidates from the fundamental parallelepipeds of a placing
/// triangulation, in lattice coordinates, together with the frame points.
inline std::vector<IntVector> parallelepiped_candidates(const ConeFrame& f, const SolverBudget& budget) {
  std::set<IntVector> candidates(f.points.begin(), f.points.end());
  std::vector<std::vector<IntVector>> simplices;
  Integer volume = 0;
  for (const auto& simplex : placing_triangulation(f)) {
    std::vector<IntVector> verts;
    for (auto i : simplex) verts.push_back(f.points[i]);
    volume += abs(determinant(IntMatrix::from_rows(verts, verts.size())));
    simplices.push_back(std::move(verts));
  }
  if (volume > Integer(budget.nodes))
    fail(ErrorKind::ResourceLimit, "triangulation volume " + volume.str() + " exceeds budget");
  for (const auto& verts : simplices)
    for (auto& p : parallelepiped_points(verts, budget)) candidates.insert(std::move(p));
  return {candidates.begin(), candidates.end()};
}

/// Irreducible candidates: x is dropped when x − y lies in the cone for an
/// irreducible y of smaller degree.
template <class InCone>
std::vector<IntVector> reduce_candidates(std::vector<IntVector> candidates, const IntVector& grading, InCone in_cone_fn) {
  std::stable_sort(candidates.begin(), candidates.end(), [&](const IntVector& a, const IntVector& b) {
    return vec::dot(grading, a) < vec::dot(grading, b);
  });
  std::vector<IntVector> irreducible;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : irreducible)
      if (vec::dot(grading, y) < vec::dot(grading, x) && in_cone_fn(vec::sub(x, y))) {
        reducible = true;
        break;
      }
    if (!reducible) irreducible.push_back(x);
  }
  return irreducible;
}

inline IntVector total_degree_grading(const std::vector<IntVector>& basis) {
  IntVector grading(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) grading[i] = vec::total(basis[i]);
  return grading;
}

}  // namespace detail

/// Hilbert basis of cone(M) ∩ gp(M), in canonical order.
inline std::vector<CharVector> closure_hilbert_basis(const MonoidPresentation& m, const SolverBudget& budget = {}) {
  detail::ConeFrame f = detail::make_frame(m);
  if (f.basis.empty()) return {};
  std::vector<IntVector> normals = detail::support_normals(f, budget);
  auto irreducible = detail::reduce_candidates(detail::parallelepiped_candidates(f, budget),
                                               detail::total_degree_grading(f.basis),
                                               [&](const IntVector& y) { return detail::in_cone(normals, y); });
  std::vector<CharVector> out;
  for (const auto& y : irreducible) out.emplace_back(detail::to_ambient(f.basis, y, m.rank()));
  std::sort(out.begin(), out.end(), [](const CharVector& a, const CharVector& b) { return canonical_less(a, b); });
  return out;
}

/// Componentwise-minimal nonzero x ∈ N^rows with x·m = 0, computed as the
/// Hilbert basis of the (normal) solution monoid: extreme rays by double
/// description on the kernel, then parallelepiped enumeration. Same output
/// and order as minimal_homogeneous_solutions.
inline std::vector<IntVector> minimal_solutions_by_cone(const IntMatrix& m, const SolverBudget& budget = {}) {
  const std::size_t n = m.rows();
  std::vector<IntVector> kernel = integer_kernel_basis(m);
  if (kernel.empty()) return {};
  const std::size_t k = kernel.size();

  // extreme rays of {y : y·K ≥ 0} are the facet normals of the cone over K's columns
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = kernel[i][j];
    columns.push_back(std::move(w));
  }
  std::vector<IntVector> identity;
  for (std::size_t i = 0; i < k; ++i) identity.push_back(vec::unit(k, i));
  detail::ConeFrame dual = detail::make_frame_in(identity, columns, k);
  if (dual.initial.size() < k) fail(ErrorKind::InvariantViolation, "kernel columns do not span");
  std::vector<IntVector> rays;
  for (const auto& y : detail::support_normals(dual, budget)) rays.push_back(detail::to_ambient(kernel, y, n));
  if (rays.empty()) return {};

  std::vector<bool> support(n, false);
  for (const auto& x : rays)
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] != 0) support[j] = true;
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < n; ++j)
    if (support[j]) live.push_back(j);
  if (live.size() < n) {
    // coordinates vanishing on every solution: solve on the rest and embed
    std::vector<IntVector> rows;
    for (auto j : live) rows.push_back(m.row(j));
    std::vector<IntVector> out;
    for (const auto& x : minimal_solutions_by_cone(IntMatrix::from_rows(rows, m.cols()), budget)) {
      IntVector full = vec::zeros(n);
      for (std::size_t t = 0; t < live.size(); ++t) full[live[t]] = x[t];
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
      Integer ta = vec::total(a), tb = vec::total(b);
      if (ta != tb) return ta < tb;
      return a < b;
    });
    return out;
  }

  detail::ConeFrame f = detail::make_frame_in(kernel, rays, n);
  auto irreducible =
      detail::reduce_candidates(detail::parallelepiped_candidates(f, budget), detail::total_degree_grading(f.basis),
                                [&](const IntVector& y) { return vec::is_nonnegative(detail::to_ambient(kernel, y, n)); });
  std::vector<IntVector> out;
  for (const auto& y : irreducible) out.push_back(detail::to_ambient(kernel, y, n));
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    Integer ta = vec::total(a), tb = vec::total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return out;
}

/// Smallest k in [1, bound] with k·v ∈ M, if any.
inline std::optional<Integer> smallest_member_multiple(const CharVector& v, const MonoidPresentation& m,
                                                       const Integer& bound) {
  for (Integer k = 1; k <= bound; ++k)
    if (member(k * v, m)) return k;
  return std::nullopt;
}

inline NormalizationResult normalize(const MonoidPresentation& m, const NormalizationOptions& options = {}) {
  NormalizationResult result;
  result.original = m;
  result.closure_hilbert_basis = closure_hilbert_basis(m, options.budget);
  for (const auto& h : result.closure_hilbert_basis) {
    auto k = smallest_member_multiple(h, m, options.witness_bound);
    if (!k)
      fail(ErrorKind::ResourceLimit, "no multiple of a closure element up to " + options.witness_bound.str() +
                                         " lies in the monoid");
    if (*k != 1) result.added.push_back(h);
    result.witnesses.push_back({h, *k});
  }
  return result;
}

inline bool is_normal(const MonoidPresentation& m, const NormalizationOptions& options = {}) {
  return normalize(m, options).added.empty();
}

/// Every Reg − e_j lies in the normalization of M.
inline bool contains_regular_shifts(const MonoidPresentation& m, const std::vector<Integer>& degrees,
                                    const NormalizationOptions& options = {}) {
  if (degrees.size() != m.rank())
    fail(ErrorKind::RankMismatch, "degree list length differs from the monoid rank");
  CharVector reg = regular_vector(degrees);
  MonoidPresentation closure(m.rank(), closure_hilbert_basis(m, options.budget));
  for (std::size_t j = 0; j < m.rank(); ++j) {
    IntVector shift = reg.coords();
    shift[j] -= 1;
    if (!member(CharVector(shift), closure)) return false;
  }
  return true;
}

}  // namespace mca
