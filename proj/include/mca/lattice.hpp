#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mca/errors.hpp"
#include "mca/integer.hpp"

namespace mca {

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        fail(ErrorKind::LengthMismatch, "row " + std::to_string(i) + " has length " +
                                            std::to_string(rows[i].size()) + ", expected " +
                                            std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<IntVector> row_list() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Row vector times matrix: x·M.
  IntVector left_multiply(const IntVector& x) const {
    IntVector out = vec::zeros(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] += x[i] * (*this)(i, j);
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// row[target] -= factor * row[source]
  void subtract_row(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) -= factor * (*this)(source, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteForm {
  IntMatrix h;  ///< row-style Hermite normal form
  IntMatrix u;  ///< unimodular transform with h = u·m
};

/// Row-style Hermite normal form. Pivots are positive, entries above a pivot
/// lie in [0, pivot), zero rows sink to the bottom. The output h is canonical;
/// u is deterministic for a given input.
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    bool found = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (!best || abs(h(i, col)) < abs(h(*best, col))) best = i;
      }
      if (!best) break;
      found = true;
      h.swap_rows(pivot, *best);
      u.swap_rows(pivot, *best);
      bool clean = true;
      for (std::size_t i = pivot + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(pivot, col));
        h.subtract_row(i, pivot, q);
        u.subtract_row(i, pivot, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(pivot, col) < 0) {
      h.negate_row(pivot);
      u.negate_row(pivot);
    }
    for (std::size_t i = 0; i < pivot; ++i) {
      Integer q = floor_div(h(i, col), h(pivot, col));
      h.subtract_row(i, pivot, q);
      u.subtract_row(i, pivot, q);
    }
    ++pivot;
  }
  return {std::move(h), std::move(u)};
}

inline std::size_t integer_rank(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < hf.h.rows(); ++i)
    if (!vec::is_zero(hf.h.row(i))) ++r;
  return r;
}

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
inline std::vector<IntVector> row_lattice_basis(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    IntVector r = hf.h.row(i);
    if (!vec::is_zero(r)) basis.push_back(std::move(r));
  }
  return basis;
}

/// True iff the rows of m generate Z^cols.
inline bool lattice_is_full_unimodular(const IntMatrix& m) {
  std::vector<IntVector> basis = row_lattice_basis(m);
  if (basis.size() != m.cols()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] != vec::unit(m.cols(), i)) return false;
  return true;
}

/// Lattice basis of the left kernel {c : c·m = 0}, itself in Hermite form.
inline std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::vector<IntVector> raw;
  for (std::size_t i = 0; i < hf.h.rows(); ++i)
    if (vec::is_zero(hf.h.row(i))) raw.push_back(hf.u.row(i));
  if (raw.empty()) return {};
  return row_lattice_basis(IntMatrix::from_rows(raw, m.rows()));
}

/// Coordinates y with y·basis = v, where `basis` is a row-Hermite basis
/// (as returned by row_lattice_basis). Empty if v is outside the lattice.
inline std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                                    const IntVector& v) {
  IntVector y = vec::zeros(basis.size());
  IntVector rest = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = 0;
    while (basis[i][p] == 0) ++p;
    if (rest[p] % basis[i][p] != 0) return std::nullopt;
    y[i] = rest[p] / basis[i][p];
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= y[i] * basis[i][j];
  }
  if (!vec::is_zero(rest)) return std::nullopt;
  return y;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorKind::LengthMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// adj(m) with m·adj(m) = det(m)·I.
inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

/// Expansion cap shared by the exhaustive routines.
struct SolverBudget {
  std::uint64_t nodes = 10'000'000;
};

/// Componentwise-minimal nonzero solutions x ∈ N^rows of x·m = 0
/// (Contejean–Devie completion). Output sorted by (total, lexicographic).
inline std::vector<IntVector> minimal_homogeneous_solutions(const IntMatrix& m,
                                                            const SolverBudget& budget = {}) {
  const std::size_t n = m.rows();
  std::vector<IntVector> unit_defect = m.row_list();
  std::vector<IntVector> solutions;
  std::map<IntVector, IntVector> frontier;
  for (std::size_t j = 0; j < n; ++j) frontier.emplace(vec::unit(n, j), unit_defect[j]);

  auto dominates_solution = [&](const IntVector& y) {
    for (const auto& s : solutions)
      if (vec::dominated(s, y)) return true;
    return false;
  };

  std::uint64_t nodes = 0;
  while (!frontier.empty()) {
    for (const auto& [x, d] : frontier)
      if (vec::is_zero(d)) solutions.push_back(x);
    std::map<IntVector, IntVector> next;
    for (const auto& [x, d] : frontier) {
      if (vec::is_zero(d)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (vec::dot(d, unit_defect[j]) >= 0) continue;
        IntVector y = x;
        y[j] += 1;
        if (next.count(y) != 0 || dominates_solution(y)) continue;
        if (++nodes > budget.nodes)
          fail(ErrorKind::ResourceLimit,
               "Diophantine completion exceeded " + std::to_string(budget.nodes) + " nodes");
        next.emplace(std::move(y), vec::add(d, unit_defect[j]));
      }
    }
    frontier = std::move(next);
  }
  std::sort(solutions.begin(), solutions.end(), [](const IntVector& a, const IntVector& b) {
    Integer ta = vec::total(a), tb = vec::total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return solutions;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

/// Phase-one simplex (Bland's rule) for {y ≥ 0 : A y = b}. Returns a feasible
/// y or nothing.
inline std::optional<std::vector<Rational>> feasible_point(std::vector<std::vector<Rational>> a,
                                                           std::vector<Rational> b,
                                                           std::size_t vars) {
  const std::size_t rows = a.size();
  for (std::size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  const std::size_t cols = vars + rows;  // originals then artificials
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = a[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;
  // reduced costs of the phase-one objective (sum of artificials)
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= vars && j < cols) continue;
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
  }
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][*enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][*enter];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction; cannot happen for phase one
    const std::size_t p = *leave;
    Rational piv = t[p][*enter];
    for (auto& x : t[p]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == p || t[i][*enter] == 0) continue;
      Rational f = t[i][*enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[p][j];
    }
    Rational f = cost[*enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[p][j];
    basis[p] = *enter;
  }
  if (cost[cols] != 0) return std::nullopt;  // -(sum of artificials) at optimum
  std::vector<Rational> y(vars);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < vars) y[basis[i]] = t[i][cols];
  return y;
}

}  // namespace detail

/// Some x ∈ N^rows with x·m = 0, x_i ≥ 1 for i in `positive`, x_i = 0 for i in
/// `zero`; decided exactly over the rationals and scaled to integers.
inline std::optional<IntVector> nonnegative_solution_with(const IntMatrix& m,
                                                          const std::vector<std::size_t>& positive,
                                                          const std::vector<std::size_t>& zero = {}) {
  using detail::Rational;
  const std::size_t n = m.rows();
  std::vector<bool> excluded(n, false), shifted(n, false);
  for (auto i : zero) excluded[i] = true;
  for (auto i : positive) {
    if (excluded[i]) return std::nullopt;
    shifted[i] = true;
  }
  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!excluded[i]) free_vars.push_back(i);
  // x_i = y_i + 1 on shifted coordinates moves the constant to the right side
  std::vector<std::vector<Rational>> a(m.cols(), std::vector<Rational>(free_vars.size()));
  std::vector<Rational> b(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t k = 0; k < free_vars.size(); ++k) a[c][k] = Rational(m(free_vars[k], c));
    for (std::size_t i = 0; i < n; ++i)
      if (shifted[i]) b[c] -= Rational(m(i, c));
  }
  auto y = detail::feasible_point(std::move(a), std::move(b), free_vars.size());
  if (!y) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < free_vars.size(); ++k) x[free_vars[k]] = (*y)[k];
  for (std::size_t i = 0; i < n; ++i)
    if (shifted[i]) x[i] += 1;
  Integer lcm = 1;
  for (const auto& q : x) {
    Integer d = boost::multiprecision::denominator(q);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = boost::multiprecision::numerator(x[i]) * (lcm / boost::multiprecision::denominator(x[i]));
  return out;
}

/// Coordinates that are positive in some nonnegative solution of x·m = 0
/// (with the `zero` coordinates forced to vanish). Equals the union of the
/// supports of all minimal solutions of that restricted system.
inline std::vector<bool> solution_support(const IntMatrix& m, const std::vector<std::size_t>& zero = {}) {
  std::vector<bool> support(m.rows(), false);
  std::vector<bool> excluded(m.rows(), false);
  for (auto i : zero) excluded[i] = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (support[i] || excluded[i]) continue;
    auto x = nonnegative_solution_with(m, {i}, zero);
    if (!x) continue;
    for (std::size_t j = 0; j < x->size(); ++j)
      if ((*x)[j] > 0) support[j] = true;
  }
  return support;
}

}  // namespace mca
