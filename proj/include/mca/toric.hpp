#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mca/errors.hpp"
#include "mca/integer.hpp"
#include "mca/lattice.hpp"
#include "mca/monoid.hpp"

namespace mca {

/// t^plus - t^minus over the generators t_1, ..., t_p of a monoid.
struct Binomial {
  IntVector plus;
  IntVector minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// "t5t6t7 - t8^2"; "1" stands for the empty monomial.
inline std::string render_binomial_term(const IntVector& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    s += "t" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + e[i].str();
  }
  return s.empty() ? "1" : s;
}

inline std::string render_binomial(const Binomial& b) {
  return render_binomial_term(b.plus) + " - " + render_binomial_term(b.minus);
}

inline bool is_factorial(const MonoidPresentation& m) { return integer_kernel_basis(m.matrix()).empty(); }

inline bool verify_relation(const Binomial& b, const MonoidPresentation& m) {
  if (b.plus.size() != m.size() || b.minus.size() != m.size())
    fail(ErrorKind::LengthMismatch, "binomial exponent length differs from the generator count " +
                                        std::to_string(m.size()));
  IntMatrix a = m.matrix();
  return a.left_multiply(b.plus) == a.left_multiply(b.minus);
}

namespace detail {

struct BinomialWork {
  IntVector lead;
  IntVector trail;
};

/// Reverse lexicographic order in which variable `last` is the smallest;
/// among the others, higher indices are smaller.
class RevLex {
 public:
  RevLex(std::size_t n, std::size_t last) {
    for (std::size_t i = 0; i < n; ++i)
      if (i != last) order_.push_back(i);
    order_.push_back(last);
  }

  /// a > b for monomials of equal degree.
  bool greater(const IntVector& a, const IntVector& b) const {
    for (std::size_t k = order_.size(); k-- > 0;) {
      std::size_t i = order_[k];
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

 private:
  std::vector<std::size_t> order_;
};

inline IntVector monomial_min(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline IntVector monomial_max(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// Buchberger completion for binomials, with interreduction of leading
/// terms and pairs taken in order of increasing weighted lcm degree.
class BinomialGroebner {
 public:
  BinomialGroebner(const RevLex& order, IntVector weights, std::size_t budget)
      : order_(order), weights_(std::move(weights)), budget_(budget) {}

  std::optional<BinomialWork> orient(IntVector a, IntVector b) const {
    if (a == b) return std::nullopt;
    if (order_.greater(a, b)) return BinomialWork{std::move(a), std::move(b)};
    return BinomialWork{std::move(b), std::move(a)};
  }

  IntVector normal_form(IntVector x) {
    for (;;) {
      bool reduced = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!active_[i] || !vec::dominated(basis_[i].lead, x)) continue;
        x = vec::add(vec::sub(x, basis_[i].lead), basis_[i].trail);
        reduced = true;
        tick();
        break;
      }
      if (!reduced) return x;
    }
  }

  std::vector<BinomialWork> run(std::vector<BinomialWork> input) {
    for (auto& b : input) pending_.push_back(std::move(b));
    drain();
    while (!pairs_.empty()) {
      auto [deg, i, j] = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (!active_[i] || !active_[j]) continue;
      IntVector l = monomial_max(basis_[i].lead, basis_[j].lead);
      pending_.push_back({vec::add(vec::sub(l, basis_[i].lead), basis_[i].trail),
                          vec::add(vec::sub(l, basis_[j].lead), basis_[j].trail)});
      drain();
    }
    std::vector<BinomialWork> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back({basis_[i].lead, normal_form(basis_[i].trail)});
    return out;
  }

 private:
  void tick() {
    if (++steps_ > budget_) fail(ErrorKind::ResourceLimit, "binomial completion exceeded the node budget");
  }

  void drain() {
    while (!pending_.empty()) {
      BinomialWork w = std::move(pending_.back());
      pending_.pop_back();
      if (auto o = orient(normal_form(std::move(w.lead)), normal_form(std::move(w.trail)))) insert(std::move(*o));
    }
  }

  void insert(BinomialWork w) {
    tick();
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (active_[i] && vec::dominated(w.lead, basis_[i].lead)) {
        active_[i] = false;
        pending_.push_back(basis_[i]);
      }
    for (std::size_t i = 0; i < n; ++i) {
      if (!active_[i]) continue;
      IntVector l = monomial_max(basis_[i].lead, w.lead);
      if (vec::add(basis_[i].lead, w.lead) == l) continue;  // coprime leading terms
      pairs_.emplace(vec::dot(weights_, l), i, n);
    }
    basis_.push_back(std::move(w));
    active_.push_back(true);
  }

  RevLex order_;
  IntVector weights_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::vector<BinomialWork> basis_;
  std::vector<bool> active_;
  std::vector<BinomialWork> pending_;
  std::set<std::tuple<Integer, std::size_t, std::size_t>> pairs_;
};

/// Greedy size reduction: replace b_i by b_i ± b_j while that lowers its
/// L1 norm.
inline void shorten_basis(std::vector<IntVector>& basis) {
  auto norm = [](const IntVector& v) {
    Integer s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          IntVector c = sign > 0 ? vec::add(basis[i], basis[j]) : vec::sub(basis[i], basis[j]);
          if (norm(c) < norm(basis[i])) {
            basis[i] = std::move(c);
            changed = true;
          }
        }
      }
  }
}

/// All λ ∈ N^p with λ·A = target.
class FiberEnumerator {
 public:
  FiberEnumerator(const std::vector<IntVector>& gens, std::size_t budget) : gens_(gens), budget_(budget) {}

  std::vector<IntVector> run(const IntVector& target) {
    out_.clear();
    IntVector lambda = vec::zeros(gens_.size());
    descend(target, 0, lambda);
    return out_;
  }

 private:
  void descend(const IntVector& residual, std::size_t g, IntVector& lambda) {
    if (++steps_ > budget_) fail(ErrorKind::ResourceLimit, "fiber enumeration exceeded the node budget");
    if (vec::is_zero(residual)) {
      out_.push_back(lambda);
      return;
    }
    if (g == gens_.size()) return;
    descend(residual, g + 1, lambda);
    IntVector r = residual;
    while (vec::dominated(gens_[g], r)) {
      r = vec::sub(r, gens_[g]);
      lambda[g] += 1;
      descend(r, g + 1, lambda);
    }
    lambda[g] = 0;
  }

  const std::vector<IntVector>& gens_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::vector<IntVector> out_;
};

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// The fiber of `target` is connected by the given moves.
inline bool fiber_connected(const std::vector<IntVector>& gens, const IntVector& target,
                            const std::vector<Binomial>& moves, std::size_t budget) {
  FiberEnumerator fe(gens, budget);
  std::vector<IntVector> fiber = fe.run(target);
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < fiber.size(); ++i) index.emplace(fiber[i], i);
  std::vector<std::size_t> parent(fiber.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = fiber.size();
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (const auto& mv : moves)
      for (int side = 0; side < 2; ++side) {
        const IntVector& from = side == 0 ? mv.plus : mv.minus;
        const IntVector& to = side == 0 ? mv.minus : mv.plus;
        if (!vec::dominated(from, fiber[i])) continue;
        auto it = index.find(vec::add(vec::sub(fiber[i], from), to));
        if (it == index.end()) continue;
        std::size_t a = find_root(parent, i), b = find_root(parent, it->second);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
  return components <= 1;
}

inline Binomial canonical_binomial(IntVector a, IntVector b) {
  IntVector common = monomial_min(a, b);
  a = vec::sub(a, common);
  b = vec::sub(b, common);
  if (a < b) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline bool binomial_less(const Binomial& x, const Binomial& y) {
  Integer dx = vec::total(x.plus), dy = vec::total(y.plus);
  if (dx != dy) return dx < dy;
  if (x.plus != y.plus) return y.plus < x.plus;
  return y.minus < x.minus;
}

}  // namespace detail

/// A minimal Markov basis of the toric ideal of m, in canonical order.
inline std::vector<Binomial> markov_basis(const MonoidPresentation& m, const SolverBudget& budget = {}) {
  const std::size_t p = m.size();
  IntMatrix a = m.matrix();
  std::vector<IntVector> kernel = integer_kernel_basis(a);
  detail::shorten_basis(kernel);
  IntVector weights(p);
  for (std::size_t i = 0; i < p; ++i) weights[i] = m[i].total();
  std::vector<detail::BinomialWork> current;
  for (const auto& c : kernel) {
    IntVector plus = vec::zeros(p), minus = vec::zeros(p);
    for (std::size_t i = 0; i < p; ++i) (c[i] > 0 ? plus[i] : minus[i]) = abs(c[i]);
    current.push_back({plus, minus});
  }
  if (current.empty()) return {};

  // saturate by one variable at a time: Gröbner basis with that variable
  // smallest, then strip its powers
  for (std::size_t v = 0; v < p; ++v) {
    detail::RevLex order(p, v);
    detail::BinomialGroebner gb(order, weights, budget.nodes);
    std::vector<detail::BinomialWork> oriented;
    for (auto& w : current)
      if (auto o = gb.orient(w.lead, w.trail)) oriented.push_back(std::move(*o));
    std::vector<detail::BinomialWork> next;
    std::set<std::pair<IntVector, IntVector>> seen;
    for (auto& g : gb.run(std::move(oriented))) {
      Integer k = std::min(g.lead[v], g.trail[v]);
      g.lead[v] -= k;
      g.trail[v] -= k;
      if (g.lead == g.trail) continue;
      if (seen.emplace(g.lead, g.trail).second) next.push_back(std::move(g));
    }
    current = std::move(next);
  }

  std::vector<Binomial> candidates;
  std::set<std::pair<IntVector, IntVector>> seen;
  for (auto& w : current) {
    Binomial b = detail::canonical_binomial(w.lead, w.trail);
    if (vec::is_zero(b.plus) && vec::is_zero(b.minus)) continue;
    if (seen.emplace(b.plus, b.minus).second) candidates.push_back(std::move(b));
  }
  std::sort(candidates.begin(), candidates.end(), detail::binomial_less);

  std::vector<IntVector> gens;
  for (const auto& g : m.generators()) gens.push_back(g.coords());
  auto degree = [&](const Binomial& b) { return vec::total(a.left_multiply(b.plus)); };
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return degree(candidates[x]) > degree(candidates[y]); });
  std::vector<bool> kept(candidates.size(), true);
  for (std::size_t idx : order) {
    kept[idx] = false;
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (kept[j]) others.push_back(candidates[j]);
    if (!detail::fiber_connected(gens, a.left_multiply(candidates[idx].plus), others, budget.nodes))
      kept[idx] = true;
  }
  std::vector<Binomial> out;
  for (std::size_t j = 0; j < candidates.size(); ++j)
    if (kept[j]) out.push_back(candidates[j]);
  return out;
}

}  // namespace mca
