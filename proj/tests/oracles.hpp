#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "mca/mca.hpp"

namespace mca::test {

/// Componentwise-minimal nonzero solutions of x·m = 0 over N^3 with every entry at most `box`.
inline std::vector<IntVector> brute_minimal_solutions(const IntMatrix& m, long box) {
  std::vector<IntVector> all;
  for (long a = 0; a <= box; ++a)
    for (long b = 0; b <= box; ++b)
      for (long c = 0; c <= box; ++c) {
        IntVector x{Integer(a), Integer(b), Integer(c)};
        if (!vec::is_zero(x) && vec::is_zero(m.left_multiply(x))) all.push_back(x);
      }
  std::vector<IntVector> out;
  for (const auto& x : all) {
    bool minimal = true;
    for (const auto& y : all)
      if (y != x && vec::dominated(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All exponent vectors v with Σ v_i·g_i = target.
inline std::vector<IntVector> brute_fiber(const MonoidPresentation& m, const IntVector& target) {
  std::vector<IntVector> out;
  IntVector v = vec::zeros(m.size());
  std::function<void(std::size_t, const IntVector&)> go = [&](std::size_t i, const IntVector& rest) {
    if (i == m.size()) {
      if (vec::is_zero(rest)) out.push_back(v);
      return;
    }
    IntVector r = rest;
    for (v[i] = 0;; ++v[i]) {
      go(i + 1, r);
      if (!vec::dominated(m[i].coords(), r)) break;
      r = vec::sub(r, m[i].coords());
    }
    v[i] = 0;
  };
  go(0, target);
  return out;
}

/// Connected components of a fiber under the moves, applied in both directions.
inline std::size_t fiber_components(const std::vector<IntVector>& fiber, const std::vector<Binomial>& moves) {
  std::set<IntVector> all(fiber.begin(), fiber.end()), seen;
  std::size_t count = 0;
  for (const auto& start : fiber) {
    if (!seen.insert(start).second) continue;
    ++count;
    std::vector<IntVector> stack{start};
    while (!stack.empty()) {
      IntVector v = stack.back();
      stack.pop_back();
      for (const auto& mv : moves)
        for (int side = 0; side < 2; ++side) {
          const IntVector& from = side ? mv.minus : mv.plus;
          const IntVector& to = side ? mv.plus : mv.minus;
          if (!vec::dominated(from, v)) continue;
          IntVector w = vec::add(vec::sub(v, from), to);
          if (all.count(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
  }
  return count;
}

/// Some generator has coordinate j positive and k zero, for every j ≠ k.
inline bool pairwise_support_oracle(const MonoidPresentation& m) {
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (std::size_t k = 0; k < m.rank(); ++k) {
      if (j == k) continue;
      bool found = false;
      for (const auto& g : m.generators()) found = found || (g[j] > 0 && g[k] == 0);
      if (!found) return false;
    }
  return true;
}

/// Random 1-based partition of 1..r with {1} as its own first block.
inline std::vector<std::vector<std::size_t>> random_blocks(std::mt19937& rng, std::size_t r) {
  std::vector<std::vector<std::size_t>> blocks{{1}};
  std::size_t extra = r > 1 ? 1 + rng() % (r - 1) : 0;
  std::vector<std::vector<std::size_t>> rest(extra);
  for (std::size_t j = 2; j <= r; ++j) rest[j < 2 + extra ? j - 2 : rng() % extra].push_back(j);
  for (auto& b : rest) blocks.push_back(b);
  return blocks;
}

}  // namespace mca::test
