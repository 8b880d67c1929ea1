#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mca/errors.hpp"
#include "mca/integer.hpp"

namespace mca {

/// Character values as cyclotomic integers: values[i][c] holds the
/// coefficients of ζ_N^0, ..., ζ_N^{N-1} for character i on class c.
struct CyclotomicTable {
  std::size_t conductor = 1;
  std::vector<std::vector<IntVector>> values;
  friend bool operator==(const CyclotomicTable&, const CyclotomicTable&) = default;
};

namespace cyclo {

/// Polynomial coefficients, lowest degree first.
using Poly = std::vector<Integer>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient of a by a monic b; fails if the division leaves a remainder.
inline Poly exact_divide(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    fail(ErrorKind::BadCyclotomicData, "inexact polynomial division");
  }
  Poly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = a[i + b.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) fail(ErrorKind::BadCyclotomicData, "inexact polynomial division");
  return q;
}

/// Remainder of a modulo a monic b.
inline Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Integer c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return a;
}

/// Φ_n, by dividing x^n - 1 by Φ_d for every proper divisor d.
inline Poly cyclotomic_polynomial(std::size_t n) {
  if (n == 0) fail(ErrorKind::BadCyclotomicData, "conductor must be positive");
  Poly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  return p;
}

/// Σ c_k ζ_n^k = 0 exactly.
inline bool is_zero(const IntVector& coords, const Poly& phi) {
  return remainder(Poly(coords.begin(), coords.end()), phi).empty();
}

}  // namespace cyclo

}  // namespace mca
