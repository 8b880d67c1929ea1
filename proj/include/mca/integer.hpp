#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mca {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Quotient rounded toward negative infinity. b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Remainder with the sign of b (for b > 0 the result lies in [0, b)).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.str(); }

namespace vec {

inline IntVector zeros(std::size_t n) { return IntVector(n, Integer(0)); }

inline IntVector unit(std::size_t n, std::size_t i) {
  IntVector v = zeros(n);
  v[i] = 1;
  return v;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IntVector scale(const IntVector& a, const Integer& k) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer total(const IntVector& a) {
  Integer s = 0;
  for (const auto& x : a) s += x;
  return s;
}

inline bool is_zero(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_nonnegative(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 0; });
}

/// Componentwise a <= b.
inline bool dominated(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Integer content(const IntVector& a) {
  Integer g = 0;
  for (const auto& x : a) g = gcd(g, x);
  return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(const IntVector& a) {
  Integer g = content(a);
  if (g <= 1) return a;
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / g;
  return out;
}

}  // namespace vec

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : v) {
      h ^= std::hash<Integer>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace mca
