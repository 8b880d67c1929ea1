#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "mca/mca.hpp"

namespace mca::test {

inline std::string data_path(const std::string& name) { return std::string(MCA_DATA_DIR) + "/" + name; }

inline const GroupCharData& dataset(const std::string& name) {
  static std::map<std::string, GroupCharData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_dataset(data_path(name))).first;
  return it->second;
}

inline const std::vector<std::string>& dataset_names() {
  static const std::vector<std::string> names{"trivial.json", "c2.json",   "c3.json",    "s3.json",      "a4.json",
                                              "s4.json",      "sl23.json", "gl23.json",  "a5.json",      "a6.json",
                                              "sl28.json",    "s3xs3.json", "sl23xc2.json"};
  return names;
}

inline IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline CharVector cv(std::initializer_list<long> xs) { return CharVector(ints(xs)); }

inline MonoidPresentation monoid(std::size_t rank, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<CharVector> gens;
  for (auto r : rows) gens.push_back(cv(r));
  return MonoidPresentation(rank, std::move(gens));
}

inline IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(ints(r));
    cols = r.size();
  }
  return IntMatrix::from_rows(rs, cols);
}

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Random nonzero generators with entries in [0, hi].
inline MonoidPresentation random_monoid(std::mt19937& rng, std::size_t rank, std::size_t count, long hi) {
  std::vector<CharVector> gens;
  while (gens.size() < count) {
    IntVector v(rank);
    for (auto& x : v) x = uniform(rng, 0, hi);
    if (!vec::is_zero(v)) gens.emplace_back(v);
  }
  return MonoidPresentation(rank, std::move(gens));
}

/// "x1, x1x2, x4x5^2" as exponent vectors of the given rank.
inline MonoidPresentation monomials(std::size_t rank, const std::string& text) {
  std::vector<CharVector> gens;
  std::size_t i = 0;
  while (i < text.size()) {
    IntVector v = vec::zeros(rank);
    while (i < text.size() && text[i] != ',') {
      if (text[i] != 'x') {
        ++i;
        continue;
      }
      std::size_t j = ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t var = std::stoul(text.substr(j, i - j)) - 1;
      long e = 1;
      if (i < text.size() && text[i] == '^') {
        j = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        e = std::stol(text.substr(j, i - j));
      }
      v[var] += e;
    }
    ++i;
    gens.emplace_back(v);
  }
  return MonoidPresentation(rank, std::move(gens));
}

}  // namespace mca::test
