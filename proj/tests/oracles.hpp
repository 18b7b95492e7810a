#pragma once

// Brute-force reference computations used to freeze expected values. They
// read only raw multiplication tables or closed-form group data and never
// call into the library's order cache, closure or omega code.

#include <cstdint>
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <vector>

namespace oracle {

using Table = std::span<const std::uint16_t>;
using Spectrum = std::map<std::uint32_t, std::size_t>;

inline std::size_t at(Table t, std::size_t n, std::size_t a, std::size_t b) {
  return t[a * n + b];
}

// Order by naive power iteration x, x^2, x^3, ...
inline std::vector<std::uint32_t> orders(Table t, std::size_t n) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t acc = x;
    std::uint32_t k = 1;
    while (acc != 0) {
      acc = at(t, n, acc, x);
      ++k;
    }
    out[x] = k;
  }
  return out;
}

inline Spectrum spectrum(Table t, std::size_t n) {
  Spectrum s;
  for (auto o : orders(t, n)) ++s[o];
  return s;
}

inline std::uint64_t psi(const Spectrum& s) {
  std::uint64_t total = 0;
  for (const auto& [o, c] : s) total += std::uint64_t{o} * c;
  return total;
}

inline Spectrum cyclic_spectrum(std::uint32_t k) {
  Spectrum s;
  for (std::uint32_t i = 0; i < k; ++i) ++s[k / std::gcd(i, k)];
  return s;
}

// D_k of order k: k/2 rotations plus k/2 reflections of order 2.
inline Spectrum dihedral_spectrum(std::uint32_t k) {
  Spectrum s = cyclic_spectrum(k / 2);
  s[2] += k / 2;
  return s;
}

// o((a, b)) = lcm(o(a), o(b)) in a direct product.
inline Spectrum product_spectrum(const Spectrum& a, const Spectrum& b) {
  Spectrum s;
  for (const auto& [oa, ca] : a) {
    for (const auto& [ob, cb] : b) s[std::lcm(oa, ob)] += ca * cb;
  }
  return s;
}

// Saturate under all pairwise products until nothing new appears.
inline std::set<std::size_t> naive_closure(Table t, std::size_t n,
                                           const std::vector<std::size_t>& seed) {
  std::set<std::size_t> s(seed.begin(), seed.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= s.insert(at(t, n, a, b)).second;
    }
  }
  return s;
}

inline std::vector<std::size_t> elements_with_order_dividing(Table t, std::size_t n,
                                                             std::uint64_t q) {
  const auto o = orders(t, n);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (q % o[x] == 0) out.push_back(x);
  }
  return out;
}

inline bool naive_is_normal(Table t, std::size_t n, const std::set<std::size_t>& s) {
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t g_inv = 0;
    while (at(t, n, g, g_inv) != 0) ++g_inv;
    for (auto x : s) {
      if (!s.count(at(t, n, at(t, n, g, x), g_inv))) return false;
    }
  }
  return true;
}

inline std::uint64_t max_order(Table t, std::size_t n) {
  const auto o = orders(t, n);
  return *std::max_element(o.begin(), o.end());
}

}  // namespace oracle
