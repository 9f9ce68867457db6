#pragma once

// Independent reference computations for the tests. Deliberately naive and
// sharing no code with the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/perm.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // c_0 .. c_n

// a * b mod f over F_p, with f monic of degree e; inputs of degree < e.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = 2 * e - 1; d >= e; --d) {
    const auto c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - f[i]) * c) % p;
  }
  Poly out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// True iff x has multiplicative order p^e - 1 modulo f.
inline bool is_primitive(const Poly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  if (f[0] == 0) return false;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < e; ++i) size *= p;
  Poly x(e, 0), one(e, 0), cur(e, 0);
  one[0] = 1;
  if (e == 1) {
    // x mod (x + c0) = -c0.
    x[0] = (p - f[0]) % p;
  } else {
    x[1] = 1;
  }
  cur = x;
  for (std::uint64_t k = 1; k < size - 1; ++k) {
    if (cur == one) return false;
    cur = mulmod(cur, x, f, p);
  }
  return cur == one;
}

// Least primitive monic polynomial of degree e, comparing c_0 first.
inline Poly least_primitive(std::uint32_t p, std::uint32_t e) {
  Poly digits(e, 0);  // digits[0] = c_0 is the most significant
  for (;;) {
    Poly f = digits;
    f.push_back(1);
    if (is_primitive(f, p)) return f;
    int i = static_cast<int>(e) - 1;
    while (i >= 0 && ++digits[i] == p) digits[i--] = 0;
    if (i < 0) return {};
  }
}

// Element count of the group generated by gens, by breadth-first closure.
inline std::size_t closure_order(const std::vector<unital::Permutation>& gens, std::size_t degree) {
  std::set<std::vector<unital::Point>> seen;
  std::vector<std::vector<unital::Point>> frontier;
  std::vector<unital::Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<unital::Point>(i);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    auto cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<unital::Point> next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = g(cur[i]);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen.size();
}

inline std::vector<unital::Point> common(const unital::Block& a, const unital::Block& b) {
  std::vector<unital::Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Number of block quadruples forming a 4-block/6-point configuration.
inline std::size_t count_onan_quadruples(const unital::Incidence& inc) {
  const auto& bl = inc.blocks();
  const std::size_t n = bl.size();
  std::size_t found = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto ab = common(bl[a], bl[b]);
      if (ab.size() != 1) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto ac = common(bl[a], bl[c]), bc = common(bl[b], bl[c]);
        if (ac.size() != 1 || bc.size() != 1) continue;
        if (ac[0] == ab[0] || bc[0] == ab[0] || bc[0] == ac[0]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          std::set<unital::Point> pts{ab[0], ac[0], bc[0]};
          bool ok = true;
          for (std::size_t o : {a, b, c}) {
            const auto x = common(bl[o], bl[d]);
            if (x.size() != 1 || !pts.insert(x[0]).second) {
              ok = false;
              break;
            }
          }
          found += ok;
        }
      }
    }
  return found;
}

inline std::vector<unital::Point> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<unital::Point> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<unital::Point>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
