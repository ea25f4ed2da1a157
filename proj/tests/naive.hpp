#pragma once

// Deliberately dumb reference counts for tiny groups. Nothing here touches the
// library beyond GroupTable::mul/inverse/identity.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cayley/group.hpp"

namespace naive {

using Perm = std::vector<std::size_t>;

// Every bijection f with f(ab) = f(a)f(b), by trying all n! permutations.
inline std::vector<Perm> all_automorphisms(const cayley::GroupTable& g) {
  const std::size_t n = g.order();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Perm> conjugations(const cayley::GroupTable& g) {
  std::set<Perm> seen;
  for (std::size_t h = 0; h < g.order(); ++h) {
    Perm p(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) p[x] = g.mul(g.mul(h, x), g.inverse(h));
    seen.insert(p);
  }
  return {seen.begin(), seen.end()};
}

inline bool generating(const cayley::GroupTable& g, std::uint64_t mask) {
  std::uint64_t reach = std::uint64_t{1} << g.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < g.order(); ++a)
      if (reach >> a & 1)
        for (std::size_t s = 0; s < g.order(); ++s)
          if (mask >> s & 1) {
            const std::uint64_t bit = std::uint64_t{1} << g.mul(a, s);
            if (!(reach & bit)) reach |= bit, grew = true;
          }
  }
  return reach == (g.order() == 64 ? ~0ull : (std::uint64_t{1} << g.order()) - 1);
}

// Degree -> number of classes of valid connection sets under `autos`.
inline std::map<std::size_t, long> classes(const cayley::GroupTable& g, const std::vector<Perm>& autos) {
  const std::size_t n = g.order();
  std::set<std::uint64_t> seen;
  std::map<std::size_t, long> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (m >> g.identity() & 1) continue;
    bool sym = true;
    for (std::size_t x = 0; x < n && sym; ++x)
      if (m >> x & 1) sym = m >> g.inverse(x) & 1;
    if (!sym || !generating(g, m) || seen.count(m)) continue;
    for (const auto& p : autos) {
      std::uint64_t img = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (m >> x & 1) img |= std::uint64_t{1} << p[x];
      seen.insert(img);
    }
    ++out[static_cast<std::size_t>(__builtin_popcountll(m))];
  }
  return out;
}

}  // namespace naive
