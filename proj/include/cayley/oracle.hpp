#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/poly.hpp"

namespace cayley::oracle {

inline constexpr unsigned kBlockBound = 24;

struct Orbit {
  /// Lexicographically least member (as an element bitstring).
  ConnectionSet canonical_rep;
  std::uint64_t orbit_size;
  std::size_t degree;
};

struct OrbitCensus {
  /// Sorted by degree, then by canonical representative.
  std::vector<Orbit> orbits;
  std::uint64_t total_sets = 0;
};

/// Enumerates every generating symmetric identity-free subset of G as a union
/// of inversion blocks and splits them into orbits under the group generated
/// by `autos`. Throws ResourceError when G has more than `max_blocks`
/// inversion blocks.
OrbitCensus orbit_census(const GroupTable& g, const std::vector<Automorphism>& autos,
                         unsigned max_blocks = kBlockBound);

/// Coefficient of x^k is the number of orbits of degree k.
IntPoly psi_from_census(const OrbitCensus& census);

}  // namespace cayley::oracle
