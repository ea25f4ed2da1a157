#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/poly.hpp"

namespace cayley::burnside {

inline constexpr unsigned kDirectBlockBound = 24;

/// Generating function of the symmetric, identity-free subsets of K that
/// alpha fixes setwise, empty set included (constant term 1).
///
/// alpha need not stabilize K: any such subset lies in the largest
/// alpha-invariant subgroup M = K n alpha(K) n alpha^2(K) n ..., and the
/// result is the product over symmetric blocks b of M \ {e} of (1 + x^|b|).
IntPoly sym_fixed_poly(const GroupTable& g, const ElementSet& k, const Automorphism& alpha);

enum class EmptySet {
  kIncluded,  // subset sums count the empty set (constant term 1)
  kExcluded,  // the "-1" convention: subset sums start at degree 1
};

/// Subgroup lattice with Moebius values, reusable across automorphisms.
/// Subgroups with mu(K) = 0 are dropped.
class MoebiusLattice {
 public:
  explicit MoebiusLattice(const GroupTable& g, std::size_t cap = kDefaultGroupCap);

  const GroupTable& group() const { return *g_; }
  const std::vector<Subgroup>& terms() const { return terms_; }

  /// Raw Moebius sum sum_K mu(K) * P_K, where P_K is sym_fixed_poly(K, alpha)
  /// or that minus 1. Nothing is dropped: for |G| > 1 the constant term is 0
  /// under both conventions.
  IntPoly moebius_sum(const Automorphism& alpha, EmptySet convention = EmptySet::kIncluded) const;

  /// sum over generating symmetric alpha-fixed sets of x^|Omega|; the
  /// moebius_sum without its constant term, so the trivial group yields 0.
  IntPoly fix_poly(const Automorphism& alpha) const;

 private:
  const GroupTable* g_;
  std::vector<Subgroup> terms_;
};

IntPoly fix_poly_moebius(const GroupTable& g, const Automorphism& alpha);

/// Same contract as fix_poly_moebius, by enumerating every nonempty union of
/// inversion blocks and keeping those fixed by alpha that generate G. Throws
/// ResourceError beyond `max_blocks` inversion blocks.
IntPoly fix_poly_direct(const GroupTable& g, const Automorphism& alpha, unsigned max_blocks = kDirectBlockBound);

/// The direct route with its per-group tables built once, for running many
/// automorphisms of the same group.
class DirectFixPoly {
 public:
  explicit DirectFixPoly(const GroupTable& g, unsigned max_blocks = kDirectBlockBound);
  ~DirectFixPoly();
  DirectFixPoly(const DirectFixPoly&) = delete;
  DirectFixPoly& operator=(const DirectFixPoly&) = delete;

  IntPoly operator()(const Automorphism& alpha) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct EngineOptions {
  std::size_t cap = kDefaultGroupCap;
  unsigned threads = 1;
};

/// sum over `autos` of the fixed-set polynomials, before averaging.
IntPoly burnside_sum(const GroupTable& g, const std::vector<Automorphism>& autos, const EngineOptions& opts = {});

/// Burnside average over `autos`; throws InternalError if not integral.
IntPoly burnside_average(const GroupTable& g, const std::vector<Automorphism>& autos,
                         const EngineOptions& opts = {});

/// Degree distribution of weak equivalence classes (orbits under Aut).
IntPoly psi_weak(const GroupTable& g, const EngineOptions& opts = {});
/// Degree distribution of equivalence classes (orbits under Inn).
IntPoly psi_equiv(const GroupTable& g, const EngineOptions& opts = {});

BigInt count_weak(const GroupTable& g, const EngineOptions& opts = {});
BigInt count_equiv(const GroupTable& g, const EngineOptions& opts = {});

}  // namespace cayley::burnside
