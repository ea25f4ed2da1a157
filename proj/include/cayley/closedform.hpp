#pragma once

#include <cstdint>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/poly.hpp"

namespace cayley::closedform {

/// Three formulas are known to be misprinted. kLiteral evaluates them exactly
/// as printed; kCorrected (the default) evaluates the repaired version.
enum class Variant { kCorrected, kLiteral };

struct SquareFreeSpec {
  /// Distinct odd primes, strictly increasing.
  std::vector<std::uint64_t> odd_primes;
  bool include_factor_two = false;
};

// Equivalence classes.

/// Sum over subgroups K of mu(K) ((1+x^2)^{(|K|-|O2|-1)/2} (1+x)^{|O2|} - 1),
/// O2 the involutions of K. Rejects non-abelian groups.
IntPoly psi_equiv_abelian(const GroupTable& g);
/// Divisor-sum form of the abelian formula for Z_n, n >= 2.
IntPoly psi_equiv_cyclic(std::uint64_t n);
/// Average over the 2n conjugations of D_n, n >= 3, split by subgroup type.
/// The literal variant repeats the rotation factor in the reflection case and
/// assumes two fixed reflections whenever the subgroup is stabilized.
IntPoly psi_equiv_dihedral(std::uint64_t n, Variant v = Variant::kCorrected);
/// Psi(D_n) at 1.
BigInt count_equiv_dihedral(std::uint64_t n, Variant v = Variant::kCorrected);

// Weak equivalence classes of circulants.

IntPoly psi_weak_cyclic_2m(unsigned m);
IntPoly psi_weak_cyclic_pm(std::uint64_t p, unsigned m);
IntPoly psi_weak_cyclic_2pm(std::uint64_t p, unsigned m);
IntPoly psi_weak_cyclic_4p(std::uint64_t p);

/// Length of the orbits of a unit with component gcds `ds` on the product of
/// the unit groups mod `primes`, taken up to sign.
std::uint64_t alpha_exponent(const std::vector<std::uint64_t>& ds, const std::vector<std::uint64_t>& primes);

/// The literal even-order variant ends in (-1)^l (1+x), which leaves a
/// nonzero constant term; the corrected tail is (-1)^l x.
IntPoly psi_weak_cyclic_squarefree(const SquareFreeSpec& spec, Variant v = Variant::kCorrected);

IntPoly psi_weak_zp(std::uint64_t p);
IntPoly psi_weak_z2p(std::uint64_t p);

/// Weak classes of D_p. The literal variant weights the i != 1 terms by
/// phi((p-1)/2) over d | (p-1)/2 and drops the factor p from the choice of
/// j; it is not integral in general.
IntPoly psi_weak_dihedral_p(std::uint64_t p, Variant v = Variant::kCorrected);

}  // namespace cayley::closedform
