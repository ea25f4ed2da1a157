#include <gtest/gtest.h>

#include "cayley/burnside.hpp"
#include "cayley/error.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/numtheory.hpp"
#include "naive.hpp"

using namespace cayley;
using namespace cayley::burnside;

namespace {

IntPoly from_map(const std::map<std::size_t, long>& m) {
  IntPoly p;
  for (auto [d, c] : m) p += IntPoly::monomial(d, c);
  return p;
}

Automorphism times(const GroupTable& zn, Element k) {
  std::vector<Element> img(zn.order());
  for (Element x = 0; x < zn.order(); ++x) img[x] = static_cast<Element>(x * k % zn.order());
  return Automorphism::make(zn, img);
}

}  // namespace

TEST(Burnside, SymFixedPoly) {
  const GroupTable z5 = cyclic(5);
  EXPECT_EQ(sym_fixed_poly(z5, z5.all(), Automorphism::identity(z5)), (IntPoly{1, 0, 2, 0, 1}));
  EXPECT_EQ(sym_fixed_poly(z5, z5.all(), times(z5, 2)), (IntPoly{1, 0, 0, 0, 1}));
  // rotation subgroup Z_m of D_n, m odd: (1+x^2)^((m-1)/2) under every conjugation
  const GroupTable d15 = dihedral(15);
  for (const auto& sub : subgroups(d15)) {
    const std::size_t m = sub.order();
    if (m % 2 == 0 || m == 1) continue;
    bool cyclic_sub = false;
    for (Element x : sub.members.members()) cyclic_sub |= d15.element_order(x) == m;
    if (!cyclic_sub) continue;
    for (const auto& a : inner_automorphisms(d15))
      EXPECT_EQ(sym_fixed_poly(d15, sub.members, a), IntPoly::one_plus_x_pow(2).pow((m - 1) / 2));
  }
  EXPECT_THROW(sym_fixed_poly(z5, ElementSet::of(5, {0, 1}), Automorphism::identity(z5)), std::invalid_argument);
}

TEST(Burnside, FixPoly) {
  const GroupTable z4 = cyclic(4), z6 = cyclic(6), z5 = cyclic(5), z2 = cyclic(2);
  EXPECT_EQ(fix_poly_moebius(z4, Automorphism::identity(z4)), IntPoly::parse("x^2+x^3"));
  EXPECT_EQ(fix_poly_moebius(z6, times(z6, 5)), IntPoly::parse("x^2+2x^3+x^4+x^5"));
  EXPECT_EQ(fix_poly_moebius(z5, times(z5, 2)), IntPoly::monomial(4));
  EXPECT_EQ(fix_poly_moebius(z2, Automorphism::identity(z2)), IntPoly::monomial(1));
  const GroupTable e = cyclic(1);
  EXPECT_TRUE(fix_poly_moebius(e, Automorphism::identity(e)).is_zero());
  EXPECT_TRUE(fix_poly_direct(e, Automorphism::identity(e)).is_zero());
}

TEST(Burnside, EmptySetConvention) {
  for (const auto& g : {cyclic(12), dihedral(6), fixtures::find("Q8")}) {
    const MoebiusLattice lat(g);
    for (const auto& a : automorphisms(g)) {
      const IntPoly with = lat.moebius_sum(a, EmptySet::kIncluded);
      const IntPoly without = lat.moebius_sum(a, EmptySet::kExcluded);
      EXPECT_EQ(with, without) << g.label();
      EXPECT_EQ(with.without_constant(), lat.fix_poly(a));
    }
  }
}

TEST(Burnside, Psi) {
  EXPECT_EQ(psi_weak(cyclic(5)), IntPoly::parse("x^2+x^4"));
  EXPECT_EQ(psi_equiv(cyclic(5)), IntPoly::parse("2x^2+x^4"));
  EXPECT_EQ(psi_weak(cyclic(8)), IntPoly::parse("x^2+x^3+2x^4+2x^5+x^6+x^7"));
  EXPECT_EQ(count_weak(cyclic(12)), 38);
  EXPECT_EQ(count_equiv(cyclic(12)), 54);
  EXPECT_EQ(count_weak(cyclic(1)), 0);
  EXPECT_EQ(psi_weak(dihedral(3)), IntPoly::parse("x^2+2x^3+x^4+x^5"));
  // Z2 x Z2: three 2-sets and the full 3-set, no two equivalent
  EXPECT_EQ(psi_equiv(direct_product(cyclic(2), cyclic(2))), IntPoly::parse("3x^2+x^3"));
}

TEST(Burnside, AgreesWithNaiveEnumeration) {
  for (const auto& g : fixtures::small_groups()) {
    if (g.order() > 8) continue;
    const auto autos = naive::all_automorphisms(g);
    EXPECT_EQ(psi_weak(g), from_map(naive::classes(g, autos))) << g.label();
    EXPECT_EQ(psi_equiv(g), from_map(naive::classes(g, naive::conjugations(g)))) << g.label();
  }
}

TEST(Burnside, EquivCountsMatchDivisorSum) {
  // for Z_n every class is a single set; count by subsets of inversion blocks
  for (std::uint64_t n = 2; n <= 40; ++n) {
    BigInt want = 0;
    for (auto d : nt::divisors(n)) {
      BigInt t = 1;
      for (std::uint64_t i = 0; i < d / 2; ++i) t *= 2;
      want += nt::moebius_int(n / d) * (t - 1);
    }
    EXPECT_EQ(count_equiv(cyclic(n)), want) << n;
  }
}

TEST(Burnside, ThreadCountDoesNotMatter) {
  const GroupTable g = fixtures::find("Z4xZ4");
  EngineOptions one, four;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(psi_weak(g, one), psi_weak(g, four));
}

TEST(Burnside, DirectRouteBound) {
  // 2^6 has 63 inversion blocks, beyond the direct route
  EXPECT_THROW(fix_poly_direct(fixtures::find("Z2^6"), Automorphism::identity(fixtures::find("Z2^6"))),
               ResourceError);
}
