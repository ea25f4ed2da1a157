#include <gtest/gtest.h>

#include "cayley/burnside.hpp"
#include "cayley/closedform.hpp"
#include "cayley/error.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/reference_tables.hpp"

using namespace cayley;
using namespace cayley::closedform;

namespace {

IntPoly weak_row(std::uint64_t n) {
  for (const auto& r : reference::weak_table())
    if (r.n == n) return r.poly();
  throw std::out_of_range("no row");
}

}  // namespace

TEST(ClosedForm, EquivAbelian) {
  EXPECT_EQ(psi_equiv_abelian(cyclic(9)), IntPoly::parse("3x^2+6x^4+4x^6+x^8"));
  EXPECT_EQ(psi_equiv_abelian(direct_product(cyclic(2), cyclic(2))), IntPoly::parse("3x^2+x^3"));
  EXPECT_EQ(psi_equiv_abelian(cyclic(2)), IntPoly::monomial(1));
  EXPECT_THROW(psi_equiv_abelian(dihedral(3)), std::invalid_argument);
  for (const auto& g : fixtures::small_groups())
    if (g.is_abelian()) EXPECT_EQ(psi_equiv_abelian(g), burnside::psi_equiv(g)) << g.label();
}

TEST(ClosedForm, EquivCyclic) {
  EXPECT_EQ(psi_equiv_cyclic(4), IntPoly::parse("x^2+x^3"));
  EXPECT_EQ(psi_equiv_cyclic(2), IntPoly::monomial(1));
  // four units up to sign give the degree-2 sets; 123 sets in all
  EXPECT_EQ(psi_equiv_cyclic(15), IntPoly::parse("4x^2+20x^4+35x^6+35x^8+21x^10+7x^12+x^14"));
  for (std::uint64_t n = 2; n <= 30; ++n) EXPECT_EQ(psi_equiv_cyclic(n), burnside::psi_equiv(cyclic(n))) << n;
}

TEST(ClosedForm, EquivDihedral) {
  for (std::uint64_t n = 3; n <= 10; ++n) {
    const IntPoly want = burnside::psi_equiv(dihedral(n));
    EXPECT_EQ(psi_equiv_dihedral(n), want) << n;
    EXPECT_EQ(count_equiv_dihedral(n), want.eval(1)) << n;
  }
  // the as-printed reading is only wrong when n is even
  EXPECT_EQ(psi_equiv_dihedral(5, Variant::kLiteral), psi_equiv_dihedral(5));
  EXPECT_NE(psi_equiv_dihedral(4, Variant::kLiteral), psi_equiv_dihedral(4));
}

TEST(ClosedForm, WeakCyclicFamilies) {
  EXPECT_EQ(psi_weak_cyclic_2m(2), IntPoly::parse("x^2+x^3"));
  EXPECT_EQ(psi_weak_cyclic_2m(3), IntPoly::parse("x^2+x^3+2x^4+2x^5+x^6+x^7"));
  EXPECT_EQ(psi_weak_cyclic_2m(4), weak_row(16));
  EXPECT_EQ(psi_weak_cyclic_pm(3, 2), IntPoly::parse("x^2+2x^4+2x^6+x^8"));
  EXPECT_EQ(psi_weak_cyclic_pm(5, 1), IntPoly::parse("x^2+x^4"));
  EXPECT_EQ(psi_weak_cyclic_pm(3, 1), IntPoly::monomial(2));
  EXPECT_EQ(psi_weak_cyclic_pm(3, 3), burnside::psi_weak(cyclic(27)));
  EXPECT_EQ(psi_weak_cyclic_2pm(3, 1), IntPoly::parse("x^2+2x^3+x^4+x^5"));
  EXPECT_EQ(psi_weak_cyclic_2pm(5, 1), weak_row(10));
  EXPECT_EQ(psi_weak_cyclic_2pm(3, 2), weak_row(18));
  EXPECT_EQ(psi_weak_cyclic_4p(3), weak_row(12));
  EXPECT_EQ(psi_weak_cyclic_4p(5), weak_row(20));
  EXPECT_EQ(psi_weak_cyclic_4p(7), burnside::psi_weak(cyclic(28)));
}

TEST(ClosedForm, AlphaExponent) {
  EXPECT_EQ(alpha_exponent({2}, {5}), 2u);
  EXPECT_EQ(alpha_exponent({1, 1}, {3, 5}), 8u);
  EXPECT_EQ(alpha_exponent({2, 4}, {5, 13}), 12u);
}

TEST(ClosedForm, SquareFree) {
  EXPECT_EQ(psi_weak_cyclic_squarefree({{3, 5}, true}), burnside::psi_weak(cyclic(30)));
  EXPECT_EQ(psi_weak_cyclic_squarefree({{3, 5}, false}), weak_row(15));
  EXPECT_EQ(psi_weak_cyclic_squarefree({{3}, true}), IntPoly::parse("x^2+2x^3+x^4+x^5"));
  // the printed tail leaves a constant term behind
  EXPECT_EQ(psi_weak_cyclic_squarefree({{3}, true}, Variant::kLiteral).coeff(0), -1);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    EXPECT_EQ(psi_weak_cyclic_squarefree({{p}, false}), psi_weak_zp(p));
    EXPECT_EQ(psi_weak_cyclic_squarefree({{p}, true}), psi_weak_z2p(p));
  }
  EXPECT_THROW(psi_weak_cyclic_squarefree({{5, 3}, false}), std::invalid_argument);
}

TEST(ClosedForm, PrimeOrders) {
  EXPECT_EQ(psi_weak_zp(7), IntPoly::parse("x^2+x^4+x^6"));
  EXPECT_EQ(psi_weak_z2p(7), weak_row(14));
  EXPECT_EQ(psi_weak_zp(3), IntPoly::monomial(2));
  EXPECT_THROW(psi_weak_zp(2), std::invalid_argument);
  EXPECT_THROW(psi_weak_zp(9), std::invalid_argument);
}

TEST(ClosedForm, DihedralPrime) {
  EXPECT_EQ(psi_weak_dihedral_p(3), IntPoly::parse("x^2+2x^3+x^4+x^5"));
  for (std::uint64_t p : {5, 7, 11}) EXPECT_EQ(psi_weak_dihedral_p(p), burnside::psi_weak(dihedral(p))) << p;
  EXPECT_THROW(psi_weak_dihedral_p(3, Variant::kLiteral), InternalError);
}

TEST(ClosedForm, NonnegativeCoefficients) {
  for (std::uint64_t n = 2; n <= 40; ++n) EXPECT_TRUE(psi_equiv_cyclic(n).all_nonnegative());
  for (unsigned m = 2; m <= 8; ++m) EXPECT_TRUE(psi_weak_cyclic_2m(m).all_nonnegative());
  EXPECT_TRUE(psi_weak_cyclic_squarefree({{3, 5, 7, 11}, true}).all_nonnegative());
}
