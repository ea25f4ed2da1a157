#include "cayley/fixtures.hpp"

#include <stdexcept>

namespace cayley::fixtures {
namespace {

GroupTable product(std::initializer_list<GroupTable> parts, std::string label) {
  auto it = parts.begin();
  GroupTable out = *it++;
  for (; it != parts.end(); ++it) out = direct_product(out, *it);
  return out.with_label(std::move(label));
}

GroupTable named(GroupTable g, std::string label) { return g.with_label(std::move(label)); }

// x -> u x on Z_n
Automorphism unit_map(const GroupTable& zn, std::size_t u) {
  std::vector<Element> img(zn.order());
  for (std::size_t x = 0; x < zn.order(); ++x) img[x] = static_cast<Element>(u * x % zn.order());
  return Automorphism::make(zn, std::move(img));
}

}  // namespace

std::vector<GroupTable> small_groups() {
  const GroupTable z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4), z8 = cyclic(8);
  std::vector<GroupTable> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(cyclic(n));
  out.push_back(cyclic(4));
  out.push_back(product({z2, z2}, "Z2^2"));
  out.push_back(cyclic(5));
  out.push_back(cyclic(6));
  out.push_back(named(dihedral(3), "D3"));
  out.push_back(cyclic(7));
  out.push_back(cyclic(8));
  out.push_back(product({z4, z2}, "Z4xZ2"));
  out.push_back(product({z2, z2, z2}, "Z2^3"));
  out.push_back(named(dihedral(4), "D4"));
  out.push_back(named(dicyclic(2), "Q8"));
  out.push_back(cyclic(9));
  out.push_back(product({z3, z3}, "Z3xZ3"));
  out.push_back(cyclic(10));
  out.push_back(named(dihedral(5), "D5"));
  out.push_back(cyclic(11));
  out.push_back(cyclic(12));
  out.push_back(product({cyclic(6), z2}, "Z6xZ2"));
  out.push_back(named(dihedral(6), "D6"));
  out.push_back(permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"));
  out.push_back(named(dicyclic(3), "Dic3"));
  out.push_back(cyclic(13));
  out.push_back(cyclic(14));
  out.push_back(named(dihedral(7), "D7"));
  out.push_back(cyclic(15));

  // order 16
  out.push_back(cyclic(16));
  out.push_back(product({z8, z2}, "Z8xZ2"));
  out.push_back(product({z4, z4}, "Z4xZ4"));
  out.push_back(product({z4, z2, z2}, "Z4xZ2^2"));
  out.push_back(product({z2, z2, z2, z2}, "Z2^4"));
  out.push_back(named(dihedral(8), "D8"));
  out.push_back(named(dicyclic(4), "Q16"));
  out.push_back(semidirect_cyclic(z8, 2, unit_map(z8, 3), "SD16"));
  out.push_back(semidirect_cyclic(z8, 2, unit_map(z8, 5), "M16"));
  out.push_back(semidirect_cyclic(z4, 4, unit_map(z4, 3), "Z4:Z4"));
  {
    // (Z4 x Z2) : Z2 with (x, y) -> (x, y + x mod 2); (x, y) is encoded 2x + y
    const GroupTable base = direct_product(z4, z2);
    std::vector<Element> img(8);
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 2; ++y) img[2 * x + y] = 2 * x + (y + x) % 2;
    out.push_back(semidirect_cyclic(base, 2, Automorphism::make(base, img), "(Z4xZ2):Z2"));
  }
  out.push_back(product({dihedral(4), z2}, "D4xZ2"));
  out.push_back(product({dicyclic(2), z2}, "Q8xZ2"));
  {
    // central product Z4 o D4: identify (2, e) with (0, a^2); a^2 has index 2
    const GroupTable zd = direct_product(z4, dihedral(4));
    out.push_back(quotient(zd, ElementSet::of(zd.order(), {0, 2 * 8 + 2}), "Pauli"));
  }
  return out;
}

std::vector<GroupTable> lattice_groups() {
  std::vector<GroupTable> out = small_groups();
  const GroupTable z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
  out.push_back(permutation_group({{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"));
  out.push_back(product({z3, z3, z3}, "Z3^3"));
  out.push_back(cyclic(30));
  out.push_back(named(dihedral(15), "D15"));
  out.push_back(product({z2, z2, z2, z2, z2}, "Z2^5"));
  out.push_back(named(dicyclic(8), "Q32"));
  out.push_back(product({permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"), z4}, "A4xZ4"));
  out.push_back(product({z3, z3, dihedral(3)}, "Z3^2xD3"));
  out.push_back(cyclic(60));
  out.push_back(named(dihedral(30), "D30"));
  out.push_back(cyclic(64));
  out.push_back(named(dihedral(32), "D32"));
  out.push_back(product({z4, z4, z4}, "Z4^3"));
  out.push_back(product({z2, z2, z2, z2, z2, z2}, "Z2^6"));
  return out;
}

GroupTable find(const std::string& label) {
  for (auto& g : lattice_groups())
    if (g.label() == label) return g;
  throw std::invalid_argument("unknown fixture group '" + label + "'");
}

}  // namespace cayley::fixtures
