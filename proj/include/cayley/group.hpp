#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cayley/element_set.hpp"

namespace cayley {

/// Structural tag that enables the specialized automorphism constructions.
enum class Family { kCyclic, kDihedral, kOther };

inline constexpr std::size_t kDefaultGroupCap = 256;

/// A finite group given by its multiplication table on indices 0..n-1.
///
/// Construction through from_table() verifies the group axioms; the named
/// constructors below (cyclic, dihedral, ...) build tables that are groups by
/// construction and the test suite re-verifies them with validate_group_axioms.
class GroupTable {
 public:
  /// Validates closure, associativity, identity and inverses. Errors name
  /// the offending entry or triple.
  static GroupTable from_table(const std::vector<std::vector<Element>>& rows, std::string label = "table");
  /// Plain-text format: first token n, then n rows of n indices.
  static GroupTable parse_text(std::istream& in, std::string label = "table");

  std::size_t order() const { return n_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element g) const { return inverse_[g]; }
  const std::vector<Element>& inverse_map() const { return inverse_; }
  const std::string& label() const { return label_; }
  Family family() const { return family_; }
  /// n for cyclic(n) and dihedral(n); 0 otherwise.
  std::size_t family_param() const { return family_param_; }

  std::size_t element_order(Element g) const;
  bool is_abelian() const;
  bool is_involution(Element g) const { return g != identity_ && inverse_[g] == g; }

  ElementSet all() const;
  ElementSet empty_set() const { return ElementSet(n_); }
  /// Subgroup generated by `gens`.
  ElementSet closure(const std::vector<Element>& gens) const;

  /// Raw table row-major, used by the binding layer and tests.
  const std::vector<Element>& table() const { return mul_; }

  GroupTable with_label(std::string label) const;

 private:
  friend GroupTable make_group(std::size_t n, std::vector<Element> mul, std::string label, Family family,
                               std::size_t param);
  GroupTable(std::size_t n, std::vector<Element> mul, std::string label, Family family, std::size_t param);

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string label_;
  Family family_ = Family::kOther;
  std::size_t family_param_ = 0;
};

/// Throws std::invalid_argument describing the first violated axiom.
void validate_group_axioms(std::size_t n, const std::vector<Element>& table);

// Constructors. Element encodings:
//   cyclic(n):   index i is the residue i mod n.
//   dihedral(n): index i < n is a^i, index n+i is b a^i (b a = a^{-1} b).
//   direct_product(G, H): (g, h) is g * |H| + h.
//   dicyclic(n): order 4n, <a, b | a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}>,
//                index i + 2n*j is a^i b^j.
GroupTable cyclic(std::size_t n);
GroupTable dihedral(std::size_t n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable dicyclic(std::size_t n);

class Automorphism;

/// N x| Z_k with the generator of Z_k acting as `phi`; phi^k must be the
/// identity. (x, j) is encoded as x + |N| * j.
GroupTable semidirect_cyclic(const GroupTable& normal, std::size_t k, const Automorphism& phi, std::string label);

/// Group generated by permutations of {0..degree-1}; composition (p q)(x) = p(q(x)).
GroupTable permutation_group(const std::vector<std::vector<Element>>& generators, std::string label);

/// G / N for a normal subgroup N (throws if N is not normal).
GroupTable quotient(const GroupTable& g, const ElementSet& normal, std::string label);

/// A verified group automorphism, stored as the image of every element.
class Automorphism {
 public:
  /// Checks bijectivity and the homomorphism law on all n^2 pairs.
  static Automorphism make(const GroupTable& g, std::vector<Element> image);
  static Automorphism identity(const GroupTable& g);

  Element operator()(Element x) const { return image_[x]; }
  const std::vector<Element>& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  bool is_identity() const;

  /// this followed by `next`: x -> next(this(x)).
  Automorphism then(const Automorphism& next) const;
  ElementSet apply(const ElementSet& s) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  explicit Automorphism(std::vector<Element> image) : image_(std::move(image)) {}
  std::vector<Element> image_;
};

bool is_automorphism(const GroupTable& g, const std::vector<Element>& image);

struct Subgroup {
  ElementSet members;
  /// Lattice Moebius value; filled by lattice_moebius().
  long long moebius = 0;

  std::size_t order() const { return members.size(); }
};

/// A symmetric, identity-free subset of a group: a candidate connection set.
class ConnectionSet {
 public:
  /// Throws std::invalid_argument if `bits` contains the identity or is not
  /// closed under inversion.
  static ConnectionSet make(const GroupTable& g, ElementSet bits);
  static ConnectionSet make(const GroupTable& g, const std::vector<Element>& members);

  const ElementSet& bits() const { return bits_; }
  std::size_t degree() const { return bits_.size(); }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  explicit ConnectionSet(ElementSet bits) : bits_(std::move(bits)) {}
  ElementSet bits_;
};

/// Every subgroup exactly once, sorted by order then lexicographically.
/// Throws ResourceError when |G| > cap.
std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t cap = kDefaultGroupCap);

/// Fills the Moebius value of every subgroup: mu(G) = 1 and
/// sum_{H >= K} mu(H) = 0 for K < G. `subs` must be the complete lattice.
std::vector<Subgroup> lattice_moebius(const GroupTable& g, std::vector<Subgroup> subs);

/// Aut(G), identity first. Uses the unit / alpha_ij constructions for
/// cyclic and dihedral (n >= 3) tables, the generic search otherwise.
std::vector<Automorphism> automorphisms(const GroupTable& g, std::size_t cap = kDefaultGroupCap);

/// Backtracking over generator images; throws ResourceError when |G| > cap.
std::vector<Automorphism> automorphisms_generic(const GroupTable& g, std::size_t cap = kDefaultGroupCap);
/// x -> u x for units u mod n. Requires a cyclic() table.
std::vector<Automorphism> cyclic_automorphisms(const GroupTable& g);
/// a -> a^i, b -> b a^j. Requires a dihedral(n) table with n >= 3.
std::vector<Automorphism> dihedral_automorphisms(const GroupTable& g);

/// Distinct conjugation maps x -> g x g^{-1}, identity first.
std::vector<Automorphism> inner_automorphisms(const GroupTable& g);

bool generates(const GroupTable& g, const ConnectionSet& omega);
bool generates(const GroupTable& g, const ElementSet& omega);

using Block = std::vector<Element>;

/// Partitions S into the orbits of the group generated by alpha and
/// inversion, each block sorted, blocks ordered by their least element.
/// S must exclude the identity and satisfy alpha(S) = S.
std::vector<Block> symmetric_blocks(const GroupTable& g, const ElementSet& s, const Automorphism& alpha);

}  // namespace cayley
