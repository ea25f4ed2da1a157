#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/numtheory.hpp"

namespace cayley {
namespace {

constexpr std::size_t kMaxAutomorphisms = 200000;

// Greedy generating sequence: each step adds the element that enlarges the
// generated subgroup the most (ties broken by larger order, then index).
std::vector<Element> greedy_generators(const GroupTable& g) {
  std::vector<Element> gens;
  ElementSet current = g.closure({});
  while (current.size() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0, best_order = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const std::size_t size = g.closure(trial).size();
      const std::size_t ord = g.element_order(x);
      if (size > best_size || (size == best_size && ord > best_order)) {
        best = x;
        best_size = size;
        best_order = ord;
      }
    }
    gens.push_back(best);
    current = g.closure(gens);
  }
  return gens;
}

// Extends gens[i] -> images[i] (i < count) to a map on the generated
// subgroup. Returns false if the extension is not a well-defined injective
// homomorphism.
bool extend_map(const GroupTable& g, const std::vector<Element>& gens, const std::vector<Element>& images,
                std::size_t count, std::vector<Element>& map, std::vector<bool>& used) {
  const std::size_t n = g.order();
  const auto unset = static_cast<Element>(n);
  std::fill(map.begin(), map.end(), unset);
  std::fill(used.begin(), used.end(), false);
  map[g.identity()] = g.identity();
  used[g.identity()] = true;
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element h = queue[head];
    for (std::size_t i = 0; i < count; ++i) {
      const Element x = g.mul(h, gens[i]);
      const Element y = g.mul(map[h], images[i]);
      if (map[x] == unset) {
        if (used[y]) return false;
        map[x] = y;
        used[y] = true;
        queue.push_back(x);
      } else if (map[x] != y) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Automorphism> automorphisms_generic(const GroupTable& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw ResourceError("automorphism search: group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  const std::vector<Element> gens = greedy_generators(g);
  if (gens.empty()) return {Automorphism::identity(g)};

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = g.element_order(gens[i]);
    for (Element x = 0; x < n; ++x)
      if (g.element_order(x) == ord) candidates[i].push_back(x);
  }

  std::vector<Automorphism> out;
  std::vector<Element> images(gens.size());
  std::vector<Element> map(n);
  std::vector<bool> used(n);
  // Depth-first over generator images with a consistency check at each level.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      out.push_back(Automorphism::make(g, map));
      if (out.size() > kMaxAutomorphisms)
        throw ResourceError("automorphism search: more than " + std::to_string(kMaxAutomorphisms) +
                            " automorphisms");
      return;
    }
    for (Element y : candidates[depth]) {
      images[depth] = y;
      if (!extend_map(g, gens, images, depth + 1, map, used)) continue;
      self(self, depth + 1);
    }
  };
  search(search, 0);

  auto id = std::find_if(out.begin(), out.end(), [](const Automorphism& a) { return a.is_identity(); });
  std::rotate(out.begin(), id, id + 1);
  return out;
}

std::vector<Automorphism> cyclic_automorphisms(const GroupTable& g) {
  if (g.family() != Family::kCyclic) throw std::invalid_argument("cyclic_automorphisms: not a cyclic() table");
  const std::size_t n = g.order();
  std::vector<Automorphism> out;
  for (std::size_t u = 0; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::vector<Element> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Element>(u * x % n);
    out.push_back(Automorphism::make(g, std::move(img)));
  }
  return out;
}

std::vector<Automorphism> dihedral_automorphisms(const GroupTable& g) {
  if (g.family() != Family::kDihedral || g.family_param() < 3)
    throw std::invalid_argument("dihedral_automorphisms: requires a dihedral(n) table with n >= 3");
  const std::size_t n = g.family_param();
  std::vector<Automorphism> out;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::gcd(i, n) != 1) continue;
    for (std::size_t j = 0; j < n; ++j) {
      // a^k -> a^{ik}, b a^k -> b a^{j + ik}
      std::vector<Element> img(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        img[k] = static_cast<Element>(i * k % n);
        img[n + k] = static_cast<Element>(n + (j + i * k) % n);
      }
      out.push_back(Automorphism::make(g, std::move(img)));
    }
  }
  return out;
}

std::vector<Automorphism> automorphisms(const GroupTable& g, std::size_t cap) {
  if (g.family() == Family::kCyclic) return cyclic_automorphisms(g);
  if (g.family() == Family::kDihedral && g.family_param() >= 3) return dihedral_automorphisms(g);
  return automorphisms_generic(g, cap);
}

}  // namespace cayley
