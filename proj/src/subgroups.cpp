#include <algorithm>
#include <unordered_set>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley {

std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw ResourceError("subgroup enumeration: group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));

  // Breadth-first joins: start from the cyclic subgroups and extend each
  // found subgroup by one cyclic subgroup at a time.
  struct Found {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;

  std::vector<Element> cyclic_reps;
  for (Element x = 0; x < n; ++x) {
    ElementSet c = g.closure({x});
    if (seen.insert(c).second) {
      cyclic_reps.push_back(x);
      found.push_back({std::move(c), {x}});
    }
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element x : cyclic_reps) {
      if (found[head].members.contains(x)) continue;
      std::vector<Element> gens = found[head].gens;
      gens.push_back(x);
      ElementSet joined = g.closure(gens);
      if (seen.insert(joined).second) found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back({std::move(f.members), 0});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    const auto sa = a.order(), sb = b.order();
    if (sa != sb) return sa < sb;
    return lex_less(a.members, b.members);
  });
  return out;
}

std::vector<Subgroup> lattice_moebius(const GroupTable& g, std::vector<Subgroup> subs) {
  // Work from the top of the lattice down: mu(K) = -sum_{H > K} mu(H).
  std::vector<std::size_t> idx(subs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return subs[a].order() > subs[b].order(); });
  if (subs.empty() || subs[idx.front()].order() != g.order())
    throw std::invalid_argument("lattice_moebius: subgroup list does not contain the whole group");
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    Subgroup& k = subs[idx[pos]];
    if (pos == 0) {
      k.moebius = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t up = 0; up < pos; ++up) {
      const Subgroup& h = subs[idx[up]];
      if (h.order() > k.order() && h.order() % k.order() == 0 && k.members.is_subset_of(h.members)) sum += h.moebius;
    }
    k.moebius = -sum;
  }
  return subs;
}

}  // namespace cayley
