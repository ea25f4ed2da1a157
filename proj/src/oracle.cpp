#include "cayley/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "block_masks.hpp"
#include "cayley/error.hpp"

namespace cayley::oracle {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const {
    std::size_t h = v.size();
    for (Element x : v) h = h * 1000003u ^ x;
    return h;
  }
};

// A subset of `autos` generating the same group: walk the list and keep an
// automorphism only if it is not already in the group generated so far.
std::vector<const Automorphism*> generating_subset(const std::vector<Automorphism>& autos) {
  std::vector<const Automorphism*> gens;
  if (autos.empty()) return gens;
  std::unordered_set<std::vector<Element>, VectorHash> group;
  std::vector<std::vector<Element>> elems;
  std::vector<Element> id(autos.front().size());
  for (Element x = 0; x < id.size(); ++x) id[x] = x;
  group.insert(id);
  elems.push_back(id);
  for (const auto& a : autos) {
    if (group.count(a.image())) continue;
    gens.push_back(&a);
    // Re-close: multiply every known element by every generator until stable.
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (const Automorphism* s : gens) {
        std::vector<Element> img(id.size());
        for (Element x = 0; x < img.size(); ++x) img[x] = (*s)(elems[head][x]);
        if (group.insert(img).second) elems.push_back(std::move(img));
      }
  }
  return gens;
}

}  // namespace

OrbitCensus orbit_census(const GroupTable& g, const std::vector<Automorphism>& autos, unsigned max_blocks) {
  for (const auto& a : autos)
    if (a.size() != g.order()) throw std::invalid_argument("orbit_census: automorphism size mismatch");
  const detail::InversionBlocks blocks(g, std::min(max_blocks, 31u), "orbit_census");
  detail::GenerationTable gen(blocks);
  gen.build(g);

  std::vector<detail::MaskPermutation> perms;
  for (const Automorphism* a : generating_subset(autos)) perms.emplace_back(blocks.permute(*a));

  struct Raw {
    detail::BlockMask rep;
    std::uint64_t size;
    unsigned degree;
  };
  std::vector<Raw> raw;
  OrbitCensus census;
  const std::uint64_t total = std::uint64_t{1} << blocks.count();
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto mark = [&](detail::BlockMask m) {
    const bool was = visited[m >> 6] >> (m & 63) & 1u;
    visited[m >> 6] |= std::uint64_t{1} << (m & 63);
    return !was;
  };
  std::vector<detail::BlockMask> queue;
  for (std::uint64_t start = 1; start < total; ++start) {
    const auto s = static_cast<detail::BlockMask>(start);
    if (!gen.generates(s) || !mark(s)) continue;
    queue.assign(1, s);
    detail::BlockMask best = s;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& p : perms) {
        const detail::BlockMask t = p(queue[head]);
        if (mark(t)) {
          queue.push_back(t);
          if (detail::mask_lex_less(t, best)) best = t;
        }
      }
    census.total_sets += queue.size();
    raw.push_back({best, queue.size(), blocks.degree(best)});
  }

  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return detail::mask_lex_less(a.rep, b.rep);
  });
  census.orbits.reserve(raw.size());
  for (const auto& r : raw)
    census.orbits.push_back({ConnectionSet::make(g, blocks.to_set(r.rep)), r.size, r.degree});
  return census;
}

IntPoly psi_from_census(const OrbitCensus& census) {
  IntPoly out;
  for (const auto& o : census.orbits) out += IntPoly::monomial(o.degree);
  return out;
}

}  // namespace cayley::oracle
