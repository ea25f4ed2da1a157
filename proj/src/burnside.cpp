#include "cayley/burnside.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "block_masks.hpp"
#include "cayley/error.hpp"

namespace cayley::burnside {
namespace {

// Multiset of block sizes, as counts indexed by size. Two (K, alpha) pairs
// with the same multiset have the same fixed-set polynomial.
using SizeCounts = std::vector<unsigned>;

// Block sizes of the symmetric alpha-closed partition of M \ {e}, where M is
// the largest alpha-invariant subset of the subgroup `in_k` (membership flags).
SizeCounts fixed_block_sizes(const GroupTable& g, const std::vector<char>& in_k, const Automorphism& alpha) {
  const std::size_t n = g.order();
  std::vector<char> m = in_k, cur = in_k, next(n);
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    for (Element x = 0; x < n; ++x)
      if (cur[x]) next[alpha(x)] = 1;
    if (next == in_k) break;
    for (std::size_t x = 0; x < n; ++x) m[x] &= next[x];
    cur.swap(next);
  }

  SizeCounts counts;
  std::vector<char> seen(n, 0);
  std::vector<Element> block;
  seen[g.identity()] = 1;
  for (Element x = 0; x < n; ++x) {
    if (!m[x] || seen[x]) continue;
    block.assign(1, x);
    seen[x] = 1;
    for (std::size_t head = 0; head < block.size(); ++head) {
      const Element a = alpha(block[head]), b = g.inverse(block[head]);
      if (!seen[a]) seen[a] = 1, block.push_back(a);
      if (!seen[b]) seen[b] = 1, block.push_back(b);
    }
    if (counts.size() <= block.size()) counts.resize(block.size() + 1, 0);
    ++counts[block.size()];
  }
  return counts;
}

IntPoly product_poly(const SizeCounts& counts) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t s = 1; s < counts.size(); ++s)
    if (counts[s]) out *= IntPoly::one_plus_x_pow(s).pow(counts[s]);
  return out;
}

std::vector<char> flags(const ElementSet& s) {
  std::vector<char> out(s.universe(), 0);
  s.for_each([&](Element x) { out[x] = 1; });
  return out;
}

// Weighted multiset-of-sizes accumulator: sum of weight * product_poly(key).
class Accumulator {
 public:
  void add(SizeCounts key, long long weight) {
    if (weight) terms_[std::move(key)] += static_cast<long>(weight);
  }
  void merge(const Accumulator& other) {
    for (const auto& [k, w] : other.terms_) terms_[k] += w;
  }
  IntPoly total() const {
    IntPoly out;
    for (const auto& [k, w] : terms_)
      if (w != 0) out += product_poly(k).scale(w);
    return out;
  }

 private:
  std::map<SizeCounts, BigInt> terms_;
};

}  // namespace

IntPoly sym_fixed_poly(const GroupTable& g, const ElementSet& k, const Automorphism& alpha) {
  if (k.universe() != g.order() || alpha.size() != g.order())
    throw std::invalid_argument("sym_fixed_poly: size mismatch with the group");
  if (g.closure(k.members()) != k) throw std::invalid_argument("sym_fixed_poly: K is not a subgroup");
  return product_poly(fixed_block_sizes(g, flags(k), alpha));
}

MoebiusLattice::MoebiusLattice(const GroupTable& g, std::size_t cap) : g_(&g) {
  for (auto& s : lattice_moebius(g, subgroups(g, cap)))
    if (s.moebius != 0) terms_.push_back(std::move(s));
}

IntPoly MoebiusLattice::moebius_sum(const Automorphism& alpha, EmptySet convention) const {
  IntPoly out;
  for (const auto& k : terms_) {
    IntPoly p = product_poly(fixed_block_sizes(*g_, flags(k.members), alpha));
    if (convention == EmptySet::kExcluded) p -= IntPoly::constant(1);
    out += p.scale(static_cast<long>(k.moebius));
  }
  return out;
}

IntPoly MoebiusLattice::fix_poly(const Automorphism& alpha) const { return moebius_sum(alpha).without_constant(); }

IntPoly fix_poly_moebius(const GroupTable& g, const Automorphism& alpha) { return MoebiusLattice(g).fix_poly(alpha); }

struct DirectFixPoly::Impl {
  Impl(const GroupTable& group, unsigned max_blocks)
      : g(group), blocks(group, std::min(max_blocks, 31u), "fix_poly_direct"), gen(blocks) {
    gen.build(group);
  }
  const GroupTable& g;
  detail::InversionBlocks blocks;
  detail::GenerationTable gen;
};

DirectFixPoly::DirectFixPoly(const GroupTable& g, unsigned max_blocks) : impl_(std::make_unique<Impl>(g, max_blocks)) {}
DirectFixPoly::~DirectFixPoly() = default;

IntPoly DirectFixPoly::operator()(const Automorphism& alpha) const {
  const auto& blocks = impl_->blocks;
  const auto& gen = impl_->gen;
  if (alpha.size() != impl_->g.order()) throw std::invalid_argument("fix_poly_direct: automorphism size mismatch");
  const detail::MaskPermutation perm(blocks.permute(alpha));
  std::vector<unsigned long long> counts(impl_->g.order() + 1, 0);
  const detail::BlockMask end = detail::BlockMask{1} << blocks.count();
  for (detail::BlockMask mask = 1; mask < end; ++mask)
    if (perm(mask) == mask && gen.generates(mask)) ++counts[blocks.degree(mask)];
  std::vector<BigInt> coeffs;
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(coeffs));
}

IntPoly fix_poly_direct(const GroupTable& g, const Automorphism& alpha, unsigned max_blocks) {
  return DirectFixPoly(g, max_blocks)(alpha);
}

IntPoly burnside_sum(const GroupTable& g, const std::vector<Automorphism>& autos, const EngineOptions& opts) {
  const MoebiusLattice lattice(g, opts.cap);
  std::vector<std::vector<char>> member_flags;
  for (const auto& k : lattice.terms()) member_flags.push_back(flags(k.members));

  auto run = [&](std::size_t begin, std::size_t end, Accumulator& acc) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t t = 0; t < member_flags.size(); ++t)
        acc.add(fixed_block_sizes(g, member_flags[t], autos[i]), lattice.terms()[t].moebius);
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, autos.size()));
  std::vector<Accumulator> parts(threads);
  if (threads == 1) {
    run(0, autos.size(), parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (autos.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(autos.size(), t * chunk), e = std::min(autos.size(), b + chunk);
      pool.emplace_back(run, b, e, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t t = 1; t < threads; ++t) parts[0].merge(parts[t]);
  return parts[0].total().without_constant();
}

IntPoly burnside_average(const GroupTable& g, const std::vector<Automorphism>& autos, const EngineOptions& opts) {
  if (autos.empty()) throw std::invalid_argument("burnside_average: empty automorphism list");
  return burnside_sum(g, autos, opts).divide_exact(BigInt(static_cast<unsigned long>(autos.size())));
}

IntPoly psi_weak(const GroupTable& g, const EngineOptions& opts) {
  return burnside_average(g, automorphisms(g, opts.cap), opts);
}

IntPoly psi_equiv(const GroupTable& g, const EngineOptions& opts) {
  return burnside_average(g, inner_automorphisms(g), opts);
}

BigInt count_weak(const GroupTable& g, const EngineOptions& opts) { return psi_weak(g, opts).eval(1); }
BigInt count_equiv(const GroupTable& g, const EngineOptions& opts) { return psi_equiv(g, opts).eval(1); }

}  // namespace cayley::burnside
