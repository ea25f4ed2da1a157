#pragma once

// Compact representation shared by the brute-force routes: a symmetric,
// identity-free subset of a group with at most 64 elements is a bitmask over
// its inversion blocks ({g, g^-1} pairs and single involutions).

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley::detail {

using BlockMask = std::uint32_t;

class InversionBlocks {
 public:
  InversionBlocks(const GroupTable& g, unsigned max_blocks, const char* who) : g_(&g) {
    if (g.order() > 64)
      throw ResourceError(std::string(who) + ": group order " + std::to_string(g.order()) +
                          " is beyond the brute-force range");
    std::vector<bool> seen(g.order(), false);
    block_of_.assign(g.order(), 0);
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity() || seen[x]) continue;
      const Element y = g.inverse(x);
      seen[x] = seen[y] = true;
      std::uint64_t m = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
      block_of_[x] = block_of_[y] = static_cast<unsigned>(elems_.size());
      elems_.push_back(m);
      rep_.push_back(x);
    }
    if (elems_.size() > max_blocks)
      throw ResourceError(std::string(who) + ": " + std::to_string(elems_.size()) +
                          " inversion blocks exceed the enumeration bound of " + std::to_string(max_blocks));
    for (unsigned chunk = 0; chunk < 4; ++chunk)
      for (unsigned byte = 0; byte < 256; ++byte) {
        std::uint64_t m = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
          const unsigned b = chunk * 8 + bit;
          if ((byte >> bit & 1u) && b < elems_.size()) m |= elems_[b];
        }
        elem_table_[chunk][byte] = m;
      }
  }

  unsigned count() const { return static_cast<unsigned>(elems_.size()); }
  Element rep(unsigned b) const { return rep_[b]; }

  std::uint64_t elements(BlockMask mask) const {
    return elem_table_[0][mask & 0xff] | elem_table_[1][(mask >> 8) & 0xff] | elem_table_[2][(mask >> 16) & 0xff] |
           elem_table_[3][mask >> 24];
  }
  unsigned degree(BlockMask mask) const { return static_cast<unsigned>(std::popcount(elements(mask))); }

  ElementSet to_set(BlockMask mask) const {
    ElementSet s(g_->order());
    const std::uint64_t e = elements(mask);
    for (Element x = 0; x < g_->order(); ++x)
      if (e >> x & 1u) s.insert(x);
    return s;
  }

  /// Image of every block under an automorphism, as a block permutation.
  std::vector<unsigned> permute(const Automorphism& alpha) const {
    std::vector<unsigned> out(elems_.size());
    for (unsigned b = 0; b < elems_.size(); ++b) out[b] = block_of_[alpha(rep_[b])];
    return out;
  }

  /// True iff the elements of `mask` generate the whole group.
  bool generates(BlockMask mask) const {
    const GroupTable& g = *g_;
    std::array<Element, 32> gens{};
    unsigned ngens = 0;
    for (BlockMask m = mask; m; m &= m - 1) gens[ngens++] = rep_[static_cast<unsigned>(std::countr_zero(m))];
    std::array<Element, 64> queue{};
    unsigned tail = 0;
    std::uint64_t reached = std::uint64_t{1} << g.identity();
    queue[tail++] = g.identity();
    for (unsigned head = 0; head < tail; ++head) {
      for (unsigned i = 0; i < ngens; ++i) {
        const Element x = g.mul(queue[head], gens[i]);
        if (!(reached >> x & 1u)) {
          reached |= std::uint64_t{1} << x;
          queue[tail++] = x;
        }
      }
    }
    return tail == g.order();
  }

 private:
  const GroupTable* g_;
  std::vector<std::uint64_t> elems_;
  std::vector<Element> rep_;
  std::vector<unsigned> block_of_;
  std::array<std::array<std::uint64_t, 256>, 4> elem_table_{};
};

/// Applies a block permutation to masks with four byte lookups.
class MaskPermutation {
 public:
  explicit MaskPermutation(const std::vector<unsigned>& perm) {
    for (unsigned chunk = 0; chunk < 4; ++chunk)
      for (unsigned byte = 0; byte < 256; ++byte) {
        BlockMask m = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
          const unsigned b = chunk * 8 + bit;
          if ((byte >> bit & 1u) && b < perm.size()) m |= BlockMask{1} << perm[b];
        }
        table_[chunk][byte] = m;
      }
  }
  BlockMask operator()(BlockMask mask) const {
    return table_[0][mask & 0xff] | table_[1][(mask >> 8) & 0xff] | table_[2][(mask >> 16) & 0xff] |
           table_[3][mask >> 24];
  }

 private:
  std::array<std::array<BlockMask, 256>, 4> table_{};
};

/// For every block mask, whether its elements generate the group. Built by a
/// subset recursion: the subgroup generated by a mask is the join of the one
/// generated by the mask minus its lowest block with that block's element.
/// Joins are computed by closure and memoized per (subgroup, block).
class GenerationTable {
 public:
  explicit GenerationTable(const InversionBlocks& blocks) : blocks_(&blocks) {}

  void build(const GroupTable& g) {
    const unsigned nb = blocks_->count();
    const std::size_t total = std::size_t{1} << nb;
    ids_.assign(total, 0);
    subgroup_.clear();
    index_.clear();
    join_.clear();
    const std::uint64_t trivial = std::uint64_t{1} << g.identity();
    intern(trivial, nb);
    const std::uint64_t full = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    for (std::size_t mask = 1; mask < total; ++mask) {
      const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
      const std::uint16_t parent = ids_[mask & (mask - 1)];
      const std::size_t key = static_cast<std::size_t>(parent) * nb + low;
      if (join_[key] < 0) {
        const std::uint16_t id = intern(close(g, subgroup_[parent], blocks_->rep(low)), nb);
        join_[key] = id;
      }
      ids_[mask] = static_cast<std::uint16_t>(join_[key]);
    }
    auto it = index_.find(full);
    full_id_ = it == index_.end() ? -1 : static_cast<int>(it->second);
    if (g.order() == 1) full_id_ = 0;
  }

  bool generates(BlockMask mask) const { return static_cast<int>(ids_[mask]) == full_id_; }

 private:
  std::uint16_t intern(std::uint64_t members, unsigned nb) {
    auto [it, inserted] = index_.try_emplace(members, static_cast<std::uint16_t>(subgroup_.size()));
    if (inserted) {
      if (subgroup_.size() >= 0xffff) throw InternalError("generation table: too many subgroups");
      subgroup_.push_back(members);
      join_.resize(subgroup_.size() * nb, -1);
    }
    return it->second;
  }

  static std::uint64_t close(const GroupTable& g, std::uint64_t members, Element x) {
    std::vector<Element> gens{x};
    for (std::uint64_t m = members; m; m &= m - 1) gens.push_back(static_cast<Element>(std::countr_zero(m)));
    std::array<Element, 64> queue{};
    unsigned tail = 0;
    std::uint64_t reached = std::uint64_t{1} << g.identity();
    queue[tail++] = g.identity();
    for (unsigned head = 0; head < tail; ++head)
      for (Element s : gens) {
        const Element y = g.mul(queue[head], s);
        if (!(reached >> y & 1u)) {
          reached |= std::uint64_t{1} << y;
          queue[tail++] = y;
        }
      }
    return reached;
  }

  const InversionBlocks* blocks_;
  std::vector<std::uint16_t> ids_;
  std::vector<std::uint64_t> subgroup_;
  std::unordered_map<std::uint64_t, std::uint16_t> index_;
  std::vector<std::int32_t> join_;
  int full_id_ = -1;
};

/// Element-bitstring order on block masks. Blocks are indexed by their least
/// element, so the first differing element of two sets is the least element
/// of their first differing block.
inline bool mask_lex_less(BlockMask a, BlockMask b) {
  const BlockMask diff = a ^ b;
  return diff && (b >> std::countr_zero(diff) & 1u);
}

}  // namespace cayley::detail
