#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "latdec/lattice.hpp"

namespace latdec {

/// An algebraic partition: nonzero elements, pairwise meets zero, join equal
/// to the top. Blocks are kept in canonical ascending-mask order so equal
/// partitions compare equal structurally. Immutable.
class Partition {
 public:
  const Lattice& lattice() const noexcept { return lattice_; }
  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Element& block(std::size_t i) const { return blocks_.at(i); }

  /// "{a,c}|{b}|{d,e}"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += '|';
      out += lattice_.name(blocks_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.lattice_.same_as(b.lattice_) && a.blocks_ == b.blocks_;
  }

 private:
  friend Partition make_partition(const Lattice&, std::vector<Element>);
  Partition(Lattice lattice, std::vector<Element> blocks)
      : lattice_(std::move(lattice)), blocks_(std::move(blocks)) {}

  Lattice lattice_;
  std::vector<Element> blocks_;
};

/// Validates the three partition axioms and canonicalizes block order.
inline Partition make_partition(const Lattice& lattice, std::vector<Element> blocks) {
  for (const Element& b : blocks) {
    if (!lattice.owns(b)) fail(Errc::lattice_mismatch, "block belongs to a different lattice");
    if (b.mask() == 0) fail(Errc::zero_block, "the zero element cannot be a block");
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (blocks[i] == blocks[i - 1])
      fail(Errc::duplicate_block, "duplicate block " + lattice.name(blocks[i]));
  PointMask seen = 0;
  for (const Element& b : blocks) {
    if (seen & b.mask()) {
      // Name the offending pair for the error message.
      for (const Element& a : blocks) {
        if (a == b) break;
        if (a.mask() & b.mask())
          fail(Errc::overlapping_blocks,
               "blocks " + lattice.name(a) + " and " + lattice.name(b) + " have nonzero meet");
      }
    }
    seen |= b.mask();
  }
  if (seen != lattice.top().mask())
    fail(Errc::join_not_top,
         "blocks join to " + lattice.name(lattice.element_from_mask(seen)) + ", not to the top element");
  return Partition(lattice, std::move(blocks));
}

/// Witness that `fine` refines `coarse`: for each fine block the unique
/// coarse block above it, and for each coarse block the fine blocks whose
/// join reconstructs it.
struct RefinementWitness {
  Partition fine;
  Partition coarse;
  std::vector<std::size_t> coarse_of;             // fine block index -> coarse block index
  std::vector<std::vector<std::size_t>> fine_of;  // coarse block index -> fine block indices
};

/// The refinement order on partitions. Returns the witness when every block
/// of `fine` lies below some (necessarily unique) block of `coarse`.
inline std::optional<RefinementWitness> refines(const Partition& fine, const Partition& coarse) {
  if (!fine.lattice().same_as(coarse.lattice()))
    fail(Errc::lattice_mismatch, "partitions live in different lattices");
  const Lattice& l = fine.lattice();
  std::vector<std::size_t> coarse_of(fine.block_count());
  std::vector<std::vector<std::size_t>> fine_of(coarse.block_count());
  for (std::size_t i = 0; i < fine.block_count(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < coarse.block_count(); ++j) {
      if (l.leq(fine.block(i), coarse.block(j))) {
        coarse_of[i] = j;
        fine_of[j].push_back(i);
        found = true;
        break;  // uniqueness: a block below two coarse blocks would be below their zero meet
      }
    }
    if (!found) return std::nullopt;
  }
  return RefinementWitness{fine, coarse, std::move(coarse_of), std::move(fine_of)};
}

inline bool is_refinement(const Partition& fine, const Partition& coarse) {
  return refines(fine, coarse).has_value();
}

/// Greatest lower bound in the partition lattice: all nonzero pairwise meets.
inline Partition partition_meet(const Partition& e, const Partition& d) {
  if (!e.lattice().same_as(d.lattice()))
    fail(Errc::lattice_mismatch, "partitions live in different lattices");
  const Lattice& l = e.lattice();
  std::vector<Element> blocks;
  for (const Element& a : e.blocks())
    for (const Element& b : d.blocks()) {
      Element m = l.meet(a, b);
      if (m.mask() != 0) blocks.push_back(m);
    }
  return make_partition(l, std::move(blocks));
}

namespace detail {

/// Atoms of a subalgebra given as the sorted element masks of a
/// complement-closed join-closed set: for each point, the least member
/// containing it; the distinct such members are the atoms.
inline std::vector<PointMask> subalgebra_atoms(const std::vector<PointMask>& members,
                                               std::size_t point_count) {
  std::vector<PointMask> atoms;
  for (std::size_t p = 0; p < point_count; ++p) {
    PointMask least = 0;
    bool first = true;
    for (PointMask m : members) {
      if (!(m & (PointMask(1) << p))) continue;
      least = first ? m : (least & m);
      first = false;
    }
    if (!first) atoms.push_back(least);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace detail

/// Least upper bound in the partition lattice, computed constructively as
/// the atoms of the intersection of the two generated subalgebras.
inline Partition partition_join(const Partition& e, const Partition& d) {
  if (!e.lattice().same_as(d.lattice()))
    fail(Errc::lattice_mismatch, "partitions live in different lattices");
  const Lattice& l = e.lattice();
  auto as_masks = [](const std::vector<Element>& xs) {
    std::vector<PointMask> out;
    out.reserve(xs.size());
    for (const Element& x : xs) out.push_back(x.mask());
    return out;  // join_closure output is already sorted
  };
  std::vector<PointMask> ce = as_masks(l.join_closure(e.blocks()));
  std::vector<PointMask> cd = as_masks(l.join_closure(d.blocks()));
  std::vector<PointMask> common;
  std::set_intersection(ce.begin(), ce.end(), cd.begin(), cd.end(), std::back_inserter(common));
  std::vector<Element> blocks;
  for (PointMask m : detail::subalgebra_atoms(common, l.point_count()))
    blocks.push_back(l.element_from_mask(m));
  return make_partition(l, std::move(blocks));
}

/// The single-block partition {1}.
inline Partition partition_top(const Lattice& l) {
  if (l.size() < 2) fail(Errc::trivial_lattice, "the one-element lattice admits no partition");
  return make_partition(l, {l.top()});
}

/// The subalgebra generated by the blocks: all joins of block subsets,
/// including the empty join. Always a Boolean algebra of size 2^|blocks|.
inline std::vector<Element> generated_subalgebra(const Partition& e) {
  return e.lattice().join_closure(e.blocks());
}

/// Budget guard for partition enumeration; the number of partitions grows
/// like the Bell numbers, so searches must be capped.
struct EnumerationBudget {
  std::size_t max_partitions = 2'000'000;
  std::size_t max_steps = 50'000'000;
};

/// Visits every algebraic partition exactly once, in a deterministic
/// backtracking order. Blocks cover points exactly (joins are unions of
/// disjoint down-sets), so this is exact-cover search over the nonzero
/// elements. The visitor may return bool (false stops early) or void.
template <typename Visitor>
void for_each_partition(const Lattice& l, Visitor&& visit, const EnumerationBudget& budget = {}) {
  if (l.size() < 2) fail(Errc::trivial_lattice, "the one-element lattice admits no partition");
  const std::size_t n = l.point_count();
  std::vector<std::vector<Element>> by_lowest_point(n);
  for (const Element& e : l.elements()) {
    if (e.mask() == 0) continue;
    by_lowest_point[std::countr_zero(e.mask())].push_back(e);
  }
  const PointMask full = l.top().mask();
  std::vector<Element> chosen;
  std::size_t emitted = 0;
  std::size_t steps = 0;
  bool stopped = false;

  auto emit = [&](const std::vector<Element>& blocks) -> bool {
    if (++emitted > budget.max_partitions)
      fail(Errc::budget_exceeded, "more than " + std::to_string(budget.max_partitions) + " partitions");
    Partition p = make_partition(l, blocks);
    if constexpr (std::is_void_v<std::invoke_result_t<Visitor&, const Partition&>>) {
      visit(p);
      return true;
    } else {
      return static_cast<bool>(visit(p));
    }
  };

  auto recurse = [&](auto&& self, PointMask covered) -> void {
    if (stopped) return;
    if (covered == full) {
      if (!emit(chosen)) stopped = true;
      return;
    }
    const std::size_t p = static_cast<std::size_t>(std::countr_zero(~covered & full));
    for (const Element& cand : by_lowest_point[p]) {
      if (stopped) return;
      if (++steps > budget.max_steps)
        fail(Errc::budget_exceeded, "enumeration exceeded " + std::to_string(budget.max_steps) + " steps");
      if (cand.mask() & covered) continue;
      chosen.push_back(cand);
      self(self, covered | cand.mask());
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
}

/// All partitions, in enumeration order.
inline std::vector<Partition> enumerate_partitions(const Lattice& l,
                                                   const EnumerationBudget& budget = {}) {
  std::vector<Partition> out;
  for_each_partition(l, [&](const Partition& p) { out.push_back(p); }, budget);
  return out;
}

/// The least partition. In the Boolean case this is the atom partition; in
/// general the atoms need not form a partition, so it is the fold of the
/// meet over the (finite) set of all partitions.
inline Partition partition_bottom(const Lattice& l, const EnumerationBudget& budget = {}) {
  if (l.size() < 2) fail(Errc::trivial_lattice, "the one-element lattice admits no partition");
  if (l.is_boolean()) return make_partition(l, l.atoms());
  std::optional<Partition> acc;
  for_each_partition(
      l,
      [&](const Partition& p) {
        acc = acc ? partition_meet(*acc, p) : p;
      },
      budget);
  return *acc;
}

}  // namespace latdec
