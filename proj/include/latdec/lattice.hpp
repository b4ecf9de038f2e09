#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latdec/error.hpp"

namespace latdec {

/// Bitset of generator points. Down-sets of the generator poset are encoded
/// as masks, so meet is bitwise-and, join is bitwise-or and the order is
/// mask inclusion. Distributivity comes for free from this representation.
using PointMask = std::uint64_t;

class Lattice;

/// One element of a specific Lattice: the set of generator points in its
/// down-set. Trivially copyable; only valid against the lattice that minted
/// it (checked at every operation).
class Element {
 public:
  PointMask mask() const noexcept { return mask_; }
  std::uint64_t lattice_id() const noexcept { return lattice_id_; }

  friend bool operator==(const Element&, const Element&) = default;
  // Mask order first: sorting same-lattice elements yields the canonical
  // ascending-bitset order used everywhere for reproducible output.
  friend std::strong_ordering operator<=>(const Element&, const Element&) = default;

 private:
  friend class Lattice;
  Element(PointMask mask, std::uint64_t lattice_id) : mask_(mask), lattice_id_(lattice_id) {}

  PointMask mask_;
  std::uint64_t lattice_id_;
};

/// A finite distributive lattice, represented as the lattice of down-sets of
/// a finite poset of named points (the join-irreducibles). The power-set
/// case is the antichain poset, where every subset of points is a down-set.
///
/// Lattices are immutable after construction and cheap to copy (shared
/// internals), so they are safe to share across concurrent readers.
class Lattice {
 public:
  static constexpr std::size_t default_max_points = 16;

  /// Power set of the named atoms.
  static Lattice boolean(const std::vector<std::string>& atom_names,
                         std::size_t max_points = default_max_points) {
    if (atom_names.empty()) fail(Errc::empty_atom_set, "a Boolean lattice needs at least one atom");
    return build(atom_names, {}, max_points);
  }

  /// Lattice of all down-sets of the poset given by `covers` (each pair
  /// [lower, upper] asserts lower < upper). An empty point list yields the
  /// one-element lattice, which is valid but admits no partition.
  static Lattice from_poset(const std::vector<std::string>& points,
                            const std::vector<std::pair<std::string, std::string>>& covers,
                            std::size_t max_points = default_max_points) {
    return build(points, covers, max_points);
  }

  std::size_t size() const noexcept { return impl_->elems.size(); }
  std::size_t point_count() const noexcept { return impl_->point_names.size(); }
  const std::vector<std::string>& points() const noexcept { return impl_->point_names; }

  /// True when the lattice is complemented, i.e. the generator poset is an
  /// antichain and the lattice is the full power set of its points.
  bool is_boolean() const noexcept { return impl_->boolean_kind; }

  std::uint64_t id() const noexcept { return impl_->id; }
  bool same_as(const Lattice& other) const noexcept { return impl_ == other.impl_; }

  Element bottom() const noexcept { return Element(0, impl_->id); }
  Element top() const noexcept { return Element(impl_->full, impl_->id); }

  bool owns(const Element& e) const noexcept { return e.lattice_id() == impl_->id; }

  Element meet(const Element& a, const Element& b) const {
    require_mine(a);
    require_mine(b);
    return Element(a.mask() & b.mask(), impl_->id);
  }

  Element join(const Element& a, const Element& b) const {
    require_mine(a);
    require_mine(b);
    return Element(a.mask() | b.mask(), impl_->id);
  }

  bool leq(const Element& a, const Element& b) const {
    require_mine(a);
    require_mine(b);
    return (a.mask() & b.mask()) == a.mask();
  }

  /// All minimal nonzero elements. These are the singleton down-sets of the
  /// minimal poset points.
  std::vector<Element> atoms() const {
    if (size() < 2) fail(Errc::trivial_lattice, "the one-element lattice has no atoms");
    std::vector<Element> out;
    for (std::size_t p = 0; p < point_count(); ++p)
      if (impl_->strictly_below[p] == 0) out.push_back(Element(bit(p), impl_->id));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The unique x with a∨x = 1 and a∧x = 0, when it exists. In the down-set
  /// encoding the only candidate is the mask complement; it works iff that
  /// mask is itself a down-set.
  std::optional<Element> complement(const Element& a) const {
    require_mine(a);
    PointMask cand = impl_->full & ~a.mask();
    if (impl_->elem_index.count(cand)) return Element(cand, impl_->id);
    return std::nullopt;
  }

  /// All joins of subsets of xs, including the empty join 0. When xs is a
  /// partition this is the subalgebra it generates.
  std::vector<Element> join_closure(std::span<const Element> xs) const {
    std::vector<PointMask> closed{0};
    for (const Element& x : xs) {
      require_mine(x);
      std::vector<PointMask> next = closed;
      next.reserve(closed.size() * 2);
      for (PointMask m : closed) next.push_back(m | x.mask());
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      closed = std::move(next);
    }
    std::vector<Element> out;
    out.reserve(closed.size());
    for (PointMask m : closed) out.push_back(Element(m, impl_->id));
    return out;
  }

  /// All elements in canonical ascending-mask order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (PointMask m : impl_->elems) out.push_back(Element(m, impl_->id));
    return out;
  }

  /// Position of an element in the canonical order; the inverse of
  /// element_at. Used as a dense key by valuations.
  std::size_t index_of(const Element& e) const {
    require_mine(e);
    auto it = impl_->elem_index.find(e.mask());
    if (it == impl_->elem_index.end())
      fail(Errc::lattice_mismatch, "element is not a member of this lattice");
    return it->second;
  }

  Element element_at(std::size_t index) const {
    if (index >= size()) fail(Errc::unknown_point, "element index out of range");
    return Element(impl_->elems[index], impl_->id);
  }

  /// Mints the element with the given point mask; the mask must be one of
  /// this lattice's down-sets.
  Element element_from_mask(PointMask mask) const {
    if (!impl_->elem_index.count(mask))
      fail(Errc::lattice_mismatch, "mask is not a down-set of this lattice");
    return Element(mask, impl_->id);
  }

  /// The join of the down-closures of the named points. Every element can be
  /// written this way (list all its points), so this is the universal
  /// element constructor for file formats.
  Element element_of(std::span<const std::string> point_names) const {
    PointMask m = 0;
    for (const std::string& name : point_names) m |= impl_->down_closure[point_index(name)];
    return Element(m, impl_->id);
  }

  Element element_of(std::initializer_list<std::string> point_names) const {
    return element_of(std::span<const std::string>(point_names.begin(), point_names.size()));
  }

  /// Canonical name: the points of the down-set in point order, e.g.
  /// "{a,c}"; the bottom element prints as "{}".
  std::string name(const Element& e) const {
    require_mine(e);
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < point_count(); ++p) {
      if (!(e.mask() & bit(p))) continue;
      if (!first) out += ',';
      out += impl_->point_names[p];
      first = false;
    }
    out += '}';
    return out;
  }

  /// Cover pairs (lower index, upper index) of the Hasse diagram of the
  /// whole lattice. In the down-set encoding b covers a iff b = a plus one
  /// addable point.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      PointMask m = impl_->elems[i];
      for (std::size_t p = 0; p < point_count(); ++p) {
        if (m & bit(p)) continue;
        if ((impl_->strictly_below[p] & ~m) != 0) continue;
        out.emplace_back(i, impl_->elem_index.at(m | bit(p)));
      }
    }
    return out;
  }

 private:
  struct Impl {
    std::uint64_t id = 0;
    bool boolean_kind = false;
    PointMask full = 0;
    std::vector<std::string> point_names;
    std::unordered_map<std::string, std::size_t> point_pos;
    std::vector<PointMask> down_closure;    // per point, {q : q <= p}
    std::vector<PointMask> strictly_below;  // per point, {q : q < p}
    std::vector<PointMask> elems;           // all down-sets, ascending
    std::unordered_map<PointMask, std::size_t> elem_index;
  };

  explicit Lattice(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static PointMask bit(std::size_t p) { return PointMask(1) << p; }

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  void require_mine(const Element& e) const {
    if (!owns(e)) fail(Errc::lattice_mismatch, "element belongs to a different lattice");
  }

  std::size_t point_index(const std::string& name) const {
    auto it = impl_->point_pos.find(name);
    if (it == impl_->point_pos.end()) fail(Errc::unknown_point, "unknown point '" + name + "'");
    return it->second;
  }

  static Lattice build(const std::vector<std::string>& points,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       std::size_t max_points) {
    if (max_points > 63) max_points = 63;
    if (points.size() > max_points)
      fail(Errc::size_cap_exceeded, std::to_string(points.size()) + " generator points exceed the cap of " +
                                        std::to_string(max_points));
    auto impl = std::make_shared<Impl>();
    impl->id = next_id();
    impl->point_names = points;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].empty()) fail(Errc::unknown_point, "empty point name");
      if (!impl->point_pos.emplace(points[p], p).second)
        fail(Errc::duplicate_name, "duplicate point '" + points[p] + "'");
    }
    const std::size_t n = points.size();
    impl->full = n == 0 ? 0 : (n == 63 ? ~PointMask(0) >> 1 : (bit(n) - 1));

    std::vector<PointMask> below(n, 0);  // strict lower covers, transitively closed below
    for (const auto& [lo, hi] : covers) {
      auto lo_it = impl->point_pos.find(lo);
      auto hi_it = impl->point_pos.find(hi);
      if (lo_it == impl->point_pos.end()) fail(Errc::unknown_point, "unknown point '" + lo + "' in covers");
      if (hi_it == impl->point_pos.end()) fail(Errc::unknown_point, "unknown point '" + hi + "' in covers");
      below[hi_it->second] |= bit(lo_it->second);
    }
    // Transitive closure by fixpoint; a cycle shows up as p < p.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = 0; p < n; ++p) {
        PointMask acc = below[p];
        for (std::size_t q = 0; q < n; ++q)
          if (below[p] & bit(q)) acc |= below[q];
        if (acc != below[p]) {
          below[p] = acc;
          changed = true;
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p)
      if (below[p] & bit(p))
        fail(Errc::cycle_detected, "covers form a cycle through '" + points[p] + "'");

    impl->strictly_below = below;
    impl->down_closure.resize(n);
    for (std::size_t p = 0; p < n; ++p) impl->down_closure[p] = below[p] | bit(p);
    impl->boolean_kind = covers.empty() && n > 0;

    // Enumerate down-sets: a mask is one iff it contains everything below
    // each of its points.
    const PointMask limit = impl->full;
    for (PointMask m = 0;; ++m) {
      bool ok = true;
      PointMask rest = m;
      while (rest) {
        std::size_t p = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (below[p] & ~m) {
          ok = false;
          break;
        }
      }
      if (ok) {
        impl->elem_index.emplace(m, impl->elems.size());
        impl->elems.push_back(m);
      }
      if (m == limit) break;
    }
    return Lattice(std::move(impl));
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace latdec
