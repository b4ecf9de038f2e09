#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latdec/lattice.hpp"
#include "latdec/partition.hpp"
#include "latdec/rational.hpp"

namespace latdec {

/// A non-negative lattice valuation: v(a∨b) = v(a) + v(b) − v(a∧b) for all
/// pairs. Total mapping over the lattice, exact rationals. Immutable.
class Valuation {
 public:
  const Lattice& lattice() const noexcept { return lattice_; }

  const Rat& value(const Element& e) const { return values_[lattice_.index_of(e)]; }
  const Rat& value_at(std::size_t element_index) const { return values_.at(element_index); }

  bool isotone() const noexcept { return isotone_; }
  bool strictly_isotone() const noexcept { return strictly_isotone_; }
  /// v(0) = 0 and v(1) = 1.
  bool bounded() const noexcept { return bounded_; }
  /// v(a∨b) = v(a) + v(b) whenever a∧b = 0; with the modular law this is
  /// exactly v(0) = 0.
  bool additive() const noexcept { return additive_; }

 private:
  friend Valuation make_valuation(const Lattice&, const std::vector<std::pair<Element, Rat>>&);
  Valuation(Lattice lattice, std::vector<Rat> values, bool isotone, bool strictly_isotone,
            bool bounded, bool additive)
      : lattice_(std::move(lattice)),
        values_(std::move(values)),
        isotone_(isotone),
        strictly_isotone_(strictly_isotone),
        bounded_(bounded),
        additive_(additive) {}

  Lattice lattice_;
  std::vector<Rat> values_;
  bool isotone_;
  bool strictly_isotone_;
  bool bounded_;
  bool additive_;
};

namespace detail {

// Pair scan for the modular law: exhaustive on small lattices, a fixed-seed
// sample of 10^4 pairs above 1024 elements.
inline void check_modular_law(const Lattice& l, const std::vector<Rat>& v) {
  auto check_pair = [&](std::size_t i, std::size_t j) {
    Element a = l.element_at(i);
    Element b = l.element_at(j);
    const Rat& va = v[i];
    const Rat& vb = v[j];
    const Rat& vm = v[l.index_of(l.meet(a, b))];
    const Rat& vj = v[l.index_of(l.join(a, b))];
    if (vj + vm != va + vb)
      fail(Errc::modular_law_violation,
           "at pair (" + l.name(a) + ", " + l.name(b) + "): v(join)=" + to_string(vj) +
               ", v(meet)=" + to_string(vm) + ", v(a)=" + to_string(va) + ", v(b)=" + to_string(vb));
  };
  const std::size_t n = l.size();
  if (n <= 1024) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 10'000; ++k) check_pair(pick(rng), pick(rng));
  }
}

}  // namespace detail

/// Builds a valuation from a total assignment, rejecting modular-law and
/// non-negativity violations. Isotonicity flags are computed exactly by
/// walking the cover edges of the lattice.
inline Valuation make_valuation(const Lattice& l, const std::vector<std::pair<Element, Rat>>& assignments) {
  std::vector<Rat> values(l.size());
  std::vector<bool> assigned(l.size(), false);
  for (const auto& [e, r] : assignments) {
    std::size_t idx = l.index_of(e);
    if (assigned[idx]) fail(Errc::duplicate_name, "element " + l.name(e) + " assigned twice");
    if (r < 0) fail(Errc::negative_value, "v(" + l.name(e) + ") = " + to_string(r) + " is negative");
    values[idx] = r;
    assigned[idx] = true;
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!assigned[i]) fail(Errc::missing_element, "no value for element " + l.name(l.element_at(i)));

  detail::check_modular_law(l, values);

  bool isotone = true;
  bool strictly = true;
  for (auto [lo, hi] : l.cover_edges()) {
    if (values[lo] > values[hi]) isotone = false;
    if (values[lo] >= values[hi]) strictly = false;
  }
  if (!isotone) strictly = false;
  const Rat& v0 = values[l.index_of(l.bottom())];
  const Rat& v1 = values[l.index_of(l.top())];
  bool bounded = v0 == 0 && v1 == 1;
  bool additive = v0 == 0;
  return Valuation(l, std::move(values), isotone, strictly, bounded, additive);
}

/// Probability-measure special case: the lattice must be Boolean and the
/// atom weights non-negative with total exactly 1; v(X) is the weight sum
/// over atoms below X.
inline Valuation from_atom_weights(const Lattice& l, const std::map<std::string, Rat>& weights) {
  if (!l.is_boolean()) fail(Errc::not_boolean, "atom weights need a Boolean lattice");
  const auto& names = l.points();
  std::vector<Rat> w(names.size());
  Rat sum = 0;
  for (const auto& [name, r] : weights) {
    if (std::find(names.begin(), names.end(), name) == names.end())
      fail(Errc::unknown_point, "unknown atom '" + name + "'");
  }
  for (std::size_t p = 0; p < names.size(); ++p) {
    auto it = weights.find(names[p]);
    if (it == weights.end()) fail(Errc::missing_element, "no weight for atom '" + names[p] + "'");
    if (it->second < 0)
      fail(Errc::negative_value, "weight of '" + names[p] + "' is " + to_string(it->second));
    w[p] = it->second;
    sum += it->second;
  }
  if (sum != 1) fail(Errc::weight_sum_not_one, "weights sum to " + to_string(sum) + ", not 1");

  std::vector<std::pair<Element, Rat>> assignments;
  assignments.reserve(l.size());
  for (const Element& e : l.elements()) {
    Rat total = 0;
    PointMask rest = e.mask();
    while (rest) {
      std::size_t p = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      total += w[p];
    }
    assignments.emplace_back(e, std::move(total));
  }
  return make_valuation(l, assignments);
}

/// Confirms that every block has strictly positive value; the orders that
/// divide by block values call this first so division failures surface with
/// the offending block named.
inline void require_positive_on(const Valuation& v, const Partition& e) {
  if (!v.lattice().same_as(e.lattice()))
    fail(Errc::lattice_mismatch, "valuation and partition live in different lattices");
  for (const Element& b : e.blocks())
    if (v.value(b) <= 0)
      fail(Errc::zero_block_valuation, "v(" + e.lattice().name(b) + ") = " + to_string(v.value(b)));
}

/// Report of the Boolean-valuation characterization and its classical
/// consequences.
struct BooleanValuationReport {
  bool modular = true;  // construction guarantees it; restated for the record
  bool bounded = false;
  bool additive = false;
  bool unit_total = false;            // v(1) = 1
  bool equivalence_holds = false;     // (modular ∧ bounded) ⇔ (additive ∧ v(1)=1)
  bool isotone = false;
  bool complement_identity = false;   // v(¬a) = 1 − v(a) for all a
  bool is_boolean_valuation = false;  // bounded valuation on a Boolean lattice
};

/// Checks the equivalent definitions of a Boolean valuation on a
/// complemented lattice, plus the derived identities.
inline BooleanValuationReport check_boolean_valuation(const Valuation& v) {
  const Lattice& l = v.lattice();
  if (!l.is_boolean()) fail(Errc::not_boolean, "the lattice is not complemented");
  BooleanValuationReport r;
  r.bounded = v.bounded();
  r.additive = v.additive();
  r.unit_total = v.value(l.top()) == 1;
  r.equivalence_holds = r.bounded == (r.additive && r.unit_total);
  r.isotone = v.isotone();
  r.complement_identity = true;
  for (const Element& e : l.elements()) {
    auto c = l.complement(e);
    if (!c || v.value(*c) != 1 - v.value(e)) {
      r.complement_identity = false;
      break;
    }
  }
  r.is_boolean_valuation = r.bounded;
  return r;
}

}  // namespace latdec
