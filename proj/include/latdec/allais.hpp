#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latdec/act.hpp"
#include "latdec/rational.hpp"

namespace latdec {

/// τ(x) = scale·x + shift with scale > 0. Composing with acts is an order
/// embedding of the act set into itself.
class AffineMap {
 public:
  AffineMap(Rat scale, Rat shift) : scale_(std::move(scale)), shift_(std::move(shift)) {
    if (scale_ <= 0)
      fail(Errc::nonpositive_scale, "affine scale " + to_string(scale_) + " must be positive");
  }

  const Rat& scale() const noexcept { return scale_; }
  const Rat& shift() const noexcept { return shift_; }
  Rat apply(const Rat& x) const { return scale_ * x + shift_; }

 private:
  Rat scale_;
  Rat shift_;
};

/// The act with every payoff transformed; the domain is unchanged.
/// exp(τ∘α, v) = scale·exp(α, v) + shift.
inline Act affine_apply(const AffineMap& map, const Act& alpha) {
  std::vector<Rat> payoffs;
  payoffs.reserve(alpha.payoffs().size());
  for (const Rat& x : alpha.payoffs()) payoffs.push_back(map.apply(x));
  return Act(alpha.domain(), std::move(payoffs));
}

struct OrderEmbeddingReport {
  std::size_t pairs_checked = 0;
  bool dominance_preserved = true;   // α ⪯ β implies f(α) ⪯ f(β)
  bool dominance_reflected = true;   // f(α) ⪯ f(β) implies α ⪯ β
  bool exp_identity = true;          // exp(f(α)) = scale·exp(α) + shift
  bool exp_order_equivalent = true;  // exp(α) <= exp(β) iff exp(f(α)) <= exp(f(β))
  bool all_ok() const {
    return dominance_preserved && dominance_reflected && exp_identity && exp_order_equivalent;
  }
};

/// Verifies on the given same-domain act pairs that composing with the map
/// preserves and reflects dominance, satisfies the expected-value identity,
/// and preserves the expected-value ranking in both directions.
inline OrderEmbeddingReport check_order_embedding(const AffineMap& map,
                                                  std::span<const std::pair<Act, Act>> pairs,
                                                  const Valuation& v) {
  OrderEmbeddingReport r;
  for (const auto& [a, b] : pairs) {
    ++r.pairs_checked;
    Act fa = affine_apply(map, a);
    Act fb = affine_apply(map, b);
    bool plain = dominates(a, b);
    bool mapped = dominates(fa, fb);
    if (plain && !mapped) r.dominance_preserved = false;
    if (mapped && !plain) r.dominance_reflected = false;
    Rat ea = expected_value(a, v);
    Rat eb = expected_value(b, v);
    if (expected_value(fa, v) != map.apply(ea) || expected_value(fb, v) != map.apply(eb))
      r.exp_identity = false;
    if ((ea <= eb) != (expected_value(fa, v) <= expected_value(fb, v)))
      r.exp_order_equivalent = false;
  }
  return r;
}

/// T(α): the sum of all payoffs.
inline Rat total(const Act& alpha) {
  Rat t = 0;
  for (const Rat& x : alpha.payoffs()) t += x;
  return t;
}

/// The act rescaled so its payoffs sum to 1. Requires a positive total.
inline Act standardize(const Act& alpha) {
  Rat t = total(alpha);
  if (t <= 0) fail(Errc::nonpositive_total, "total is " + to_string(t) + "; standardization needs > 0");
  std::vector<Rat> payoffs;
  payoffs.reserve(alpha.payoffs().size());
  for (const Rat& x : alpha.payoffs()) payoffs.push_back(x / t);
  return Act(alpha.domain(), std::move(payoffs));
}

/// Intrinsic expected value: the expected value of the standardization,
/// i.e. exp(α,v)/T(α). Ranks an act by how much of its own total reward it
/// is expected to deliver.
inline Rat intrinsic_exp(const Act& alpha, const Valuation& v) {
  Rat t = total(alpha);
  if (t <= 0) fail(Errc::nonpositive_total, "total is " + to_string(t) + "; intrinsic value needs > 0");
  return expected_value(alpha, v) / t;
}

struct ScalingInvarianceReport {
  Rat intrinsic_before;
  Rat intrinsic_after;
  bool intrinsic_invariant = false;  // equal iff the map is a pure scaling
  bool order_equivalent = true;      // intrinsic ranking of sample pairs is preserved
};

/// Confirms that a pure scaling (shift 0) leaves the intrinsic expected
/// value unchanged, and that the intrinsic ranking of the sampled partners
/// is preserved.
inline ScalingInvarianceReport check_scaling_invariance(const Rat& scale, const Act& alpha,
                                                        const Valuation& v,
                                                        std::span<const Act> partners = {}) {
  AffineMap map(scale, 0);
  ScalingInvarianceReport r;
  r.intrinsic_before = intrinsic_exp(alpha, v);
  r.intrinsic_after = intrinsic_exp(affine_apply(map, alpha), v);
  r.intrinsic_invariant = r.intrinsic_before == r.intrinsic_after;
  for (const Act& b : partners) {
    bool plain = intrinsic_exp(alpha, v) <= intrinsic_exp(b, v);
    bool mapped = r.intrinsic_after <= intrinsic_exp(affine_apply(map, b), v);
    if (plain != mapped) r.order_equivalent = false;
  }
  return r;
}

/// The classic two-choice problem: a sure gain x against a long shot at y,
/// over three conditions with chances 1/100, 1/10 and 89/100. Option 1a is
/// the constant act; 1b trades the 1% branch for a bigger prize; 2a and 2b
/// are the same gambles with the 89% branch zeroed out.
struct AllaisInstance {
  Rat x;
  Rat y;
  Lattice lattice;
  Partition conditions;
  Valuation chances;
  Act option_1a;  // (x, x, x)
  Act option_1b;  // (0, y, x)
  Act option_2a;  // (x, x, 0)
  Act option_2b;  // (0, y, 0)

  /// Defaults reproduce the original dollar amounts (x = 500000,
  /// y = 2500000).
  static AllaisInstance make(Rat x = 500000, Rat y = 2500000) {
    if (x <= 0 || y <= 0)
      fail(Errc::nonpositive_parameter, "the stakes x and y must both be positive");
    Lattice l = Lattice::boolean({"e1", "e2", "e3"});
    Element e1 = l.element_of({"e1"});
    Element e2 = l.element_of({"e2"});
    Element e3 = l.element_of({"e3"});
    Partition conditions = make_partition(l, {e1, e2, e3});
    Valuation chances = from_atom_weights(
        l, {{"e1", Rat(1, 100)}, {"e2", Rat(1, 10)}, {"e3", Rat(89, 100)}});
    auto act = [&](Rat p1, Rat p2, Rat p3) {
      return Act(l, {{e1, std::move(p1)}, {e2, std::move(p2)}, {e3, std::move(p3)}});
    };
    Act a1 = act(x, x, x);
    Act a2 = act(0, y, x);
    Act b1 = act(x, x, 0);
    Act b2 = act(0, y, 0);
    return AllaisInstance{std::move(x),     std::move(y),  std::move(l), std::move(conditions),
                          std::move(chances), std::move(a1), std::move(a2), std::move(b1),
                          std::move(b2)};
  }
};

/// Exact decision boundaries for the two-choice problem with stakes x, y.
struct AllaisThresholds {
  Rat x;
  Rat y;
  Rat exp_bound;                         // (11/10)·x
  Rat intrinsic_bound;                   // (167/70)·x
  bool exp_prefers_risky = false;        // exp(1a) < exp(1b), i.e. y > (11/10)x
  bool intrinsic_prefers_sure = false;   // intrinsic(1b) < intrinsic(1a), i.e. y > (167/70)x
  bool paradox_pattern = false;          // both at once
};

inline AllaisThresholds allais_thresholds(const Rat& x, const Rat& y) {
  if (x <= 0 || y <= 0)
    fail(Errc::nonpositive_parameter, "the stakes x and y must both be positive");
  AllaisThresholds t;
  t.x = x;
  t.y = y;
  t.exp_bound = x * Rat(11, 10);
  t.intrinsic_bound = x * Rat(167, 70);
  t.exp_prefers_risky = y > t.exp_bound;
  t.intrinsic_prefers_sure = y > t.intrinsic_bound;
  t.paradox_pattern = t.exp_prefers_risky && t.intrinsic_prefers_sure;
  return t;
}

}  // namespace latdec
