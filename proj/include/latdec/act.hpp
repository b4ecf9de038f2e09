#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latdec/partition.hpp"
#include "latdec/rational.hpp"
#include "latdec/valuation.hpp"

namespace latdec {

/// An act: one exact-rational payoff per block of a partition. Payoffs are
/// stored positionally against the canonical block order. Immutable.
class Act {
 public:
  Act(Partition domain, std::vector<Rat> payoffs) : domain_(std::move(domain)), payoffs_(std::move(payoffs)) {
    if (payoffs_.size() != domain_.block_count())
      fail(Errc::payoff_count_mismatch, std::to_string(payoffs_.size()) + " payoffs for " +
                                            std::to_string(domain_.block_count()) + " blocks");
  }

  /// Builds from block/payoff pairs in any order; the blocks must form a
  /// partition. This is the entry point for file formats, where payoffs are
  /// positional against the blocks as written.
  Act(const Lattice& lattice, std::vector<std::pair<Element, Rat>> assignments)
      : Act(sort_and_split(lattice, std::move(assignments))) {}

  const Partition& domain() const noexcept { return domain_; }
  const Lattice& lattice() const noexcept { return domain_.lattice(); }
  const std::vector<Rat>& payoffs() const noexcept { return payoffs_; }
  const Rat& payoff(std::size_t block_index) const { return payoffs_.at(block_index); }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < payoffs_.size(); ++i) {
      if (i) out += ", ";
      out += lattice().name(domain_.block(i)) + ": " + latdec::to_string(payoffs_[i]);
    }
    out += ']';
    return out;
  }

  friend bool operator==(const Act& a, const Act& b) {
    return a.domain_ == b.domain_ && a.payoffs_ == b.payoffs_;
  }

 private:
  static Act sort_and_split(const Lattice& lattice, std::vector<std::pair<Element, Rat>> assignments) {
    std::sort(assignments.begin(), assignments.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Element> blocks;
    std::vector<Rat> payoffs;
    blocks.reserve(assignments.size());
    payoffs.reserve(assignments.size());
    for (auto& [e, r] : assignments) {
      blocks.push_back(e);
      payoffs.push_back(std::move(r));
    }
    return Act(make_partition(lattice, std::move(blocks)), std::move(payoffs));
  }

  Partition domain_;
  std::vector<Rat> payoffs_;
};

/// exp(α,v) = Σ α(e)·v(e) over the blocks.
inline Rat expected_value(const Act& alpha, const Valuation& v) {
  if (!alpha.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "act and valuation live in different lattices");
  Rat total = 0;
  for (std::size_t i = 0; i < alpha.domain().block_count(); ++i)
    total += alpha.payoff(i) * v.value(alpha.domain().block(i));
  return total;
}

/// Pointwise dominance: true when beta's payoff is at least alpha's on every
/// block. Only defined for acts on the same partition.
inline bool dominates(const Act& alpha, const Act& beta) {
  if (!alpha.lattice().same_as(beta.lattice()))
    fail(Errc::lattice_mismatch, "acts live in different lattices");
  if (!(alpha.domain() == beta.domain()))
    fail(Errc::domain_mismatch, "dominance is not defined across different partitions");
  for (std::size_t i = 0; i < alpha.domain().block_count(); ++i)
    if (alpha.payoff(i) > beta.payoff(i)) return false;
  return true;
}

/// Expected-value ranking: a total preorder over all acts of the lattice.
inline bool leq_exp(const Act& alpha, const Act& beta, const Valuation& v) {
  return expected_value(alpha, v) <= expected_value(beta, v);
}

/// The valuation order: alpha's domain must refine beta's, and on every fine
/// block e the payoff must stay below beta's payoff on the block above e,
/// scaled by v(e)/v(d_e). Requires strictly positive block values on both
/// domains and an isotone valuation.
inline bool leq_v(const Act& alpha, const Act& beta, const Valuation& v) {
  if (!alpha.lattice().same_as(beta.lattice()) || !alpha.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "acts and valuation must share one lattice");
  if (!v.isotone()) fail(Errc::not_isotone, "the valuation order needs an isotone valuation");
  require_positive_on(v, alpha.domain());
  require_positive_on(v, beta.domain());
  auto witness = refines(alpha.domain(), beta.domain());
  if (!witness) return false;
  for (std::size_t i = 0; i < alpha.domain().block_count(); ++i) {
    const Element& e = alpha.domain().block(i);
    const Element& d = beta.domain().block(witness->coarse_of[i]);
    // alpha(e) <= beta(d)·v(e)/v(d), cross-multiplied to stay division-free.
    if (alpha.payoff(i) * v.value(d) > beta.payoff(witness->coarse_of[i]) * v.value(e)) return false;
  }
  return true;
}

/// Best approximation of beta from below on a finer partition:
/// payoff on e is beta(d_e)·v(e)/v(d_e).
inline Act downgrade(const Act& beta, const Partition& finer, const Valuation& v) {
  if (!beta.lattice().same_as(finer.lattice()) || !beta.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "act, partition and valuation must share one lattice");
  require_positive_on(v, finer);
  require_positive_on(v, beta.domain());
  auto witness = refines(finer, beta.domain());
  if (!witness)
    fail(Errc::not_a_refinement, finer.to_string() + " does not refine " + beta.domain().to_string());
  std::vector<Rat> payoffs;
  payoffs.reserve(finer.block_count());
  for (std::size_t i = 0; i < finer.block_count(); ++i) {
    std::size_t j = witness->coarse_of[i];
    payoffs.push_back(beta.payoff(j) * v.value(finer.block(i)) / v.value(beta.domain().block(j)));
  }
  return Act(finer, std::move(payoffs));
}

/// Best approximation of beta from above on a coarser partition:
/// payoff on g is the max of beta(x)·v(g)/v(x) over the blocks x below g.
inline Act upgrade(const Act& beta, const Partition& coarser, const Valuation& v) {
  if (!beta.lattice().same_as(coarser.lattice()) || !beta.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "act, partition and valuation must share one lattice");
  require_positive_on(v, coarser);
  require_positive_on(v, beta.domain());
  auto witness = refines(beta.domain(), coarser);
  if (!witness)
    fail(Errc::not_a_refinement, beta.domain().to_string() + " does not refine " + coarser.to_string());
  std::vector<Rat> payoffs;
  payoffs.reserve(coarser.block_count());
  for (std::size_t g = 0; g < coarser.block_count(); ++g) {
    std::optional<Rat> best;
    for (std::size_t x : witness->fine_of[g]) {
      Rat scaled = beta.payoff(x) * v.value(coarser.block(g)) / v.value(beta.domain().block(x));
      if (!best || scaled > *best) best = std::move(scaled);
    }
    payoffs.push_back(*best);  // fine_of[g] is nonempty for a refinement
  }
  return Act(coarser, std::move(payoffs));
}

/// Greatest lower bound in the act lattice: both acts are downgraded to the
/// meet of their domains and compared pointwise.
inline Act act_inf(const Act& alpha, const Act& beta, const Valuation& v) {
  Partition common = partition_meet(alpha.domain(), beta.domain());
  require_positive_on(v, common);
  Act a = downgrade(alpha, common, v);
  Act b = downgrade(beta, common, v);
  std::vector<Rat> payoffs;
  payoffs.reserve(common.block_count());
  for (std::size_t i = 0; i < common.block_count(); ++i)
    payoffs.push_back(std::min(a.payoff(i), b.payoff(i)));
  return Act(std::move(common), std::move(payoffs));
}

/// Least upper bound in the act lattice: both acts are upgraded to the join
/// of their domains and compared pointwise.
inline Act act_sup(const Act& alpha, const Act& beta, const Valuation& v) {
  Partition common = partition_join(alpha.domain(), beta.domain());
  require_positive_on(v, common);
  Act a = upgrade(alpha, common, v);
  Act b = upgrade(beta, common, v);
  std::vector<Rat> payoffs;
  payoffs.reserve(common.block_count());
  for (std::size_t i = 0; i < common.block_count(); ++i)
    payoffs.push_back(std::max(a.payoff(i), b.payoff(i)));
  return Act(std::move(common), std::move(payoffs));
}

/// Comparison on the meet of the domains: alpha below beta iff for every
/// pair of blocks with nonzero meet, alpha(e)/v(e) <= beta(d)/v(d). This is
/// dominance between the two downgrades on the common refinement.
inline bool leq_meet(const Act& alpha, const Act& beta, const Valuation& v) {
  if (!alpha.lattice().same_as(beta.lattice()) || !alpha.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "acts and valuation must share one lattice");
  require_positive_on(v, alpha.domain());
  require_positive_on(v, beta.domain());
  const Lattice& l = alpha.lattice();
  for (std::size_t i = 0; i < alpha.domain().block_count(); ++i)
    for (std::size_t j = 0; j < beta.domain().block_count(); ++j) {
      if (l.meet(alpha.domain().block(i), beta.domain().block(j)).mask() == 0) continue;
      if (alpha.payoff(i) * v.value(beta.domain().block(j)) >
          beta.payoff(j) * v.value(alpha.domain().block(i)))
        return false;
    }
  return true;
}

/// Comparison on the join of the domains: alpha below beta iff on every
/// block w of the join, the best payoff ratio of alpha's blocks inside w
/// stays below beta's. This is dominance between the two upgrades on the
/// common coarsening. Reflexive but not transitive.
inline bool leq_join(const Act& alpha, const Act& beta, const Valuation& v) {
  if (!alpha.lattice().same_as(beta.lattice()) || !alpha.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "acts and valuation must share one lattice");
  require_positive_on(v, alpha.domain());
  require_positive_on(v, beta.domain());
  Partition common = partition_join(alpha.domain(), beta.domain());
  require_positive_on(v, common);
  auto wa = refines(alpha.domain(), common);
  auto wb = refines(beta.domain(), common);
  for (std::size_t w = 0; w < common.block_count(); ++w) {
    auto best_ratio = [&](const Act& act, const std::vector<std::size_t>& inside) {
      std::optional<Rat> best;
      for (std::size_t i : inside) {
        Rat ratio = act.payoff(i) / v.value(act.domain().block(i));
        if (!best || ratio > *best) best = std::move(ratio);
      }
      return *best;
    };
    if (best_ratio(alpha, wa->fine_of[w]) > best_ratio(beta, wb->fine_of[w])) return false;
  }
  return true;
}

/// Outcome of one relation test inside a comparison report.
enum class Verdict { holds, fails, undecided };

struct RelationOutcome {
  Verdict verdict = Verdict::undecided;
  std::string note;  // failure witness or the reason the relation is undecided
};

/// All five relations in both directions, with exact expected values and
/// per-relation failure witnesses. Relations that cannot be decided (zero
/// block values, incomparable domains for the valuation order) are reported
/// as undecided rather than failing the whole comparison.
struct ComparisonResult {
  Rat exp_left;
  Rat exp_right;
  bool same_domain = false;
  RelationOutcome dominance_lr, dominance_rl;
  RelationOutcome exp_order_lr, exp_order_rl;
  RelationOutcome valuation_order_lr, valuation_order_rl;
  RelationOutcome meet_order_lr, meet_order_rl;
  RelationOutcome join_order_lr, join_order_rl;
};

namespace detail {

inline RelationOutcome dominance_outcome(const Act& a, const Act& b) {
  if (!(a.domain() == b.domain()))
    return {Verdict::undecided, "domains differ; dominance is not defined"};
  for (std::size_t i = 0; i < a.domain().block_count(); ++i)
    if (a.payoff(i) > b.payoff(i))
      return {Verdict::fails, "fails at block " + a.lattice().name(a.domain().block(i)) + ": " +
                                  to_string(a.payoff(i)) + " > " + to_string(b.payoff(i))};
  return {Verdict::holds, ""};
}

inline RelationOutcome valuation_order_outcome(const Act& a, const Act& b, const Valuation& v) {
  try {
    auto witness = refines(a.domain(), b.domain());
    if (!witness) {
      if (is_refinement(b.domain(), a.domain()))
        return {Verdict::fails, "left domain does not refine right (only the converse holds)"};
      return {Verdict::undecided, "domains incomparable"};
    }
    if (leq_v(a, b, v)) return {Verdict::holds, ""};
    for (std::size_t i = 0; i < a.domain().block_count(); ++i) {
      const Element& e = a.domain().block(i);
      std::size_t j = witness->coarse_of[i];
      Rat bound = b.payoff(j) * v.value(e) / v.value(b.domain().block(j));
      if (a.payoff(i) > bound)
        return {Verdict::fails, "fails at block " + a.lattice().name(e) + ": " +
                                    to_string(a.payoff(i)) + " > " + to_string(bound)};
    }
    return {Verdict::fails, ""};
  } catch (const Error& err) {
    return {Verdict::undecided, err.what()};
  }
}

inline RelationOutcome bool_outcome(bool held) {
  return {held ? Verdict::holds : Verdict::fails, ""};
}

}  // namespace detail

inline ComparisonResult compare_acts(const Act& left, const Act& right, const Valuation& v) {
  if (!left.lattice().same_as(right.lattice()) || !left.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "acts and valuation must share one lattice");
  ComparisonResult r;
  r.exp_left = expected_value(left, v);
  r.exp_right = expected_value(right, v);
  r.same_domain = left.domain() == right.domain();
  r.dominance_lr = detail::dominance_outcome(left, right);
  r.dominance_rl = detail::dominance_outcome(right, left);
  r.exp_order_lr = detail::bool_outcome(r.exp_left <= r.exp_right);
  r.exp_order_rl = detail::bool_outcome(r.exp_right <= r.exp_left);
  r.valuation_order_lr = detail::valuation_order_outcome(left, right, v);
  r.valuation_order_rl = detail::valuation_order_outcome(right, left, v);
  auto guarded = [&](auto&& op) -> RelationOutcome {
    try {
      return detail::bool_outcome(op());
    } catch (const Error& err) {
      return {Verdict::undecided, err.what()};
    }
  };
  r.meet_order_lr = guarded([&] { return leq_meet(left, right, v); });
  r.meet_order_rl = guarded([&] { return leq_meet(right, left, v); });
  r.join_order_lr = guarded([&] { return leq_join(left, right, v); });
  r.join_order_rl = guarded([&] { return leq_join(right, left, v); });
  return r;
}

}  // namespace latdec
