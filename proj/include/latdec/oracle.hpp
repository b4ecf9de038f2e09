#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "latdec/act.hpp"
#include "latdec/partition.hpp"
#include "latdec/rational.hpp"

namespace latdec {

/// Caps and seed for the brute-force searches. All searches are
/// deterministic given the seed.
struct SearchBudget {
  std::size_t max_acts_per_partition = 4096;
  std::vector<Rat> payoff_grid = {Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  std::uint64_t seed = 2025;
  std::size_t max_trials = 50'000;
  EnumerationBudget enumeration;
};

/// Partition-lattice bounds by exhaustive search over the full enumeration:
/// the unique maximal lower bound and minimal upper bound of the pair.
/// Independent of the constructive meet/join formulas it cross-checks.
inline std::pair<Partition, Partition> brute_partition_bounds(const Partition& e, const Partition& d,
                                                              const EnumerationBudget& budget = {}) {
  if (!e.lattice().same_as(d.lattice()))
    fail(Errc::lattice_mismatch, "partitions live in different lattices");
  std::vector<Partition> all = enumerate_partitions(e.lattice(), budget);
  std::vector<Partition> lower, upper;
  for (const Partition& z : all) {
    if (is_refinement(z, e) && is_refinement(z, d)) lower.push_back(z);
    if (is_refinement(e, z) && is_refinement(d, z)) upper.push_back(z);
  }
  auto unique_extreme = [](const std::vector<Partition>& bounds, bool want_max) -> Partition {
    std::vector<Partition> extreme;
    for (const Partition& z : bounds) {
      bool beaten = false;
      for (const Partition& w : bounds) {
        if (w == z) continue;
        if (want_max ? is_refinement(z, w) : is_refinement(w, z)) {
          beaten = true;
          break;
        }
      }
      if (!beaten) extreme.push_back(z);
    }
    if (extreme.size() != 1)
      throw std::logic_error("partition bound is not unique: found " + std::to_string(extreme.size()));
    return extreme.front();
  };
  return {unique_extreme(lower, true), unique_extreme(upper, false)};
}

namespace detail {

/// Enumerates acts on the partition with payoffs drawn from the grid scaled
/// by the block count, in mixed-radix order, up to the cap.
template <typename Fn>
void for_each_grid_act(const Partition& domain, const SearchBudget& budget, Fn&& fn) {
  const std::size_t k = domain.block_count();
  const std::size_t g = budget.payoff_grid.size();
  if (g == 0) return;
  std::vector<Rat> scaled;
  scaled.reserve(g);
  for (const Rat& r : budget.payoff_grid) scaled.push_back(r * Rat(static_cast<long>(k)));
  std::vector<std::size_t> digits(k, 0);
  std::size_t produced = 0;
  for (;;) {
    if (produced++ >= budget.max_acts_per_partition) return;
    std::vector<Rat> payoffs;
    payoffs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) payoffs.push_back(scaled[digits[i]]);
    fn(Act(domain, std::move(payoffs)));
    std::size_t pos = 0;
    while (pos < k && ++digits[pos] == g) digits[pos++] = 0;
    if (pos == k) return;
  }
}

inline bool positive_on_blocks(const Valuation& v, const Partition& p) {
  for (const Element& b : p.blocks())
    if (v.value(b) <= 0) return false;
  return true;
}

}  // namespace detail

enum class BoundMode { inf, sup };

struct BoundCheckReport {
  bool candidate_is_bound = false;
  bool extremal_among_rivals = true;
  std::size_t rivals_checked = 0;
  std::optional<Act> counterexample;
  bool ok() const { return candidate_is_bound && extremal_among_rivals; }
};

/// Falsification attempt for an inf/sup candidate: confirms it bounds the
/// pair in the valuation order, then pits it against every grid act on every
/// partition that could carry a better bound.
inline BoundCheckReport verify_act_bound(const Act& a, const Act& b, const Valuation& v,
                                         const Act& candidate, BoundMode mode,
                                         const SearchBudget& budget = {}) {
  BoundCheckReport report;
  if (mode == BoundMode::inf)
    report.candidate_is_bound = leq_v(candidate, a, v) && leq_v(candidate, b, v);
  else
    report.candidate_is_bound = leq_v(a, candidate, v) && leq_v(b, candidate, v);

  for_each_partition(
      a.lattice(),
      [&](const Partition& g) {
        if (!detail::positive_on_blocks(v, g)) return;
        const bool carrier = mode == BoundMode::inf
                                 ? is_refinement(g, a.domain()) && is_refinement(g, b.domain())
                                 : is_refinement(a.domain(), g) && is_refinement(b.domain(), g);
        if (!carrier) return;
        detail::for_each_grid_act(g, budget, [&](const Act& rival) {
          ++report.rivals_checked;
          if (mode == BoundMode::inf) {
            if (leq_v(rival, a, v) && leq_v(rival, b, v) && !leq_v(rival, candidate, v)) {
              report.extremal_among_rivals = false;
              if (!report.counterexample) report.counterexample = rival;
            }
          } else {
            if (leq_v(a, rival, v) && leq_v(b, rival, v) && !leq_v(candidate, rival, v)) {
              report.extremal_among_rivals = false;
              if (!report.counterexample) report.counterexample = rival;
            }
          }
        });
      },
      budget.enumeration);
  return report;
}

struct ExtremalityReport {
  bool agrees = true;
  std::size_t checked = 0;
  std::optional<Act> counterexample;
};

/// Dual-route check of the downgrade: an act on the finer partition sits
/// below beta in the valuation order exactly when the downgrade dominates
/// it pointwise. Runs over all grid acts on the finer partition.
inline ExtremalityReport verify_downgrade_maximal(const Act& beta, const Partition& finer,
                                                  const Valuation& v, const SearchBudget& budget = {}) {
  ExtremalityReport report;
  Act best = downgrade(beta, finer, v);
  detail::for_each_grid_act(finer, budget, [&](const Act& probe) {
    ++report.checked;
    if (leq_v(probe, beta, v) != dominates(probe, best)) {
      report.agrees = false;
      if (!report.counterexample) report.counterexample = probe;
    }
  });
  return report;
}

/// Dual of the above: an act on the coarser partition sits above beta
/// exactly when it dominates the upgrade pointwise.
inline ExtremalityReport verify_upgrade_minimal(const Act& beta, const Partition& coarser,
                                                const Valuation& v, const SearchBudget& budget = {}) {
  ExtremalityReport report;
  Act best = upgrade(beta, coarser, v);
  detail::for_each_grid_act(coarser, budget, [&](const Act& probe) {
    ++report.checked;
    if (leq_v(beta, probe, v) != dominates(best, probe)) {
      report.agrees = false;
      if (!report.counterexample) report.counterexample = probe;
    }
  });
  return report;
}

struct NontransitivityWitness {
  Act first;
  Act second;
  Act third;
};

/// Seeded random search for a triple witnessing that the join-comparison is
/// not transitive: first below second, second below third, first not below
/// third. Absent when the trial budget runs out.
inline std::optional<NontransitivityWitness> find_blacktriangle_nontransitivity(
    const Lattice& l, const Valuation& v, const SearchBudget& budget = {}) {
  std::vector<Partition> carriers;
  for_each_partition(
      l,
      [&](const Partition& p) {
        if (detail::positive_on_blocks(v, p)) carriers.push_back(p);
      },
      budget.enumeration);
  if (carriers.empty() || budget.payoff_grid.empty()) return std::nullopt;

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<std::size_t> pick_partition(0, carriers.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_payoff(0, budget.payoff_grid.size() - 1);
  auto random_act = [&](const Partition& domain) {
    std::vector<Rat> payoffs;
    payoffs.reserve(domain.block_count());
    Rat scale(static_cast<long>(domain.block_count()));
    for (std::size_t i = 0; i < domain.block_count(); ++i)
      payoffs.push_back(budget.payoff_grid[pick_payoff(rng)] * scale);
    return Act(domain, std::move(payoffs));
  };

  for (std::size_t trial = 0; trial < budget.max_trials; ++trial) {
    Act a = random_act(carriers[pick_partition(rng)]);
    Act b = random_act(carriers[pick_partition(rng)]);
    Act c = random_act(carriers[pick_partition(rng)]);
    if (leq_join(a, b, v) && leq_join(b, c, v) && !leq_join(a, c, v))
      return NontransitivityWitness{std::move(a), std::move(b), std::move(c)};
  }
  return std::nullopt;
}

}  // namespace latdec
