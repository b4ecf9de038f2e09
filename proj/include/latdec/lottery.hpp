#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latdec/act.hpp"
#include "latdec/rational.hpp"
#include "latdec/valuation.hpp"

namespace latdec {

/// A finitely supported distribution over rational rewards. Entries are kept
/// sorted by reward; rewards are distinct; probabilities lie in [0,1] and
/// sum exactly to 1.
class Lottery {
 public:
  static Lottery make(std::vector<std::pair<Rat, Rat>> reward_prob) {
    if (reward_prob.empty()) fail(Errc::empty_support, "a lottery needs at least one reward");
    std::sort(reward_prob.begin(), reward_prob.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rat sum = 0;
    for (std::size_t i = 0; i < reward_prob.size(); ++i) {
      const auto& [z, p] = reward_prob[i];
      if (i && z == reward_prob[i - 1].first)
        fail(Errc::invalid_distribution, "reward " + latdec::to_string(z) + " listed twice");
      if (p < 0 || p > 1)
        fail(Errc::invalid_distribution, "probability " + latdec::to_string(p) + " outside [0,1]");
      sum += p;
    }
    if (sum != 1) fail(Errc::invalid_distribution, "probabilities sum to " + latdec::to_string(sum) + ", not 1");
    return Lottery(std::move(reward_prob));
  }

  /// (reward, probability) pairs, ascending by reward.
  const std::vector<std::pair<Rat, Rat>>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += latdec::to_string(entries_[i].first) + ": " + latdec::to_string(entries_[i].second);
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Lottery& a, const Lottery& b) { return a.entries_ == b.entries_; }

 private:
  explicit Lottery(std::vector<std::pair<Rat, Rat>> entries) : entries_(std::move(entries)) {}
  std::vector<std::pair<Rat, Rat>> entries_;
};

/// Exp(l) = Σ z·l(z).
inline Rat lottery_exp(const Lottery& l) {
  Rat total = 0;
  for (const auto& [z, p] : l.entries()) total += z * p;
  return total;
}

/// The lottery induced by an act under a bounded additive valuation: each
/// distinct payoff gets the value of the join of its preimage blocks.
/// Preserves the expected value exactly.
inline Lottery act_to_lottery(const Act& alpha, const Valuation& v) {
  if (!alpha.lattice().same_as(v.lattice()))
    fail(Errc::lattice_mismatch, "act and valuation live in different lattices");
  if (!v.additive() || !v.bounded())
    fail(Errc::not_additive, "the valuation must be bounded and additive");
  std::map<Rat, Element> preimage_join;
  const Lattice& l = alpha.lattice();
  for (std::size_t i = 0; i < alpha.domain().block_count(); ++i) {
    const Element& e = alpha.domain().block(i);
    auto [it, inserted] = preimage_join.emplace(alpha.payoff(i), e);
    if (!inserted) it->second = l.join(it->second, e);
  }
  std::vector<std::pair<Rat, Rat>> entries;
  entries.reserve(preimage_join.size());
  for (const auto& [z, join] : preimage_join) entries.emplace_back(z, v.value(join));
  return Lottery::make(std::move(entries));
}

/// A lottery realized as an act: a fresh Boolean lattice with one atom per
/// reward (ascending order fixes the naming s1, s2, ...), the atom
/// partition, the act mapping each atom to its reward, and the valuation
/// from the probabilities.
struct ActBundle {
  Lattice lattice;
  Partition partition;
  Act act;
  Valuation valuation;
};

inline ActBundle lottery_to_act(const Lottery& l, bool prune_zero = false) {
  std::vector<std::pair<Rat, Rat>> entries = l.entries();
  if (prune_zero) {
    std::erase_if(entries, [](const auto& e) { return e.second == 0; });
  }
  if (entries.empty()) fail(Errc::empty_support, "lottery support is empty after pruning");
  std::vector<std::string> atom_names;
  atom_names.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) atom_names.push_back("s" + std::to_string(i + 1));
  Lattice lattice = Lattice::boolean(atom_names);
  std::map<std::string, Rat> weights;
  std::vector<std::pair<Element, Rat>> payoffs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Element atom = lattice.element_of({atom_names[i]});
    weights.emplace(atom_names[i], entries[i].second);
    payoffs.emplace_back(atom, entries[i].first);
  }
  Valuation v = from_atom_weights(lattice, weights);
  Act act(lattice, std::move(payoffs));
  Partition domain = act.domain();
  return ActBundle{std::move(lattice), std::move(domain), std::move(act), std::move(v)};
}

}  // namespace latdec
