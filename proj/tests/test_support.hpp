#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately dumb and separate from the library's own algorithms
// so the two can disagree.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "latdec/latdec.hpp"

namespace testsupport {

using namespace latdec;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// True when fn() throws a latdec::Error with exactly this code.
template <typename Fn>
bool throws_code(Fn&& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

inline Rat rand_rat(std::mt19937_64& rng, int lo = -12, int hi = 12, int max_den = 6) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline Rat rand_positive_rat(std::mt19937_64& rng, int hi = 12, int max_den = 6) {
  std::uniform_int_distribution<int> num(1, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng), den(rng));
}

/// Strictly positive atom weights summing to 1.
inline Valuation rand_positive_valuation(const Lattice& l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(1, 9);
  std::vector<int> raw;
  int sum = 0;
  for (std::size_t i = 0; i < l.point_count(); ++i) {
    raw.push_back(w(rng));
    sum += raw.back();
  }
  std::map<std::string, Rat> weights;
  for (std::size_t i = 0; i < l.point_count(); ++i)
    weights.emplace(l.points()[i], Rat(raw[i], sum));
  return from_atom_weights(l, weights);
}

inline const Partition& rand_of(const std::vector<Partition>& ps, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  return ps[pick(rng)];
}

inline Act rand_act(const Partition& p, std::mt19937_64& rng) {
  std::vector<Rat> payoffs;
  for (std::size_t i = 0; i < p.block_count(); ++i) payoffs.push_back(rand_rat(rng));
  return Act(p, payoffs);
}

inline Act rand_nonneg_act(const Partition& p, std::mt19937_64& rng) {
  std::vector<Rat> payoffs;
  for (std::size_t i = 0; i < p.block_count(); ++i) payoffs.push_back(rand_rat(rng, 0, 12));
  return Act(p, payoffs);
}

/// A random partition refining `coarse` (drawn from the full enumeration).
inline Partition rand_refinement(const std::vector<Partition>& all, const Partition& coarse,
                                 std::mt19937_64& rng) {
  std::vector<Partition> candidates;
  for (const Partition& p : all)
    if (is_refinement(p, coarse)) candidates.push_back(p);
  return rand_of(candidates, rng);
}

/// A random act on `domain` sitting below `target` in the valuation order,
/// built by shaving a non-negative slack off the downgrade. With
/// `keep_nonneg` the slack is clamped so non-negative targets yield
/// non-negative acts.
inline Act rand_below(const Act& target, const Partition& domain, const Valuation& v,
                      std::mt19937_64& rng, bool keep_nonneg = false) {
  Act base = downgrade(target, domain, v);
  std::vector<Rat> payoffs;
  for (std::size_t i = 0; i < domain.block_count(); ++i) {
    Rat slack = rand_positive_rat(rng, 4, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    Rat value = coin(rng) ? base.payoff(i) : base.payoff(i) - slack;
    if (keep_nonneg && value < 0 && base.payoff(i) >= 0) value = 0;
    payoffs.push_back(std::move(value));
  }
  return Act(domain, payoffs);
}

/// Independent set-partition oracle: all partitions of {0,..,n-1} via
/// restricted growth strings.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions_oracle(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&] {
    std::size_t classes = 0;
    for (std::size_t v : rgs) classes = std::max(classes, v + 1);
    std::vector<std::vector<std::size_t>> blocks(classes);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
    out.push_back(blocks);
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t maxv) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

/// A Boolean lattice over atoms named "1".."n" together with its partition
/// enumeration, shared by the random suites.
struct Playground {
  Lattice lattice;
  std::vector<Partition> partitions;

  static Playground boolean(std::size_t atom_count) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= atom_count; ++i) names.push_back(std::to_string(i));
    Lattice l = Lattice::boolean(names);
    std::vector<Partition> parts = enumerate_partitions(l);
    return Playground{std::move(l), std::move(parts)};
  }
};

}  // namespace testsupport
