#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "test_support.hpp"

using namespace latdec;
using namespace testsupport;

TEST_CASE("brute-force partition bounds agree with the formulas") {
  Lattice l = Lattice::boolean({"a", "b", "c", "d", "e"});
  Partition e = make_partition(l, {l.element_of({"a", "c"}), l.element_of({"b"}), l.element_of({"d", "e"})});
  Partition d = make_partition(l, {l.element_of({"a", "b"}), l.element_of({"c"}), l.element_of({"d", "e"})});

  SECTION("a partition is its own meet and join") {
    auto [lo, hi] = brute_partition_bounds(e, e);
    CHECK(lo == e);
    CHECK(hi == e);
  }

  SECTION("the price-range example") {
    auto [lo, hi] = brute_partition_bounds(e, d);
    CHECK(lo == partition_meet(e, d));
    CHECK(hi == partition_join(e, d));
    CHECK(lo.to_string() == "{a}|{b}|{c}|{d,e}");
    CHECK(hi.to_string() == "{a,b,c}|{d,e}");
  }

  SECTION("exhaustive agreement on a three-atom lattice") {
    Playground pg = Playground::boolean(3);
    for (const Partition& a : pg.partitions)
      for (const Partition& b : pg.partitions) {
        auto [lo, hi] = brute_partition_bounds(a, b);
        CHECK(lo == partition_meet(a, b));
        CHECK(hi == partition_join(a, b));
      }
  }
}

TEST_CASE("grid search confirms the act bounds") {
  Lattice l = Lattice::boolean({"x", "y", "z"});
  Valuation v = from_atom_weights(l, {{"x", Rat(1, 3)}, {"y", Rat(1, 3)}, {"z", Rat(1, 3)}});
  Partition e = make_partition(l, {l.element_of({"x"}), l.element_of({"y", "z"})});
  Partition d = make_partition(l, {l.element_of({"x", "y"}), l.element_of({"z"})});
  Act alpha(e, {6, 6});
  Act beta(d, {3, 9});

  SECTION("the worked inf candidate survives the rival search") {
    auto report = verify_act_bound(alpha, beta, v, act_inf(alpha, beta, v), BoundMode::inf);
    CHECK(report.candidate_is_bound);
    CHECK(report.extremal_among_rivals);
    CHECK(report.rivals_checked > 0);
  }

  SECTION("the worked sup candidate survives the rival search") {
    auto report = verify_act_bound(alpha, beta, v, act_sup(alpha, beta, v), BoundMode::sup);
    CHECK(report.candidate_is_bound);
    CHECK(report.extremal_among_rivals);
  }

  SECTION("a deliberately wrong candidate is caught") {
    Act too_low(partition_meet(e, d), {0, 0, 0});
    auto report = verify_act_bound(alpha, beta, v, too_low, BoundMode::inf);
    CHECK(report.candidate_is_bound);        // it is a lower bound
    CHECK_FALSE(report.extremal_among_rivals);  // but not the greatest
    REQUIRE(report.counterexample.has_value());
    CHECK(leq_v(*report.counterexample, alpha, v));
    CHECK(leq_v(*report.counterexample, beta, v));
    CHECK_FALSE(leq_v(*report.counterexample, too_low, v));
  }

  SECTION("same-domain candidates reduce to pointwise min/max") {
    Act a2(e, {1, 9});
    auto inf_report = verify_act_bound(alpha, a2, v, act_inf(alpha, a2, v), BoundMode::inf);
    CHECK(inf_report.candidate_is_bound);
    CHECK(inf_report.extremal_among_rivals);
    auto sup_report = verify_act_bound(alpha, a2, v, act_sup(alpha, a2, v), BoundMode::sup);
    CHECK(sup_report.candidate_is_bound);
    CHECK(sup_report.extremal_among_rivals);
  }
}

TEST_CASE("grid search confirms downgrade maximality and upgrade minimality") {
  Lattice l = Lattice::boolean({"s1", "s2", "s3"});
  Valuation v = from_atom_weights(l, {{"s1", Rat(1, 3)}, {"s2", Rat(1, 3)}, {"s3", Rat(1, 3)}});
  Partition atoms = make_partition(l, l.atoms());
  Partition split = make_partition(l, {l.element_of({"s1"}), l.element_of({"s2", "s3"})});
  Act beta(split, {3, 6});
  Act fine(atoms, {3, 6, 0});

  auto down = verify_downgrade_maximal(beta, atoms, v);
  CHECK(down.agrees);
  CHECK(down.checked > 0);

  auto up = verify_upgrade_minimal(fine, split, v);
  CHECK(up.agrees);
  CHECK(up.checked > 0);
}

TEST_CASE("the join-comparison non-transitivity search") {
  Playground pg = Playground::boolean(4);
  Valuation v = from_atom_weights(pg.lattice, {{"1", Rat(1, 4)}, {"2", Rat(1, 4)}, {"3", Rat(1, 4)}, {"4", Rat(1, 4)}});

  SECTION("the default budget finds a witness that re-validates") {
    auto witness = find_blacktriangle_nontransitivity(pg.lattice, v);
    REQUIRE(witness.has_value());
    CHECK(leq_join(witness->first, witness->second, v));
    CHECK(leq_join(witness->second, witness->third, v));
    CHECK_FALSE(leq_join(witness->first, witness->third, v));
  }

  SECTION("the search is deterministic in the seed") {
    auto w1 = find_blacktriangle_nontransitivity(pg.lattice, v);
    auto w2 = find_blacktriangle_nontransitivity(pg.lattice, v);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->first == w2->first);
    CHECK(w1->second == w2->second);
    CHECK(w1->third == w2->third);
  }

  SECTION("a zero budget comes back empty") {
    SearchBudget none;
    none.max_trials = 0;
    CHECK_FALSE(find_blacktriangle_nontransitivity(pg.lattice, v, none).has_value());
  }
}
