#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "test_support.hpp"

using namespace latdec;
using namespace testsupport;

namespace {

std::vector<std::pair<Element, Rat>> assign(const Lattice& l, std::vector<Rat> by_index) {
  std::vector<std::pair<Element, Rat>> out;
  for (std::size_t i = 0; i < by_index.size(); ++i) out.emplace_back(l.element_at(i), by_index[i]);
  return out;
}

}  // namespace

TEST_CASE("valuation construction and flags") {
  Lattice l = Lattice::boolean({"x", "y"});
  // Canonical element order: {}, {x}, {y}, {x,y}.

  SECTION("the zero valuation is valid but unbounded") {
    Valuation v = make_valuation(l, assign(l, {0, 0, 0, 0}));
    CHECK_FALSE(v.bounded());
    CHECK(v.additive());
    CHECK(v.isotone());
    CHECK_FALSE(v.strictly_isotone());
  }

  SECTION("the uniform valuation is bounded and strictly isotone") {
    Valuation v = make_valuation(l, assign(l, {0, Rat(1, 2), Rat(1, 2), 1}));
    CHECK(v.bounded());
    CHECK(v.additive());
    CHECK(v.strictly_isotone());
  }

  SECTION("a modular-law violation is rejected with the witnessing pair") {
    CHECK(throws_code([&] { make_valuation(l, assign(l, {0, Rat(1, 2), Rat(1, 2), Rat(3, 4)})); },
                      Errc::modular_law_violation));
    try {
      make_valuation(l, assign(l, {0, Rat(1, 2), Rat(1, 2), Rat(3, 4)}));
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("{x}") != std::string::npos);
      CHECK(std::string(e.what()).find("{y}") != std::string::npos);
    }
  }

  SECTION("negative and missing values are rejected") {
    CHECK(throws_code([&] { make_valuation(l, assign(l, {0, Rat(-1, 2), Rat(1, 2), 0})); },
                      Errc::negative_value));
    CHECK(throws_code([&] { make_valuation(l, assign(l, {0, 1, 1})); }, Errc::missing_element));
  }
}

TEST_CASE("valuations from atom weights") {
  Lattice l = Lattice::boolean({"x", "y", "z"});

  SECTION("uniform weights add up") {
    Valuation v = from_atom_weights(l, {{"x", Rat(1, 3)}, {"y", Rat(1, 3)}, {"z", Rat(1, 3)}});
    CHECK(v.value(l.element_of({"x", "y"})) == Rat(2, 3));
    CHECK(v.bounded());
    CHECK(v.strictly_isotone());
  }

  SECTION("the classic chances") {
    Lattice e = Lattice::boolean({"e1", "e2", "e3"});
    Valuation v = from_atom_weights(
        e, {{"e1", Rat(1, 100)}, {"e2", Rat(1, 10)}, {"e3", Rat(89, 100)}});
    CHECK(v.value(e.element_of({"e2", "e3"})) == Rat(99, 100));
    CHECK(v.value(e.top()) == 1);
  }

  SECTION("a zero weight keeps isotonicity but not strictness") {
    Valuation v = from_atom_weights(l, {{"x", 0}, {"y", Rat(1, 2)}, {"z", Rat(1, 2)}});
    CHECK(v.isotone());
    CHECK_FALSE(v.strictly_isotone());
  }

  SECTION("errors") {
    CHECK(throws_code(
        [&] { from_atom_weights(l, {{"x", Rat(1, 2)}, {"y", Rat(1, 2)}, {"z", Rat(1, 100)}}); },
        Errc::weight_sum_not_one));
    CHECK(throws_code(
        [&] { from_atom_weights(l, {{"x", Rat(-1, 2)}, {"y", 1}, {"z", Rat(1, 2)}}); },
        Errc::negative_value));
    CHECK(throws_code([&] { from_atom_weights(l, {{"x", 1}, {"y", 0}}); }, Errc::missing_element));
    CHECK(throws_code([&] { from_atom_weights(l, {{"w", 1}, {"x", 0}, {"y", 0}, {"z", 0}}); },
                      Errc::unknown_point));
    Lattice chain = Lattice::from_poset({"p", "q"}, {{"p", "q"}});
    CHECK(throws_code([&] { from_atom_weights(chain, {{"p", 1}}); }, Errc::not_boolean));
  }
}

TEST_CASE("boolean valuation report") {
  Lattice l = Lattice::boolean({"x", "y"});

  SECTION("a probability measure passes every check") {
    Valuation v = from_atom_weights(l, {{"x", Rat(1, 2)}, {"y", Rat(1, 2)}});
    auto r = check_boolean_valuation(v);
    CHECK(r.is_boolean_valuation);
    CHECK(r.equivalence_holds);
    CHECK(r.isotone);
    CHECK(r.complement_identity);
  }

  SECTION("the classic chances satisfy the complement identity") {
    Lattice e = Lattice::boolean({"e1", "e2", "e3"});
    Valuation v = from_atom_weights(
        e, {{"e1", Rat(1, 100)}, {"e2", Rat(1, 10)}, {"e3", Rat(89, 100)}});
    Element not_e3 = *e.complement(e.element_of({"e3"}));
    CHECK(v.value(not_e3) == Rat(11, 100));
    CHECK(check_boolean_valuation(v).complement_identity);
  }

  SECTION("additive but with total 2 is not a Boolean valuation") {
    Valuation v = make_valuation(l, assign(l, {0, 1, 1, 2}));
    auto r = check_boolean_valuation(v);
    CHECK_FALSE(r.is_boolean_valuation);
    CHECK(r.additive);
    CHECK_FALSE(r.unit_total);
    CHECK(r.equivalence_holds);
    CHECK_FALSE(r.complement_identity);
  }

  SECTION("rejects non-complemented lattices") {
    Lattice chain = Lattice::from_poset({"p", "q"}, {{"p", "q"}});
    Valuation v = make_valuation(chain, assign(chain, {0, Rat(1, 2), 1}));
    CHECK(throws_code([&] { check_boolean_valuation(v); }, Errc::not_boolean));
  }
}

TEST_CASE("positivity guard on partition blocks") {
  Lattice l = Lattice::boolean({"x", "y", "z"});
  Valuation uniform = from_atom_weights(l, {{"x", Rat(1, 3)}, {"y", Rat(1, 3)}, {"z", Rat(1, 3)}});
  Valuation with_zero = from_atom_weights(l, {{"x", 0}, {"y", Rat(1, 2)}, {"z", Rat(1, 2)}});
  Partition atoms = make_partition(l, l.atoms());
  Partition merged = make_partition(l, {l.element_of({"x", "y"}), l.element_of({"z"})});

  CHECK_NOTHROW(require_positive_on(uniform, atoms));
  CHECK(throws_code([&] { require_positive_on(with_zero, atoms); }, Errc::zero_block_valuation));
  // Only block values matter: the zero-weight atom hides inside a positive block.
  CHECK_NOTHROW(require_positive_on(with_zero, merged));
}

TEST_CASE("bounded isotone valuations stay inside the unit interval") {
  auto rng = make_rng(23);
  for (int i = 0; i < 50; ++i) {
    Playground pg = Playground::boolean(3);
    Valuation v = rand_positive_valuation(pg.lattice, rng);
    REQUIRE(v.bounded());
    REQUIRE(v.isotone());
    for (const Element& e : pg.lattice.elements()) {
      CHECK(v.value(e) >= 0);
      CHECK(v.value(e) <= 1);
    }
  }
}

TEST_CASE("additivity splits coarse blocks over refinement witnesses") {
  auto rng = make_rng(29);
  Playground pg = Playground::boolean(4);
  for (int i = 0; i < 200; ++i) {
    Valuation v = rand_positive_valuation(pg.lattice, rng);
    const Partition& coarse = rand_of(pg.partitions, rng);
    Partition fine = rand_refinement(pg.partitions, coarse, rng);
    auto w = refines(fine, coarse);
    REQUIRE(w.has_value());
    for (std::size_t j = 0; j < coarse.block_count(); ++j) {
      Rat sum = 0;
      for (std::size_t idx : w->fine_of[j]) sum += v.value(fine.block(idx));
      CHECK(sum == v.value(coarse.block(j)));
    }
  }
}

TEST_CASE("probability measures are additive on disjoint pairs") {
  auto rng = make_rng(31);
  Playground pg = Playground::boolean(4);
  for (int i = 0; i < 20; ++i) {
    Valuation v = rand_positive_valuation(pg.lattice, rng);
    for (const Element& a : pg.lattice.elements())
      for (const Element& b : pg.lattice.elements())
        if (pg.lattice.meet(a, b).mask() == 0)
          CHECK(v.value(pg.lattice.join(a, b)) == v.value(a) + v.value(b));
  }
}
