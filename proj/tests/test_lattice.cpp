#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace latdec;
using namespace testsupport;

namespace {

std::set<std::string> element_names(const Lattice& l) {
  std::set<std::string> out;
  for (const Element& e : l.elements()) out.insert(l.name(e));
  return out;
}

}  // namespace

TEST_CASE("boolean construction sizes") {
  CHECK(Lattice::boolean({"x"}).size() == 2);
  CHECK(Lattice::boolean({"x", "y", "z"}).size() == 8);
  CHECK(Lattice::boolean({"a", "b", "c", "d", "e"}).size() == 32);
  CHECK(Lattice::boolean({"x", "y", "z"}).atoms().size() == 3);
}

TEST_CASE("boolean elements are exactly the subsets") {
  // Independent oracle: enumerate subsets of {x,y,z} by hand.
  Lattice l = Lattice::boolean({"x", "y", "z"});
  std::set<std::string> expected;
  const char* names[3] = {"x", "y", "z"};
  for (int m = 0; m < 8; ++m) {
    std::string id = "{";
    bool first = true;
    for (int p = 0; p < 3; ++p) {
      if (!(m & (1 << p))) continue;
      if (!first) id += ',';
      id += names[p];
      first = false;
    }
    id += '}';
    expected.insert(id);
  }
  CHECK(element_names(l) == expected);
}

TEST_CASE("boolean construction errors") {
  CHECK(throws_code([] { Lattice::boolean({}); }, Errc::empty_atom_set));
  CHECK(throws_code([] { Lattice::boolean({"x", "x"}); }, Errc::duplicate_name));
  std::vector<std::string> too_many;
  for (int i = 0; i < 17; ++i) too_many.push_back("p" + std::to_string(i));
  CHECK(throws_code([&] { Lattice::boolean(too_many); }, Errc::size_cap_exceeded));
  // The cap is configurable.
  CHECK(Lattice::boolean(too_many, 20).size() == 131072);
}

TEST_CASE("meet join and order") {
  Lattice l = Lattice::boolean({"a", "b", "c", "d", "e"});
  Element ac = l.element_of({"a", "c"});
  Element b = l.element_of({"b"});
  CHECK(l.join(ac, b) == l.element_of({"a", "b", "c"}));
  CHECK(l.meet(ac, l.element_of({"c", "d"})) == l.element_of({"c"}));
  CHECK(l.leq(l.element_of({"a"}), ac));
  CHECK_FALSE(l.leq(l.element_of({"a"}), b));
  for (const Element& e : l.elements()) {
    CHECK(l.meet(e, l.bottom()) == l.bottom());
    CHECK(l.join(e, l.top()) == l.top());
    CHECK(l.leq(e, e));
  }
}

TEST_CASE("cross-lattice elements are rejected") {
  Lattice l1 = Lattice::boolean({"x", "y"});
  Lattice l2 = Lattice::boolean({"x", "y"});
  CHECK(throws_code([&] { l1.meet(l1.top(), l2.top()); }, Errc::lattice_mismatch));
  // Copies of the same lattice share identity.
  Lattice copy = l1;
  CHECK(copy.same_as(l1));
  CHECK_NOTHROW(copy.meet(l1.top(), copy.bottom()));
}

TEST_CASE("poset construction covers the degenerate and small cases") {
  Lattice trivial = Lattice::from_poset({}, {});
  CHECK(trivial.size() == 1);
  CHECK(trivial.bottom() == trivial.top());
  CHECK(throws_code([&] { trivial.atoms(); }, Errc::trivial_lattice));

  Lattice antichain = Lattice::from_poset({"p", "q"}, {});
  CHECK(antichain.size() == 4);
  CHECK(antichain.is_boolean());

  Lattice chain = Lattice::from_poset({"p", "q"}, {{"p", "q"}});
  CHECK(chain.size() == 3);
  CHECK_FALSE(chain.is_boolean());
  CHECK(chain.atoms().size() == 1);
  CHECK(chain.atoms()[0] == chain.element_of({"p"}));
}

TEST_CASE("poset construction errors") {
  CHECK(throws_code([] { Lattice::from_poset({"p", "q"}, {{"p", "q"}, {"q", "p"}}); },
                    Errc::cycle_detected));
  CHECK(throws_code([] { Lattice::from_poset({"p"}, {{"p", "r"}}); }, Errc::unknown_point));
}

TEST_CASE("antichain poset is isomorphic to the boolean lattice") {
  Lattice a = Lattice::from_poset({"x", "y", "z"}, {});
  Lattice b = Lattice::boolean({"x", "y", "z"});
  REQUIRE(a.size() == b.size());
  // The name map is an isomorphism: compare meet/join tables through it.
  for (const Element& ea : a.elements())
    for (const Element& eb : a.elements()) {
      auto to_b = [&](const Element& e) {
        std::vector<std::string> pts;
        for (std::size_t p = 0; p < a.point_count(); ++p)
          if (e.mask() & (PointMask(1) << p)) pts.push_back(a.points()[p]);
        return b.element_of(pts);
      };
      CHECK(to_b(a.meet(ea, eb)) == b.meet(to_b(ea), to_b(eb)));
      CHECK(to_b(a.join(ea, eb)) == b.join(to_b(ea), to_b(eb)));
    }
}

TEST_CASE("complements") {
  Lattice l = Lattice::boolean({"x", "y", "z"});
  CHECK(l.complement(l.bottom()) == l.top());
  CHECK(l.complement(l.element_of({"x"})) == l.element_of({"y", "z"}));
  for (const Element& e : l.elements()) {
    auto c = l.complement(e);
    REQUIRE(c.has_value());
    CHECK(l.meet(e, *c) == l.bottom());
    CHECK(l.join(e, *c) == l.top());
  }

  Lattice chain = Lattice::from_poset({"p", "q"}, {{"p", "q"}});
  CHECK_FALSE(chain.complement(chain.element_of({"p"})).has_value());
  CHECK(chain.complement(chain.bottom()) == chain.top());
}

TEST_CASE("join closure") {
  Lattice l = Lattice::boolean({"x", "y"});
  CHECK(l.join_closure({}).size() == 1);
  CHECK(l.join_closure({}).front() == l.bottom());

  std::vector<Element> atoms = l.atoms();
  CHECK(l.join_closure(atoms).size() == 4);

  Lattice big = Lattice::boolean({"a", "b", "c", "d", "e"});
  std::vector<Element> blocks = {big.element_of({"a", "c"}), big.element_of({"b"}),
                                 big.element_of({"d", "e"})};
  std::vector<Element> closure = big.join_closure(blocks);
  CHECK(closure.size() == 8);
  // The closure of a partition is a Boolean algebra: closed under meet and
  // mask complement.
  std::set<Element> members(closure.begin(), closure.end());
  for (const Element& x : closure)
    for (const Element& y : closure) CHECK(members.count(big.meet(x, y)) == 1);
}

TEST_CASE("lattice laws hold exhaustively on small lattices") {
  std::vector<Lattice> lattices = {
      Lattice::boolean({"a", "b", "c", "d", "e"}),
      Lattice::from_poset({"p", "q", "r"}, {{"p", "q"}}),
      Lattice::from_poset({"p", "q", "r", "s"}, {{"p", "q"}, {"p", "r"}, {"q", "s"}, {"r", "s"}}),
  };
  for (const Lattice& l : lattices) {
    REQUIRE(l.size() <= 32);
    std::vector<Element> es = l.elements();
    for (const Element& a : es)
      for (const Element& b : es) {
        CHECK(l.meet(a, b) == l.meet(b, a));
        CHECK(l.join(a, b) == l.join(b, a));
        CHECK(l.meet(a, a) == a);
        CHECK(l.join(a, a) == a);
        CHECK(l.meet(a, l.join(a, b)) == a);
        CHECK(l.join(a, l.meet(a, b)) == a);
        for (const Element& c : es) {
          CHECK(l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)));
          CHECK(l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)));
          CHECK(l.join(l.join(a, b), c) == l.join(a, l.join(b, c)));
        }
      }
  }
}

TEST_CASE("lattice laws hold on random triples of a larger lattice") {
  Lattice l = Lattice::boolean({"1", "2", "3", "4", "5", "6"});
  auto rng = make_rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    Element a = l.element_at(pick(rng));
    Element b = l.element_at(pick(rng));
    Element c = l.element_at(pick(rng));
    CHECK(l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)));
    CHECK(l.join(a, l.meet(a, b)) == a);
  }
}
