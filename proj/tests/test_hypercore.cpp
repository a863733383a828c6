#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axiom_check.hpp"
#include "hyperring/element_set.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/tuples.hpp"
#include "hyperring/workbench.hpp"
#include "oracles.hpp"

using namespace hyperring;

TEST_CASE("element sets") {
  ElementSet s = ElementSet::of({0, 2, 4});
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{0,2,4}");
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK((s - ElementSet::of({2})).to_string() == "{0,4}");
  CHECK(ElementSet::of({1}).subset_of(ElementSet::full(2)));
  CHECK(canonical_less(ElementSet::of({5}), ElementSet::of({0, 1})));
  CHECK(canonical_less(ElementSet::of({0, 1}), ElementSet::of({0, 2})));
  std::vector<Element> seen(s.begin(), s.end());
  CHECK(seen == std::vector<Element>{0, 2, 4});
  CHECK(ElementSet().to_string() == "{}");
}

TEST_CASE("tuple ranks and index subsets") {
  std::vector<Element> t{1, 0, 2};
  CHECK(tuple_rank(t, 3) == 11);
  CHECK(tuple_unrank(11, 3, 3) == t);
  auto subs = index_subsets(4, 2);
  CHECK(subs.size() == 6);
  CHECK(subs.front() == std::vector<std::size_t>{0, 1});
  CHECK(subs.back() == std::vector<std::size_t>{2, 3});
  std::size_t count = 0;
  for (TupleOdometer o(3, 2); o.valid(); o.next()) {
    ++count;
  }
  CHECK(count == 9);
}

TEST_CASE("builtins validate") {
  for (auto const& name : builtin_names()) {
    CAPTURE(name);
    auto report = validate_structure(builtin_structure(name).tables());
    CHECK(report.valid());
  }
}

TEST_CASE("builtin tables") {
  auto z6 = builtin_structure("Z6");
  CHECK(z6.size() == 6);
  CHECK(z6.one() == 1);
  std::vector<Element> xs{4, 5};
  CHECK(z6.add(xs) == ElementSet::of({3}));
  CHECK(z6.mul(xs) == 2);
  CHECK(z6.mul2(2, 3) == 0);
  CHECK(z6.inverse(2) == 4);

  auto k2 = builtin_structure("krasner2");
  std::vector<Element> ones{1, 1};
  CHECK(k2.add(ones) == ElementSet::of({0, 1}));

  auto s3 = builtin_structure("sign3");
  std::vector<Element> mixed{1, 2};
  CHECK(s3.add(mixed) == ElementSet::of({0, 1, 2}));
  std::vector<Element> minus{2, 2};
  CHECK(s3.add(minus) == ElementSet::of({2}));
  CHECK(s3.mul(minus) == 1);
}

TEST_CASE("single-entry corruptions are caught with replayable witnesses") {
  for (auto const& c : axioms::corruptions()) {
    CAPTURE(c.axiom);
    TableData const d      = axioms::apply(c);
    auto const      report = validate_structure(d);
    oracle::Raw const raw(d);
    bool found = false;
    for (auto const& v : report.violations) {
      if (v.axiom == c.axiom) {
        found = true;
        CAPTURE(to_string(v.witness));
        CHECK(axioms::witness_holds(raw, v.axiom, v.witness));
      }
    }
    CHECK(found);
    CHECK_THROWS_AS(HyperStructure::create(d), AxiomError);
  }
}

TEST_CASE("every reported witness replays") {
  // Every violation, not only the targeted one.
  for (auto const& c : axioms::corruptions()) {
    TableData const   d = axioms::apply(c);
    oracle::Raw const raw(d);
    for (auto const& v : validate_structure(d).violations) {
      CAPTURE(c.axiom);
      CAPTURE(v.axiom);
      CHECK(axioms::witness_holds(raw, v.axiom, v.witness));
    }
  }
}

TEST_CASE("malformed tables are input errors") {
  TableData d = builtin_structure("Z2").tables();
  d.add_table[1] = ElementSet();
  CHECK_THROWS_AS(validate_structure(d), InputError);
  d = builtin_structure("Z2").tables();
  d.mul_table.pop_back();
  CHECK_THROWS_AS(validate_structure(d), InputError);
  d = builtin_structure("Z2").tables();
  d.mul_table[0] = 7;
  CHECK_THROWS_AS(validate_structure(d), InputError);
  d = builtin_structure("Z2").tables();
  d.one = 5;
  CHECK_THROWS_AS(validate_structure(d), InputError);
}

TEST_CASE("iterated operations") {
  auto z6 = builtin_structure("Z6");
  std::vector<Element> three{2, 3, 5};
  CHECK(add_fold(z6, three) == ElementSet::of({4}));
  CHECK(mul_fold(z6, three) == 0);
  std::vector<Element> one{4};
  CHECK(mul_fold(z6, one) == 4);
  std::vector<Element> empty;
  CHECK_THROWS_AS(mul_fold(z6, empty), ArityError);

  auto k2 = builtin_structure("krasner2");
  std::vector<Element> ones{1, 1, 1};
  CHECK(add_fold(k2, ones) == ElementSet::of({0, 1}));

  auto d = derive_arity(z6, 2, 3);
  CHECK(d.n() == 3);
  std::vector<Element> even{2, 2, 2};
  CHECK_THROWS_AS(mul_fold(d, std::vector<Element>{1, 2}), ArityError);
  CHECK(mul_fold(d, even) == 2);
  std::vector<Element> five{2, 3, 1, 1, 5};
  CHECK(mul_fold(d, five) == 0);
  CHECK(additive_inverse(z6, 1) == 5);
  CHECK(is_invertible(z6, 5));
  CHECK_FALSE(is_invertible(z6, 3));
}

TEST_CASE("arity derivation") {
  auto k2 = builtin_structure("krasner2");
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 2}, {2, 3}, {3, 3}}) {
    auto d = derive_arity(k2, m, n);
    CHECK(d.m() == m);
    CHECK(d.n() == n);
    CHECK(validate_structure(d.tables()).valid());
    CHECK(d.provenance() == "derive(krasner2," + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  // In Z4, 2 + 2 = 0, so 2 also acts as the identity of the ternary sum.
  CHECK_THROWS_AS(derive_arity(builtin_structure("Z4"), 3, 2), ConstructionError);
  CHECK(validate_structure(derive_arity(builtin_structure("Z3"), 3, 3).tables()).valid());
}
