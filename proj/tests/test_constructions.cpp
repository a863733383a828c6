#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hyperring/constructions.hpp"
#include "hyperring/expansions.hpp"
#include "hyperring/workbench.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  ElementSet set(std::initializer_list<Element> xs) {
    return ElementSet::of(xs);
  }

  StructurePtr shared(std::string const& name) {
    return std::make_shared<HyperStructure const>(builtin_structure(name));
  }

  // Maps every f and g entry of the source onto the target through psi.
  bool preserves_tables(oracle::Raw const& src, oracle::Raw const& dst, std::vector<Element> const& psi) {
    bool ok = true;
    oracle::tuples(src.size, src.m, [&](std::vector<Element> const& xs) {
      std::vector<Element> ys;
      for (Element x : xs) {
        ys.push_back(psi[x]);
      }
      oracle::Mask image = 0;
      for (Element c : oracle::members(src.f(xs))) {
        image |= oracle::Mask{1} << psi[c];
      }
      ok = image == dst.f(ys);
      return ok;
    });
    oracle::tuples(src.size, src.n, [&](std::vector<Element> const& xs) {
      std::vector<Element> ys;
      for (Element x : xs) {
        ys.push_back(psi[x]);
      }
      ok = ok && psi[src.g(xs)] == dst.g(ys);
      return ok;
    });
    return ok && psi[src.one] == dst.one;
  }

  // Number of classes of a/s ~ b/t iff u a t = u b s for some u in S.
  std::size_t fraction_classes(oracle::Raw const& r, oracle::Mask s) {
    auto const                       den = oracle::members(s);
    std::vector<std::pair<Element, Element>> pairs;
    for (Element a = 0; a < r.size; ++a) {
      for (Element t : den) {
        pairs.emplace_back(a, t);
      }
    }
    std::vector<int> cls(pairs.size(), -1);
    int              next = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (cls[i] >= 0) {
        continue;
      }
      cls[i] = next;
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        auto [a, t] = pairs[i];
        auto [b, v] = pairs[j];
        for (Element u : den) {
          if (r.g2(u, r.g2(a, v)) == r.g2(u, r.g2(b, t))) {
            cls[j] = next;
            break;
          }
        }
      }
      ++next;
    }
    return static_cast<std::size_t>(next);
  }

}  // namespace

TEST_CASE("quotients of Z6") {
  auto const z6 = shared("Z6");
  auto const q  = quotient(z6, set({0, 3}));
  CHECK(q.structure->size() == 3);
  CHECK(q.structure->provenance() == "quotient(Z6,{0,3})");
  CHECK(q.cosets == std::vector<ElementSet>{set({0, 3}), set({1, 4}), set({2, 5})});
  CHECK(validate_homomorphism(q.projection).valid());
  CHECK(q.projection.surjective());
  CHECK(q.projection.kernel() == set({0, 3}));

  auto const q2 = quotient(z6, set({0, 2, 4}));
  CHECK(q2.structure->size() == 2);
  CHECK_THROWS(quotient(z6, set({0, 1})));
}

TEST_CASE("localizations of Z6") {
  auto const z6 = shared("Z6");
  auto const l1 = localize(z6, set({1, 5}));
  CHECK(l1.structure->size() == 6);
  auto const l2 = localize(z6, set({1, 2, 4, 5}));
  CHECK(l2.structure->size() == 3);
  auto const l3 = localize(z6, set({1, 3}));
  CHECK(l3.structure->size() == 2);
  CHECK(l3.structure->provenance() == "localize(Z6,{1,3})");
  for (auto const* l : {&l1, &l2, &l3}) {
    CHECK(validate_homomorphism(l->canonical).valid());
  }
  CHECK_THROWS_AS(localize(z6, set({2, 4})), InputError);
}

TEST_CASE("localizing at {1} gives the same structure") {
  for (auto const& name : builtin_names()) {
    auto const g   = shared(name);
    auto const loc = localize(g, set({1}));
    CAPTURE(name);
    REQUIRE(loc.structure->size() == g->size());
    CHECK(loc.canonical.injective());
    CHECK(loc.canonical.surjective());
    CHECK(preserves_tables(oracle::Raw(*g), oracle::Raw(*loc.structure), loc.canonical.map));
  }
}

TEST_CASE("products") {
  auto const p = product(builtin_structure("Z2"), builtin_structure("Z3"));
  CHECK(p.size() == 6);
  CHECK(p.provenance() == "product(Z2,Z3)");
  CHECK(p.name() == "Z2xZ3");
  // (1, 2) has index 1 * 3 + 2.
  CHECK(p.mul2(5, 5) == 4);

  auto const ps = std::make_shared<HyperStructure const>(p);
  auto const z2 = shared("Z2");
  auto const z3 = shared("Z3");
  auto const p1 = product_projection(ps, z2, 3, true);
  auto const p2 = product_projection(ps, z3, 3, false);
  CHECK(validate_homomorphism(p1).valid());
  CHECK(validate_homomorphism(p2).valid());

  // Ideals of a product are exactly the products of ideals.
  auto const lat = enumerate_hyperideals(p);
  auto const l1  = enumerate_hyperideals(*z2);
  auto const l2  = enumerate_hyperideals(*z3);
  std::set<oracle::Mask> expect;
  for (auto a : l1.ideals()) {
    for (auto b : l2.ideals()) {
      oracle::Mask m = 0;
      for (Element x : a) {
        for (Element y : b) {
          m |= oracle::Mask{1} << (x * 3 + y);
        }
      }
      expect.insert(m);
    }
  }
  std::set<oracle::Mask> got;
  for (auto a : lat.ideals()) {
    got.insert(a.mask());
  }
  CHECK(got == expect);
  CHECK(lat.contains(set({0, 1, 2})));
}

TEST_CASE("projections and canonical maps preserve tables on the seeds") {
  std::size_t localized = 0;
  for (auto const& name : builtin_names()) {
    auto const        g = shared(name);
    oracle::Raw const raw(*g);
    auto const        lat = enumerate_hyperideals(*g);
    CAPTURE(name);
    for (auto a : lat.ideals()) {
      auto const q = quotient(g, a);
      CHECK(preserves_tables(raw, oracle::Raw(*q.structure), q.projection.map));
      // Ideals of G/A correspond to ideals of G containing A.
      auto const       ql = enumerate_hyperideals(*q.structure);
      std::set<oracle::Mask> above;
      for (auto b : lat.ideals()) {
        if (a.subset_of(b)) {
          above.insert(b.mask());
        }
      }
      std::set<oracle::Mask> pulled;
      for (auto b : ql.ideals()) {
        pulled.insert(ideal_preimage(q.projection, b).mask());
      }
      CHECK(pulled == above);
    }
    if (g->size() > 8) {
      continue;
    }
    for (oracle::Mask s = 0; s <= raw.full(); ++s) {
      auto const sub = ElementSet::from_mask(s);
      if (!is_multiplicative_subset(*g, sub)) {
        continue;
      }
      CAPTURE(sub.to_string());
      try {
        auto const loc = localize(g, sub);
        CHECK(loc.structure->size() == fraction_classes(raw, s));
        CHECK(preserves_tables(raw, oracle::Raw(*loc.structure), loc.canonical.map));
        ++localized;
      } catch (ConstructionError const&) {
        CHECK(sub.contains(0));
      }
    }
  }
  CHECK(localized > 10);
}

TEST_CASE("images and preimages of ideals") {
  auto const z6 = shared("Z6");
  auto const q  = quotient(z6, set({0, 3}));
  CHECK(ideal_image(q.projection, set({0, 3})) == set({0}));
  CHECK(ideal_image(q.projection, z6->carrier()) == q.structure->carrier());
  CHECK(ideal_preimage(q.projection, set({0})) == set({0, 3}));

  auto const lat = enumerate_hyperideals(*z6);
  auto const id  = identity_map(z6);
  auto const r   = residual_expansion(*z6, lat, set({0, 3}));
  CHECK(is_delta_gamma_homomorphism(id, r, r));
  CHECK_FALSE(is_delta_gamma_homomorphism(id, r, builtin_expansion(*z6, lat, "delta0")));
}

TEST_CASE("multiplicative subsets") {
  auto const z6 = builtin_structure("Z6");
  CHECK(is_multiplicative_subset(z6, set({1, 5})));
  CHECK(is_multiplicative_subset(z6, set({1, 3})));
  CHECK_FALSE(is_multiplicative_subset(z6, set({1, 2})));
  CHECK_FALSE(is_multiplicative_subset(z6, set({2, 4})));
}
