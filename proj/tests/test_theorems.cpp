#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hyperring/classify.hpp"
#include "hyperring/theorems.hpp"
#include "hyperring/workbench.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  ElementSet set(std::initializer_list<Element> xs) {
    return ElementSet::of(xs);
  }

  SuiteItem item(std::string const& name) {
    return SuiteItem{std::make_shared<HyperStructure const>(builtin_structure(name)), std::nullopt, {}};
  }

  SuiteReport const& default_report() {
    static auto const report = run_suite(generate_corpus(default_corpus_spec()));
    return report;
  }

  std::string binding(Witness const& w, std::string const& key) {
    auto const* v = w.find(key);
    REQUIRE(v != nullptr);
    return *v;
  }

}  // namespace

TEST_CASE("registry") {
  auto const& ids = theorem_ids();
  REQUIRE(ids.size() == 25);
  CHECK(ids.front() == "T1");
  CHECK(ids.back() == "T25");
  CHECK_FALSE(theorem_summary("T7").empty());
  CHECK_THROWS_AS(theorem_summary("T0"), InputError);
  TheoremContext ctx(item("Z6"));
  CHECK_THROWS_AS(run_theorem("T99", ctx, ctx.family().front()), InputError);
}

TEST_CASE("containment statement on Z6 with the residual expansion") {
  TheoremContext ctx(item("Z6"));
  auto const     delta = residual_expansion(ctx.structure(), ctx.lattice(), set({0, 3}));
  auto const     r     = run_theorem("T7", ctx, delta);
  CHECK(r.outcome == Outcome::pass);
  CHECK(r.hypothesis_count >= 1);
  CHECK(r.structure == "Z6");
  CHECK(r.expansion == "residual{0,3}");
}

TEST_CASE("krasner2 with the identity expansion") {
  TheoremContext ctx(item("krasner2"));
  auto const     delta = builtin_expansion(ctx.structure(), ctx.lattice(), "delta0");
  auto const     r     = run_theorem("T8", ctx, delta);
  CHECK(r.outcome == Outcome::pass);
  CHECK(r.hypothesis_count >= 1);
}

TEST_CASE("a corrupted expansion table is caught") {
  // Not monotone: {0} goes to G while {0,3} stays put. The prime fixed point
  // {0,3} is then a delta(0)-hyperideal without being delta(0).
  TheoremContext ctx(item("Z6"));
  auto const&    dom = ctx.lattice().ideals();
  Expansion const bad("corrupt", dom, {set({0, 1, 2, 3, 4, 5}), set({0, 3}), set({0, 2, 4}), set({0, 1, 2, 3, 4, 5})});
  REQUIRE_FALSE(validate_expansion(bad).valid());
  auto const r = run_theorem("T9", ctx, bad);
  REQUIRE(r.outcome == Outcome::counterexample);
  auto const& w = r.witnesses.front();
  CHECK(binding(w, "A") == "{0,3}");
  oracle::Raw const raw(ctx.structure());
  CHECK(oracle::is_prime(raw, oracle::parse_set(binding(w, "A"))));
  CHECK(oracle::is_delta0(raw, raw.full(), oracle::parse_set(binding(w, "A"))));
}

TEST_CASE("empty corpus") {
  auto const report = run_suite({});
  CHECK(report.counterexamples() == 0);
  CHECK(report.errors.empty());
  for (auto const& [id, results] : report.per_theorem) {
    CHECK(results.empty());
  }
  for (auto const& s : report.summary) {
    CHECK(s.pass + s.counterexample + s.vacuous == 0);
  }
}

TEST_CASE("outcomes follow hypothesis counts and witnesses") {
  auto const& report = default_report();
  CHECK(report.errors.empty());
  REQUIRE(report.summary.size() == 25);
  for (std::size_t t = 0; t < report.per_theorem.size(); ++t) {
    auto const& [id, results] = report.per_theorem[t];
    auto const& sum           = report.summary[t];
    CHECK(sum.id == id);
    std::size_t pass = 0, cex = 0, vac = 0, hyp = 0;
    for (auto const& r : results) {
      CAPTURE(id);
      CAPTURE(r.structure);
      CAPTURE(r.expansion);
      CHECK(r.theorem_id == id);
      CHECK((r.outcome == Outcome::counterexample) == !r.witnesses.empty());
      CHECK((r.outcome == Outcome::vacuous) == (r.hypothesis_count == 0 && r.witnesses.empty()));
      pass += r.outcome == Outcome::pass ? 1 : 0;
      cex += r.outcome == Outcome::counterexample ? 1 : 0;
      vac += r.outcome == Outcome::vacuous ? 1 : 0;
      hyp += r.hypothesis_count;
    }
    CHECK(sum.pass == pass);
    CHECK(sum.counterexample == cex);
    CHECK(sum.vacuous == vac);
    CHECK(sum.hypothesis_total == hyp);
  }
}

TEST_CASE("only the quotient statement fails, and only for residual expansions") {
  for (auto const& [id, results] : default_report().per_theorem) {
    for (auto const& r : results) {
      if (r.outcome != Outcome::counterexample) {
        continue;
      }
      CAPTURE(r.structure);
      CHECK(id == "T20");
      CHECK(r.expansion.rfind("residual", 0) == 0);
      for (auto const& w : r.witnesses) {
        CHECK(w.description.rfind("converse (i):", 0) == 0);
      }
    }
  }
}

TEST_CASE("quotient counterexamples replay against the oracles") {
  // Z8 with the residual expansion at {0,2,4,6}: delta(0) = {0,4}.
  TheoremContext ctx(item("Z8"));
  auto const&    g     = ctx.structure();
  auto const     delta = residual_expansion(g, ctx.lattice(), set({0, 2, 4, 6}));
  REQUIRE(delta.zero_image() == set({0, 4}));
  auto const r = run_theorem("T20", ctx, delta);
  REQUIRE(r.outcome == Outcome::counterexample);

  oracle::Raw const raw(g);
  oracle::Mask const d0 = delta.zero_image().mask();
  for (auto const& w : r.witnesses) {
    auto const a  = oracle::parse_set(binding(w, "A"));
    auto const b  = oracle::parse_set(binding(w, "B"));
    auto const ba = oracle::parse_set(binding(w, "B/A"));
    auto const dq = oracle::parse_set(binding(w, "delta_q(0)"));
    CAPTURE(binding(w, "A"));
    CAPTURE(binding(w, "B"));
    CHECK((a & ~d0) == 0);
    CHECK((a & ~b) == 0);
    CHECK_FALSE(oracle::is_delta0(raw, d0, b));

    auto const        q = quotient(ctx.structure_ptr(), ElementSet::from_mask(a));
    oracle::Raw const qr(*q.structure);
    // Cosets are numbered by least member; recompute B/A and delta(A)/A.
    auto coset_index = [&](Element x) {
      for (std::size_t i = 0; i < q.cosets.size(); ++i) {
        if (q.cosets[i].contains(x)) {
          return static_cast<Element>(i);
        }
      }
      FAIL("element outside every coset");
      return Element{0};
    };
    oracle::Mask image_b = 0, image_da = 0;
    for (Element x : oracle::members(b)) {
      image_b |= oracle::Mask{1} << coset_index(x);
    }
    for (Element x : delta(ElementSet::from_mask(a))) {
      image_da |= oracle::Mask{1} << coset_index(x);
    }
    CHECK(image_b == ba);
    CHECK(image_da == dq);
    CHECK(ba != qr.full());
    CHECK(oracle::is_delta0(qr, dq, ba));
  }

  // The smallest instance: A = B = {0,4}.
  bool found = false;
  for (auto const& w : r.witnesses) {
    found = found || (binding(w, "A") == "{0,4}" && binding(w, "B") == "{0,4}");
  }
  CHECK(found);
}

TEST_CASE("json output is stable") {
  auto const& report = default_report();
  auto const  text   = to_json(report);
  CHECK(text == to_json(report));
  CHECK(text.back() == '\n');
  auto const doc = nlohmann::json::parse(text);
  CHECK(doc.at("summary").size() == 25);
  CHECK(doc.at("counterexamples").get<std::size_t>() == report.counterexamples());
  CHECK(doc.at("summary").at(0).at("id") == "T1");
}
