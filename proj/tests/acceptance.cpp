// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "axiom_check.hpp"
#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/theorems.hpp"
#include "hyperring/workbench.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

  struct Verdict {
    bool        ok = true;
    std::string detail;
  };

  ElementSet set(std::initializer_list<Element> xs) {
    return ElementSet::of(xs);
  }

  std::vector<SuiteItem> const& corpus() {
    static auto const items = generate_corpus(default_corpus_spec());
    return items;
  }

  std::optional<bool> flag(ClassificationRecord const& r, std::string const& name) {
    for (auto const& [k, v] : r.flags) {
      if (k == name) {
        return v;
      }
    }
    return std::nullopt;
  }

  // Z6, residual expansion at {0,3}, ideal {0,2,4}.
  Verdict worked_example() {
    auto const g     = builtin_structure("Z6");
    auto const lat   = enumerate_hyperideals(g);
    auto const delta = residual_expansion(g, lat, set({0, 3}));
    auto const a     = set({0, 2, 4});
    Verdict    out;
    for (auto const& r : classify_all(g, lat, delta)) {
      if (r.ideal == a) {
        out.ok = r.flag("deltaZero") && !r.flag("N");
      }
    }
    // g(2,3) = 0 lies in A, 2 is outside the prime radical, 3 is outside A.
    oracle::Raw const raw(g);
    oracle::Mask const am = a.mask();
    oracle::Mask const rad0 = oracle::radical_by_primes(raw, oracle::ideals(raw), 1);
    bool const         hand = oracle::has(am, raw.g({2, 3})) && !oracle::has(rad0, 2) && !oracle::has(am, 3);
    auto const         w    = find_N_violation(g, lat, a);
    bool               replay = false;
    if (w && w->position) {
      std::size_t const i  = *w->position - 1;
      auto              ys = w->tuple;
      ys[i]                = raw.one;
      replay = oracle::has(am, raw.g(w->tuple)) && !oracle::has(rad0, w->tuple[i]) && !oracle::has(am, raw.g(ys));
    }
    out.ok = out.ok && hand && replay && delta.zero_image() == a;
    out.detail = "deltaZero=true N=false, (2,3) and " + (w ? to_string(w->tuple) : std::string("-")) + " re-checked";
    return out;
  }

  Verdict validator() {
    Verdict     out;
    std::size_t valid = 0;
    for (auto const& name : builtin_names()) {
      valid += validate_structure(builtin_structure(name).tables()).valid() ? 1 : 0;
    }
    std::size_t caught = 0;
    for (auto const& c : axioms::corruptions()) {
      auto const        d = axioms::apply(c);
      oracle::Raw const raw(d);
      bool              hit = false;
      for (auto const& v : validate_structure(d).violations) {
        hit = hit || (v.axiom == c.axiom && axioms::witness_holds(raw, v.axiom, v.witness));
      }
      caught += hit ? 1 : 0;
    }
    out.ok     = valid == builtin_names().size() && caught == axioms::corruptions().size() && caught == 10;
    out.detail = std::to_string(valid) + "/" + std::to_string(builtin_names().size()) + " builtins valid, "
                 + std::to_string(caught) + "/10 corruptions caught with replayed witnesses";
    return out;
  }

  Verdict oracle_equivalence() {
    std::size_t checked = 0, mismatches = 0, radicals = 0;
    for (auto const& item : corpus()) {
      auto const&       g = *item.structure;
      oracle::Raw const raw(g);
      auto const        lat = enumerate_hyperideals(g);
      std::vector<oracle::Mask> masks;
      for (auto s : lat.ideals()) {
        masks.push_back(s.mask());
      }
      if (g.size() <= 8) {
        ++checked;
        mismatches += masks == oracle::ideals(raw) ? 0 : 1;
      }
      for (std::size_t i = 0; i < lat.size(); ++i) {
        ++radicals;
        bool const same = lat.radical(i) == radical_by_powers(g, lat[i])
                          && lat.radical(i).mask() == oracle::radical_by_primes(raw, masks, lat[i].mask())
                          && lat.radical(i).mask() == oracle::radical_by_powers(raw, lat[i].mask());
        mismatches += same ? 0 : 1;
      }
    }
    return {mismatches == 0 && checked > 0,
            std::to_string(checked) + " lattices and " + std::to_string(radicals) + " radicals compared, "
                + std::to_string(mismatches) + " mismatches"};
  }

  Verdict suite(std::string& json) {
    auto const& items = corpus();
    auto const  report = run_suite(items);
    json               = to_json(report);

    std::size_t wide = 0;
    for (auto const& item : items) {
      TheoremContext ctx(item);
      wide += ctx.expansions().size() >= 4 ? 1 : 0;
    }
    std::set<std::string> const needed = {"T1", "T3", "T4", "T5", "T7", "T8", "T12",
                                          "T14", "T15", "T16", "T18", "T20", "T21", "T22"};
    std::string                 starved;
    for (auto const& s : report.summary) {
      if (needed.count(s.id) != 0 && s.hypothesis_total == 0) {
        starved += " " + s.id;
      }
    }
    std::string failing;
    for (auto const& s : report.summary) {
      if (s.counterexample > 0) {
        failing += " " + s.id + "(" + std::to_string(s.counterexample) + " results)";
      }
    }
    std::size_t const cex = report.counterexamples();
    Verdict           out;
    out.ok = cex == 0 && report.errors.empty() && starved.empty() && wide >= 25;
    out.detail = std::to_string(items.size()) + " structures, " + std::to_string(wide)
                 + " with >= 4 expansions, " + std::to_string(cex) + " counterexample results"
                 + (failing.empty() ? "" : " in" + failing) + ", " + std::to_string(report.errors.size())
                 + " errors" + (starved.empty() ? "" : ", no hypothesis hit for" + starved);
    return out;
  }

  Verdict implications() {
    std::size_t records = 0, violations = 0, skipped = 0;
    for (auto const& item : corpus()) {
      auto const& g   = *item.structure;
      auto const  lat = enumerate_hyperideals(g);
      for (auto const& delta : standard_expansions(g, lat)) {
        std::vector<std::string> notes;
        for (auto const& r : classify_all(g, lat, delta, {}, &notes)) {
          ++records;
          auto const dz = flag(r, "deltaZero");
          auto const dp = flag(r, "deltaPrimary");
          auto const a2 = flag(r, "snAbsorbing(2)");
          if (!dz || !dp || !a2) {
            ++skipped;
            continue;
          }
          if (*dz && (!*dp || !r.ideal.subset_of(delta.zero_image()) || !*a2)) {
            ++violations;
          }
          for (std::size_t s : {1, 2}) {
            auto const p = flag(r, "snAbsorbing(" + std::to_string(s) + ")");
            auto const w = flag(r, "weaklySnAbsorbing(" + std::to_string(s) + ")");
            if (p && w && *p && !*w) {
              ++violations;
            }
          }
        }
      }
    }
    return {violations == 0 && skipped == 0,
            std::to_string(records) + " records, " + std::to_string(violations) + " violations, "
                + std::to_string(skipped) + " over budget"};
  }

  Verdict zeros() {
    auto const        z8  = builtin_structure("Z8");
    auto const        lat = enumerate_hyperideals(z8);
    auto const        d0  = builtin_expansion(z8, lat, "delta0");
    auto const        zs  = find_sn_delta0_zeros(z8, d0, set({0}), 2);
    oracle::Raw const raw(z8);
    bool              ok = std::find(zs.begin(), zs.end(), std::vector<Element>{2, 2, 2}) != zs.end();
    for (auto const& z : zs) {
      ok = ok && oracle::zero_holds(raw, 1, 1, 2, z);
    }
    std::size_t absorbing = 0, nonempty = 0;
    for (auto const& item : corpus()) {
      auto const& g = *item.structure;
      auto const  l = enumerate_hyperideals(g);
      for (auto const& delta : standard_expansions(g, l)) {
        for (auto a : l.proper()) {
          for (std::size_t s : {1, 2}) {
            if (!is_sn_absorbing_delta0(g, delta, a, s)) {
              continue;
            }
            ++absorbing;
            nonempty += find_sn_delta0_zeros(g, delta, a, s).empty() ? 0 : 1;
          }
        }
      }
    }
    return {ok && nonempty == 0,
            std::to_string(zs.size()) + " zeros of {0} in Z8 re-validated, " + std::to_string(absorbing)
                + " absorbing (ideal, s) pairs, " + std::to_string(nonempty) + " with zeros"};
  }

  Verdict constructions() {
    auto const z6 = std::make_shared<HyperStructure const>(builtin_structure("Z6"));
    auto const q  = quotient(z6, set({0, 3}));
    auto const l1 = localize(z6, set({1, 2, 4, 5}));
    auto const l2 = localize(z6, set({1, 3}));
    auto const p  = std::make_shared<HyperStructure const>(product(builtin_structure("Z2"), builtin_structure("Z3")));
    auto const p1 = product_projection(p, std::make_shared<HyperStructure const>(builtin_structure("Z2")), 3, true);
    auto const p2 = product_projection(p, std::make_shared<HyperStructure const>(builtin_structure("Z3")), 3, false);
    bool ok = q.structure->size() == 3 && l1.structure->size() == 3 && l2.structure->size() == 2 && p->size() == 6;
    for (auto const* s : {q.structure.get(), l1.structure.get(), l2.structure.get(), p.get()}) {
      ok = ok && validate_structure(s->tables()).valid();
    }
    for (auto const* h : {&q.projection, &l1.canonical, &l2.canonical, &p1, &p2}) {
      ok = ok && validate_homomorphism(*h).valid();
    }
    return {ok, "sizes 3, 3, 2, 6; structures and canonical maps validated"};
  }

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool        all_ok = true;
  std::string first_json;

  auto report = [&](int id, std::string const& title, double limit, std::function<Verdict()> const& body) {
    auto const start   = clock::now();
    Verdict    out;
    try {
      out = body();
    } catch (std::exception const& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(clock::now() - start).count();
    if (limit > 0 && secs >= limit) {
      out.ok = false;
      out.detail += ", over the time limit";
    }
    all_ok = all_ok && out.ok;
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", id, title.c_str(), out.ok ? "PASS" : "FAIL", out.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, "worked example", 1.0, worked_example);
  report(2, "axiom validator", 5.0, validator);
  report(3, "oracle equivalence", 0, oracle_equivalence);
  report(4, "theorem suite", 600.0, [&] { return suite(first_json); });
  report(5, "implication lattice", 0, implications);
  report(6, "delta(0)-zeros", 0, zeros);
  report(7, "constructions", 0, constructions);
  report(8, "determinism", 0, [&] {
    std::string second;
    suite(second);
    bool const same = !first_json.empty() && first_json == second;
    return Verdict{same, std::to_string(first_json.size()) + " bytes, " + (same ? "identical" : "different")};
  });
  return all_ok ? 0 : 1;
}
