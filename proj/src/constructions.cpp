#include "hyperring/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperring/classify.hpp"
#include "hyperring/expansions.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/tuples.hpp"

namespace hyperring {

  namespace {

    HyperStructure build_or_throw(TableData data, std::string const& what) {
      ValidationReport const report = validate_structure(data);
      if (!report.valid()) {
        auto const& v = report.violations.front();
        throw ConstructionError(what + " fails " + v.axiom + " at " + to_string(v.witness) + ": "
                                + v.explanation);
      }
      return HyperStructure::create(std::move(data));
    }

    void require_homomorphism(HomMap const& psi, std::string const& what) {
      ValidationReport const report = validate_homomorphism(psi);
      if (!report.valid()) {
        auto const& v = report.violations.front();
        throw ConstructionError(what + " is not a homomorphism (" + v.axiom + " at "
                                + to_string(v.witness) + ")");
      }
    }

    ElementSet image_of(std::vector<Element> const& map, ElementSet s) {
      ElementSet out;
      for (Element x : s) {
        out.insert(map[x]);
      }
      return out;
    }

  }  // namespace

  bool HomMap::injective() const {
    ElementSet seen;
    for (Element y : map) {
      if (seen.contains(y)) {
        return false;
      }
      seen.insert(y);
    }
    return true;
  }

  bool HomMap::surjective() const {
    return ElementSet::of(map) == target->carrier();
  }

  ElementSet HomMap::kernel() const {
    ElementSet out;
    for (Element x = 0; x < map.size(); ++x) {
      if (map[x] == 0) {
        out.insert(x);
      }
    }
    return out;
  }

  HomMap identity_map(StructurePtr g) {
    std::vector<Element> map(g->size());
    std::iota(map.begin(), map.end(), Element{0});
    return HomMap{g, g, std::move(map), HomKind::embedding};
  }

  ValidationReport validate_homomorphism(HomMap const& psi) {
    HyperStructure const& src = *psi.source;
    HyperStructure const& dst = *psi.target;
    if (psi.map.size() != src.size()) {
      throw InputError("homomorphism map must cover the source carrier");
    }
    for (Element y : psi.map) {
      if (y >= dst.size()) {
        throw InputError("homomorphism value out of range");
      }
    }
    if (src.m() != dst.m() || src.n() != dst.n()) {
      throw InputError("homomorphism between structures of different arities");
    }
    ValidationReport     report;
    std::vector<Element> mapped(std::max(src.m(), src.n()));
    for (TupleOdometer t(src.size(), src.m()); t.valid(); t.next()) {
      auto const& xs = t.tuple();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        mapped[i] = psi(xs[i]);
      }
      ElementSet const lhs = image_of(psi.map, src.add(xs));
      ElementSet const rhs = dst.add(std::span(mapped).first(src.m()));
      if (lhs != rhs) {
        report.violations.push_back(
            {"add_preserved", xs, "psi(f(x)) = " + lhs.to_string() + " but f(psi(x)) = " + rhs.to_string()});
        break;
      }
    }
    for (TupleOdometer t(src.size(), src.n()); t.valid(); t.next()) {
      auto const& xs = t.tuple();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        mapped[i] = psi(xs[i]);
      }
      Element const lhs = psi(src.mul(xs));
      Element const rhs = dst.mul(std::span(mapped).first(src.n()));
      if (lhs != rhs) {
        report.violations.push_back({"mul_preserved",
                                     xs,
                                     "psi(g(x)) = " + std::to_string(lhs) + " but g(psi(x)) = "
                                         + std::to_string(rhs)});
        break;
      }
    }
    if (psi(src.one()) != dst.one()) {
      report.violations.push_back({"one_preserved",
                                   {src.one()},
                                   "1 is sent to " + std::to_string(psi(src.one()))});
    }
    return report;
  }

  Quotient quotient(StructurePtr gp, ElementSet ideal) {
    HyperStructure const& g = *gp;
    if (!is_hyperideal(g, ideal)) {
      throw DomainError(ideal.to_string() + " is not a hyperideal of " + g.name());
    }
    std::size_t const size = g.size();
    std::size_t const m    = g.m();
    std::size_t const n    = g.n();

    // f(a, A, 0, ..., 0)
    std::vector<ElementSet> coset(size);
    std::vector<Element>    args(m, 0);
    for (Element a = 0; a < size; ++a) {
      args[0] = a;
      for (Element x : ideal) {
        args[1] = x;
        coset[a] |= g.add(args);
      }
      if (!coset[a].contains(a)) {
        throw ConstructionError("coset of " + std::to_string(a) + " by " + ideal.to_string()
                                + " misses its representative");
      }
    }
    std::vector<ElementSet> cosets;
    for (Element a = 0; a < size; ++a) {
      if (coset[a].min() == a) {
        cosets.push_back(coset[a]);
      }
    }
    std::vector<Element> class_of(size, 0);
    for (Element a = 0; a < size; ++a) {
      auto it = std::find(cosets.begin(), cosets.end(), coset[a]);
      if (it == cosets.end()) {
        throw ConstructionError("cosets by " + ideal.to_string() + " do not partition "
                                + g.name());
      }
      class_of[a] = static_cast<Element>(it - cosets.begin());
    }
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (std::size_t j = i + 1; j < cosets.size(); ++j) {
        if (cosets[i].intersects(cosets[j])) {
          throw ConstructionError("cosets " + cosets[i].to_string() + " and "
                                  + cosets[j].to_string() + " overlap");
        }
      }
    }

    std::size_t const k = cosets.size();
    TableData         data;
    data.name       = g.name() + "/" + ideal.to_string();
    data.provenance = "quotient(" + g.name() + "," + ideal.to_string() + ")";
    data.size       = k;
    data.m          = m;
    data.n          = n;
    data.one        = class_of[g.one()];

    for (TupleOdometer t(k, m); t.valid(); t.next()) {
      std::vector<ElementSet> reps(m);
      for (std::size_t i = 0; i < m; ++i) {
        reps[i] = cosets[t.tuple()[i]];
      }
      std::optional<ElementSet> value;
      for (TupleOdometer r(reps); r.valid(); r.next()) {
        ElementSet const hit = image_of(class_of, g.add(r.tuple()));
        if (value && *value != hit) {
          throw ConstructionError("induced f on " + g.name() + "/" + ideal.to_string()
                                  + " depends on representatives at " + to_string(r.tuple()));
        }
        value = hit;
      }
      data.add_table.push_back(*value);
    }
    for (TupleOdometer t(k, n); t.valid(); t.next()) {
      std::vector<ElementSet> reps(n);
      for (std::size_t i = 0; i < n; ++i) {
        reps[i] = cosets[t.tuple()[i]];
      }
      std::optional<Element> value;
      for (TupleOdometer r(reps); r.valid(); r.next()) {
        Element const hit = class_of[g.mul(r.tuple())];
        if (value && *value != hit) {
          throw ConstructionError("induced g on " + g.name() + "/" + ideal.to_string()
                                  + " depends on representatives at " + to_string(r.tuple()));
        }
        value = hit;
      }
      data.mul_table.push_back(*value);
    }

    auto   q = std::make_shared<HyperStructure const>(build_or_throw(std::move(data), "quotient"));
    HomMap projection{gp, q, class_of, HomKind::projection};
    require_homomorphism(projection, "quotient projection");
    return Quotient{q, std::move(projection), ideal, std::move(cosets)};
  }

  HyperStructure product(HyperStructure const& g1, HyperStructure const& g2) {
    if (g1.m() != g2.m() || g1.n() != g2.n()) {
      throw InputError("product factors must share (m, n)");
    }
    std::size_t const s2   = g2.size();
    std::size_t const size = g1.size() * s2;
    if (size > kMaxCarrier) {
      throw InputError("product carrier exceeds " + std::to_string(kMaxCarrier) + " elements");
    }
    std::size_t const m = g1.m();
    std::size_t const n = g1.n();
    TableData         data;
    data.name       = g1.name() + "x" + g2.name();
    data.provenance = "product(" + g1.name() + "," + g2.name() + ")";
    data.size       = size;
    data.m          = m;
    data.n          = n;
    data.one        = static_cast<Element>(g1.one() * s2 + g2.one());

    std::vector<Element> left(std::max(m, n));
    std::vector<Element> right(std::max(m, n));
    auto                 split = [&](std::vector<Element> const& xs) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        left[i]  = static_cast<Element>(xs[i] / s2);
        right[i] = static_cast<Element>(xs[i] % s2);
      }
    };
    for (TupleOdometer t(size, m); t.valid(); t.next()) {
      split(t.tuple());
      ElementSet value;
      for (Element a : g1.add(std::span(left).first(m))) {
        for (Element b : g2.add(std::span(right).first(m))) {
          value.insert(static_cast<Element>(a * s2 + b));
        }
      }
      data.add_table.push_back(value);
    }
    for (TupleOdometer t(size, n); t.valid(); t.next()) {
      split(t.tuple());
      data.mul_table.push_back(static_cast<Element>(g1.mul(std::span(left).first(n)) * s2
                                                    + g2.mul(std::span(right).first(n))));
    }
    return build_or_throw(std::move(data), "product");
  }

  HomMap product_projection(StructurePtr product_structure,
                            StructurePtr factor,
                            std::size_t  second_size,
                            bool         first) {
    std::vector<Element> map(product_structure->size());
    for (Element x = 0; x < map.size(); ++x) {
      map[x] = static_cast<Element>(first ? x / second_size : x % second_size);
    }
    HomMap psi{std::move(product_structure), std::move(factor), std::move(map), HomKind::projection};
    require_homomorphism(psi, "product projection");
    return psi;
  }

  bool is_multiplicative_subset(HyperStructure const& g, ElementSet s) {
    if (!s.contains(g.one())) {
      return false;
    }
    std::vector<ElementSet> sets(g.n(), s);
    for (TupleOdometer t(sets); t.valid(); t.next()) {
      if (!s.contains(g.mul(t.tuple()))) {
        return false;
      }
    }
    return true;
  }

  Localization localize(StructurePtr gp, ElementSet s) {
    HyperStructure const& g = *gp;
    if (!s.subset_of(g.carrier()) || !is_multiplicative_subset(g, s)) {
      throw InputError(s.to_string() + " is not a multiplicative subset of " + g.name());
    }
    std::size_t const size = g.size();
    std::size_t const m    = g.m();
    std::size_t const n    = g.n();

    std::vector<FractionClass> pairs;
    for (Element a = 0; a < size; ++a) {
      for (Element d : s) {
        pairs.push_back({a, d});
      }
    }
    std::size_t const p = pairs.size();
    std::vector<char> related(p * p, 0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        Element const lhs = g.mul2(pairs[i].numerator, pairs[j].denominator);
        Element const rhs = g.mul2(pairs[j].numerator, pairs[i].denominator);
        for (Element u : s) {
          if (g.mul2(u, lhs) == g.mul2(u, rhs)) {
            related[i * p + j] = 1;
            break;
          }
        }
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        if (!related[i * p + j]) {
          continue;
        }
        for (std::size_t k = 0; k < p; ++k) {
          if (related[j * p + k] && !related[i * p + k]) {
            throw ConstructionError("fraction relation on " + g.name() + " by " + s.to_string()
                                    + " is not transitive");
          }
        }
      }
    }

    // pairs are generated in lexicographic order, so the first unassigned
    // pair of each class is its least member.
    std::vector<Element>       class_of(size * size, 0);
    std::vector<FractionClass> reps;
    std::vector<std::vector<FractionClass>> members;
    std::vector<int>           assigned(p, -1);
    for (std::size_t i = 0; i < p; ++i) {
      if (assigned[i] >= 0) {
        continue;
      }
      int const c = static_cast<int>(reps.size());
      reps.push_back(pairs[i]);
      members.emplace_back();
      for (std::size_t j = i; j < p; ++j) {
        if (related[i * p + j]) {
          assigned[j] = c;
          members.back().push_back(pairs[j]);
        }
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      class_of[pairs[i].numerator * size + pairs[i].denominator] = static_cast<Element>(assigned[i]);
    }
    auto cls = [&](Element a, Element d) { return class_of[a * size + d]; };

    std::size_t const k = reps.size();
    TableData         data;
    data.name       = g.name() + "_S" + s.to_string();
    data.provenance = "localize(" + g.name() + "," + s.to_string() + ")";
    data.size       = k;
    data.m          = m;
    data.n          = n;
    data.one        = cls(g.one(), g.one());

    std::vector<std::size_t> sizes;
    for (auto const& mem : members) {
      sizes.push_back(mem.size());
    }
    auto for_each_choice = [&](std::vector<Element> const& classes, auto&& body) {
      std::vector<std::size_t> digit(classes.size(), 0);
      std::vector<FractionClass> chosen(classes.size());
      while (true) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
          chosen[i] = members[classes[i]][digit[i]];
        }
        body(chosen);
        std::size_t i = classes.size();
        while (i-- > 0) {
          if (++digit[i] < sizes[classes[i]]) {
            break;
          }
          digit[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) {
          return;
        }
      }
    };

    std::vector<Element> nums(std::max(m, n));
    std::vector<Element> dens(std::max(m, n));
    for (TupleOdometer t(k, m); t.valid(); t.next()) {
      std::optional<ElementSet> value;
      for_each_choice(t.tuple(), [&](std::vector<FractionClass> const& chosen) {
        for (std::size_t i = 0; i < m; ++i) {
          dens[i] = chosen[i].denominator;
        }
        Element const common = g.mul_all(std::span(dens).first(m));
        for (std::size_t i = 0; i < m; ++i) {
          Element other = g.one();
          for (std::size_t j = 0; j < m; ++j) {
            if (j != i) {
              other = g.mul2(other, chosen[j].denominator);
            }
          }
          nums[i] = g.mul2(chosen[i].numerator, other);
        }
        ElementSet hit;
        for (Element x : g.add(std::span(nums).first(m))) {
          hit.insert(cls(x, common));
        }
        if (value && *value != hit) {
          throw ConstructionError("induced f on " + data.name
                                  + " depends on representatives at classes "
                                  + to_string(t.tuple()));
        }
        value = hit;
      });
      data.add_table.push_back(*value);
    }
    for (TupleOdometer t(k, n); t.valid(); t.next()) {
      std::optional<Element> value;
      for_each_choice(t.tuple(), [&](std::vector<FractionClass> const& chosen) {
        for (std::size_t i = 0; i < n; ++i) {
          nums[i] = chosen[i].numerator;
          dens[i] = chosen[i].denominator;
        }
        Element const hit = cls(g.mul(std::span(nums).first(n)), g.mul(std::span(dens).first(n)));
        if (value && *value != hit) {
          throw ConstructionError("induced g on " + data.name
                                  + " depends on representatives at classes "
                                  + to_string(t.tuple()));
        }
        value = hit;
      });
      data.mul_table.push_back(*value);
    }

    auto loc = std::make_shared<HyperStructure const>(build_or_throw(std::move(data), "localization"));
    std::vector<Element> canonical_map(size);
    for (Element a = 0; a < size; ++a) {
      canonical_map[a] = cls(a, g.one());
    }
    HomMap canonical{gp, loc, std::move(canonical_map), HomKind::general};
    if (canonical.injective()) {
      canonical.kind = HomKind::embedding;
    }
    require_homomorphism(canonical, "canonical map to fractions");
    return Localization{loc, std::move(canonical), s, std::move(reps), std::move(class_of)};
  }

  ElementSet extend_to_fractions(Localization const& loc,
                                 std::size_t         host_size,
                                 ElementSet          ideal) {
    ElementSet out;
    for (Element a : ideal) {
      for (Element d : loc.by) {
        out.insert(loc.fraction(a, d, host_size));
      }
    }
    return out;
  }

  ElementSet ideal_image(HomMap const& psi, ElementSet ideal) {
    ElementSet const out = image_of(psi.map, ideal);
    if (psi.surjective() && psi.kernel().subset_of(ideal) && !is_hyperideal(*psi.target, out)) {
      throw ConstructionError("image " + out.to_string() + " of " + ideal.to_string()
                              + " is not a hyperideal of " + psi.target->name());
    }
    return out;
  }

  ElementSet ideal_preimage(HomMap const& psi, ElementSet ideal) {
    ElementSet out;
    for (Element x = 0; x < psi.map.size(); ++x) {
      if (ideal.contains(psi.map[x])) {
        out.insert(x);
      }
    }
    if (is_hyperideal(*psi.target, ideal) && !is_hyperideal(*psi.source, out)) {
      throw ConstructionError("preimage " + out.to_string() + " of " + ideal.to_string()
                              + " is not a hyperideal of " + psi.source->name());
    }
    return out;
  }

  bool is_delta_gamma_homomorphism(HomMap const&    psi,
                                   Expansion const& delta,
                                   Expansion const& gamma) {
    for (ElementSet a2 : gamma.domain()) {
      if (delta(ideal_preimage(psi, a2)) != ideal_preimage(psi, gamma(a2))) {
        return false;
      }
    }
    return true;
  }

  TheoremResult nakayama_check(HyperStructure const& g,
                               IdealLattice const&   lattice,
                               Expansion const&      delta,
                               ElementSet            ideal,
                               std::size_t           s) {
    TheoremResult result;
    result.theorem_id = "T25";
    result.structure  = g.name();
    result.expansion  = delta.label();
    std::string const s_text = std::to_string(s);
    if (!is_sn_absorbing_delta0(g, delta, ideal, s)
        && is_strongly_weakly_sn_absorbing_delta0(g, lattice, delta, ideal, s)) {
      ++result.hypothesis_count;
      std::vector<ElementSet> factors(s * (g.n() - 1) + 1, ideal);
      ElementSet const        power = ideal_product(g, factors);
      if (power != ElementSet::singleton(0)) {
        result.witnesses.push_back({"(i) power of A is not zero",
                                    {{"A", ideal.to_string()},
                                     {"s", s_text},
                                     {"product", power.to_string()}}});
      }
      std::vector<ElementSet> args(g.n(), ElementSet::singleton(g.one()));
      args[0] = ideal;
      for (ElementSet module : lattice.ideals()) {
        args.back()           = module;
        ElementSet const kmod = mul_sets(g, args);
        if (kmod == module && module != ElementSet::singleton(0)) {
          result.witnesses.push_back({"(ii) M = k(A, 1, ..., 1, M) with M non-zero",
                                      {{"A", ideal.to_string()},
                                       {"s", s_text},
                                       {"M", module.to_string()}}});
        }
      }
    }
    result.settle();
    return result;
  }

}  // namespace hyperring
