#include "hyperring/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "hyperring/classify.hpp"
#include "hyperring/tuples.hpp"

namespace hyperring {

  std::string to_string(Outcome outcome) {
    switch (outcome) {
      case Outcome::pass:
        return "pass";
      case Outcome::counterexample:
        return "counterexample";
      case Outcome::vacuous:
        return "vacuous";
    }
    return "unknown";
  }

  void TheoremResult::settle() {
    if (!witnesses.empty()) {
      outcome = Outcome::counterexample;
    } else if (hypothesis_count == 0) {
      outcome = Outcome::vacuous;
    } else {
      outcome = Outcome::pass;
    }
  }

  namespace {

    using Bindings = std::vector<std::pair<std::string, std::string>>;

    std::string str(ElementSet s) {
      return s.to_string();
    }

    std::string str(bool b) {
      return b ? "true" : "false";
    }

    // delta(0)-hyperideal flag for every lattice index; the carrier is
    // never one.
    std::vector<bool> delta_flags(HyperStructure const& g, IdealLattice const& lattice, ElementSet d0) {
      std::vector<bool> out(lattice.size(), false);
      for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
        out[i] = is_delta0_hyperideal(g, d0, lattice[i]);
      }
      return out;
    }

    bool is_proper_d0(HyperStructure const& g, ElementSet d0, ElementSet a) {
      return a != g.carrier() && is_delta0_hyperideal(g, d0, a);
    }

    ElementSet set_product(HyperStructure const& g, std::vector<ElementSet> const& sets) {
      return mul_sets(g, sets);
    }

    struct Check {
      TheoremResult& r;

      void hit() {
        ++r.hypothesis_count;
      }
      void fail(std::string description, Bindings bindings) {
        r.witnesses.push_back({std::move(description), std::move(bindings)});
      }
      void note(std::string text) {
        r.notes.push_back(std::move(text));
      }
    };

    void add_unique(std::vector<Expansion>& list, Expansion e) {
      for (auto const& existing : list) {
        if (existing.same_table(e)) {
          return;
        }
      }
      list.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- T1

    void t1(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&       g       = ctx.structure();
      auto const&       lat     = ctx.lattice();
      ElementSet const  d0      = delta.zero_image();
      ElementSet const  outside = g.carrier() - d0;
      std::size_t const n       = g.n();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a  = lat[i];
        bool const       i1 = is_delta0_hyperideal(g, d0, a);
        bool             i2 = true;
        for (Element x : outside) {
          ElementSet ex;
          for (Element y = 0; y < g.size(); ++y) {
            if (a.contains(g.mul2(x, y))) {
              ex.insert(y);
            }
          }
          if (ex != a) {
            i2 = false;
            break;
          }
        }
        bool                    i3 = true;
        std::vector<ElementSet> sets(n);
        std::vector<ElementSet> rest(n);
        for (TupleOdometer t(lat.size(), n); t.valid() && i3; t.next()) {
          for (std::size_t k = 0; k < n; ++k) {
            sets[k] = lat[t.tuple()[k]];
          }
          if (!set_product(g, sets).subset_of(a)) {
            continue;
          }
          for (std::size_t k = 0; k < n && i3; ++k) {
            rest    = sets;
            rest[k] = ElementSet::singleton(g.one());
            if (set_product(g, rest).intersects(outside) && !sets[k].subset_of(a)) {
              i3 = false;
            }
          }
        }
        c.hit();
        if (i1 != i2 || i2 != i3) {
          c.fail("characterizations disagree",
                 {{"A", str(a)}, {"(i)", str(i1)}, {"(ii)", str(i2)}, {"(iii)", str(i3)}});
        }
      }
    }

    // ---------------------------------------------------------------- T2

    void t2(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&             g       = ctx.structure();
      auto const&             lat     = ctx.lattice();
      ElementSet const        d0      = delta.zero_image();
      ElementSet const        outside = g.carrier() - d0;
      std::size_t const       n       = g.n();
      std::vector<bool> const dflag   = delta_flags(g, lat, d0);
      std::vector<ElementSet> sets(n);
      std::vector<ElementSet> prod(lat.size());
      for (TupleOdometer t(lat.size(), n - 1); t.valid(); t.next()) {
        for (std::size_t k = 0; k + 1 < n; ++k) {
          sets[k] = lat[t.tuple()[k]];
        }
        sets[n - 1] = ElementSet::singleton(g.one());
        if (!set_product(g, sets).intersects(outside)) {
          continue;
        }
        std::string prefix;
        for (std::size_t k = 0; k + 1 < n; ++k) {
          prefix += (k ? "," : "") + str(sets[k]);
        }
        for (std::size_t j = 0; j < lat.size(); ++j) {
          sets[n - 1] = lat[j];
          prod[j]     = set_product(g, sets);
        }
        for (std::size_t j = 0; j < lat.size(); ++j) {
          for (std::size_t k = j + 1; k < lat.size(); ++k) {
            if (dflag[j] && dflag[k] && prod[j] == prod[k]) {
              c.hit();
              c.fail("(i) equal products of distinct delta(0)-hyperideals",
                     {{"A_1^{n-1}", prefix}, {"A", str(lat[j])}, {"B", str(lat[k])}});
            }
          }
          auto const idx = lat.index_of(prod[j]);
          if (idx && dflag[*idx]) {
            c.hit();
            if (prod[j] != lat[j]) {
              c.fail("(ii) product is a delta(0)-hyperideal but differs from A",
                     {{"A_1^{n-1}", prefix}, {"A", str(lat[j])}, {"product", str(prod[j])}});
            }
          }
        }
      }
    }

    // ---------------------------------------------------------------- T3

    void t3(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (auto const& gamma : ctx.family()) {
        ElementSet const c0 = gamma.zero_image();
        if (!c0.subset_of(d0)) {
          continue;
        }
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          if (!is_delta0_hyperideal(g, c0, lat[i])) {
            continue;
          }
          c.hit();
          if (!is_delta0_hyperideal(g, d0, lat[i])) {
            c.fail("gamma(0)-hyperideal that is not a delta(0)-hyperideal",
                   {{"gamma", gamma.label()}, {"A", str(lat[i])}});
          }
        }
      }
    }

    // ---------------------------------------------------------------- T4

    void t4(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&             g     = ctx.structure();
      auto const&             lat   = ctx.lattice();
      ElementSet const        d0    = delta.zero_image();
      std::vector<bool> const dflag = delta_flags(g, lat, d0);
      ElementSet::Mask const  top   = g.carrier().mask();
      for (ElementSet::Mask mask = 1; mask <= top; ++mask) {
        ElementSet const r = ElementSet::from_mask(mask);
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (!dflag[i] || r.subset_of(lat[i])) {
            continue;
          }
          c.hit();
          ElementSet const e   = residual_set(g, lat[i], r);
          auto const       idx = lat.index_of(e);
          if (!idx || !dflag[*idx]) {
            c.fail("residual is not a delta(0)-hyperideal",
                   {{"A", str(lat[i])}, {"R", str(r)}, {"E_R", str(e)}});
          }
        }
      }
    }

    // ---------------------------------------------------------------- T5

    void t5(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&              g     = ctx.structure();
      auto const&              lat   = ctx.lattice();
      std::vector<bool> const  dflag = delta_flags(g, lat, delta.zero_image());
      std::vector<std::size_t> ds;
      for (std::size_t i = 0; i < lat.size(); ++i) {
        if (dflag[i]) {
          ds.push_back(i);
        }
      }
      auto check = [&](std::vector<std::size_t> const& family) {
        ElementSet meet = g.carrier();
        std::string names;
        for (std::size_t i : family) {
          meet &= lat[i];
          names += str(lat[i]);
        }
        c.hit();
        auto const idx = lat.index_of(meet);
        if (!idx || !dflag[*idx]) {
          c.fail("intersection is not a delta(0)-hyperideal",
                 {{"family", names}, {"intersection", str(meet)}});
        }
      };
      if (ds.size() <= 12) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << ds.size()); ++mask) {
          std::vector<std::size_t> family;
          for (std::size_t k = 0; k < ds.size(); ++k) {
            if ((mask >> k) & 1U) {
              family.push_back(ds[k]);
            }
          }
          check(family);
        }
      } else {
        c.note("more than 12 delta(0)-hyperideals; singletons and pairs only");
        for (std::size_t j = 0; j < ds.size(); ++j) {
          check({ds[j]});
          for (std::size_t k = j + 1; k < ds.size(); ++k) {
            check({ds[j], ds[k]});
          }
        }
      }
    }

    // ---------------------------------------------------------------- T6

    void t6(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      auto const       idx = lat.index_of(d0);
      if (!idx || !lat.is_maximal(*idx)) {
        return;
      }
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        if (!is_J_hyperideal(g, lat, lat[i])) {
          continue;
        }
        c.hit();
        if (!is_delta0_hyperideal(g, d0, lat[i])) {
          c.fail("J-hyperideal that is not a delta(0)-hyperideal", {{"A", str(lat[i])}});
        }
      }
    }

    // ---------------------------------------------------------------- T7

    void t7(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        if (!is_delta0_hyperideal(g, d0, lat[i])) {
          continue;
        }
        c.hit();
        if (!lat[i].subset_of(d0)) {
          c.fail("delta(0)-hyperideal not within delta(0)", {{"A", str(lat[i])}, {"delta(0)", str(d0)}});
        }
      }
    }

    // ---------------------------------------------------------------- T8

    void t8(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g  = ctx.structure();
      ElementSet const d0 = delta.zero_image();
      if (d0 == g.carrier() || !ctx.lattice().contains(d0)) {
        return;
      }
      c.hit();
      bool const prime = !prime_violation(g, d0).has_value();
      bool const dz    = is_delta0_hyperideal(g, d0, d0);
      if (prime != dz) {
        c.fail("primality of delta(0) and its delta(0)-hyperideal flag differ",
               {{"delta(0)", str(d0)}, {"prime", str(prime)}, {"deltaZero", str(dz)}});
      }
    }

    // ---------------------------------------------------------------- T9

    void t9(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a = lat[i];
        if (!lat.is_prime(i) || delta(a) != a) {
          continue;
        }
        c.hit();
        bool const dz = is_delta0_hyperideal(g, d0, a);
        if (dz != (a == d0)) {
          c.fail("prime fixed point: delta(0)-hyperideal flag differs from A = delta(0)",
                 {{"A", str(a)}, {"delta(0)", str(d0)}, {"deltaZero", str(dz)}});
        }
      }
    }

    // ---------------------------------------------------------------- T10

    void t10(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&             g     = ctx.structure();
      auto const&             lat   = ctx.lattice();
      ElementSet const        d0    = delta.zero_image();
      std::vector<bool> const dflag = delta_flags(g, lat, d0);
      std::vector<std::size_t> tops;
      for (std::size_t i = 0; i < lat.size(); ++i) {
        if (!dflag[i]) {
          continue;
        }
        bool top = true;
        for (std::size_t j = 0; j < lat.size(); ++j) {
          if (j != i && dflag[j] && lat[i].subset_of(lat[j])) {
            top = false;
            break;
          }
        }
        if (top) {
          tops.push_back(i);
        }
      }
      for (std::size_t i : tops) {
        if (delta(lat[i]) != lat[i]) {
          continue;
        }
        c.hit();
        if (lat[i] != d0) {
          c.fail("maximal delta(0)-hyperideal fixed by delta differs from delta(0)",
                 {{"A", str(lat[i])}, {"delta(0)", str(d0)}});
        }
      }
      bool const admits = std::find(dflag.begin(), dflag.end(), true) != dflag.end();
      if (!admits) {
        return;
      }
      c.hit();
      if (tops.empty()) {
        c.fail("no maximal delta(0)-hyperideal although one exists", {});
      }
      bool const all_fixed = std::all_of(tops.begin(), tops.end(), [&](std::size_t i) {
        return delta(lat[i]) == lat[i];
      });
      if (all_fixed) {
        c.hit();
        if (d0 == g.carrier() || prime_violation(g, d0)) {
          c.fail("maximal delta(0)-hyperideals are fixed but delta(0) is not prime",
                 {{"delta(0)", str(d0)}});
        }
      }
    }

    // ---------------------------------------------------------------- T11

    void t11(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const& g = ctx.structure();
      if (g.size() == 1) {
        c.note("trivial structure skipped");
        return;
      }
      auto const&      lat  = ctx.lattice();
      ElementSet const d0   = delta.zero_image();
      ElementSet const zero = ElementSet::singleton(0);
      bool const       hid  = is_hyperintegral_domain(g);
      bool const       zd   = is_delta0_hyperideal(g, d0, zero);
      if (hid) {
        c.hit();
        if (!zd) {
          c.fail("hyperintegral domain whose zero ideal is not a delta(0)-hyperideal", {});
        }
      }
      if (!hid && d0 == zero) {
        c.hit();
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          if (is_delta0_hyperideal(g, d0, lat[i])) {
            c.fail("delta(0) = 0 outside a domain, yet a delta(0)-hyperideal exists",
                   {{"A", str(lat[i])}});
          }
        }
      }
      if (d0 == zero) {
        c.hit();
        if (hid != zd) {
          c.fail("delta(0) = 0: domain flag and zero-ideal flag differ",
                 {{"domain", str(hid)}, {"deltaZero", str(zd)}});
        }
      }
    }

    // ---------------------------------------------------------------- T12

    void t12(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a  = lat[i];
        bool const       dz = is_delta0_hyperideal(g, d0, a);
        if (lat.radical(i).subset_of(d0) && is_primary(g, lat, a)) {
          c.hit();
          if (!dz) {
            c.fail("primary with radical inside delta(0) but not a delta(0)-hyperideal",
                   {{"A", str(a)}, {"rad(A)", str(lat.radical(i))}});
          }
        }
        if (lat.is_prime(i) && a.subset_of(d0)) {
          c.hit();
          if (!dz) {
            c.fail("prime inside delta(0) but not a delta(0)-hyperideal", {{"A", str(a)}});
          }
        }
      }
    }

    // ---------------------------------------------------------------- T13

    void t13(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g    = ctx.structure();
      auto const&      lat  = ctx.lattice();
      ElementSet const d0   = delta.zero_image();
      ElementSet const zero = ElementSet::singleton(0);
      auto const       idx  = lat.index_of(d0);
      if (!idx || zero == g.carrier() || !is_delta0_hyperideal(g, d0, zero)
          || lat.radical(*idx) != d0) {
        return;
      }
      c.hit();
      ElementSet const rad0 = lat.radical(0);
      if (!is_proper_d0(g, d0, rad0)) {
        c.fail("rad(0) is not a delta(0)-hyperideal", {{"rad(0)", str(rad0)}, {"delta(0)", str(d0)}});
      }
    }

    // ---------------------------------------------------------------- T14

    void t14(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        if (!is_delta0_hyperideal(g, d0, lat[i])) {
          continue;
        }
        c.hit();
        if (!is_delta_primary(g, delta, lat[i])) {
          c.fail("(i) delta(0)-hyperideal that is not delta-primary", {{"A", str(lat[i])}});
        }
      }
      if (!lat.contains(d0) || !delta(d0).subset_of(d0)) {
        return;
      }
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a  = lat[i];
        bool const       dz = is_delta0_hyperideal(g, d0, a);
        bool const       dp = is_delta_primary(g, delta, a) && a.subset_of(d0);
        c.hit();
        if (dz != dp) {
          c.fail("(ii) delta(0)-hyperideal flag differs from delta-primary inside delta(0)",
                 {{"A", str(a)}, {"deltaZero", str(dz)}, {"primaryInside", str(dp)}});
        }
      }
    }

    // ---------------------------------------------------------------- T15

    void t15(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g       = ctx.structure();
      auto const&      lat     = ctx.lattice();
      ElementSet const d0      = delta.zero_image();
      std::size_t      skipped = 0;
      for (ElementSet s : ctx.multiplicative_subsets()) {
        auto const* local = ctx.localization_at(s);
        auto const* data  = ctx.localization_data(s);
        if (local == nullptr) {
          ++skipped;
          continue;
        }
        std::optional<Expansion> ds;
        try {
          ds = localize_expansion(*data, g.size(), delta, local->lattice);
        } catch (ConstructionError const&) {
          ++skipped;
          continue;
        }
        ElementSet const ds0 = ds->zero_image();
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          ElementSet const a = lat[i];
          if (a.intersects(s) || !is_delta0_hyperideal(g, d0, a)) {
            continue;
          }
          c.hit();
          ElementSet const sa = extend_to_fractions(*data, g.size(), a);
          if (!is_proper_d0(*local->structure, ds0, sa)) {
            c.fail("extension is not a delta_S(0)-hyperideal",
                   {{"S", str(s)}, {"A", str(a)}, {"S^-1 A", str(sa)}, {"delta_S(0)", str(ds0)}});
          }
        }
      }
      if (skipped > 0) {
        c.note(std::to_string(skipped)
               + " multiplicative subsets skipped (localization or transported expansion ill-defined)");
      }
    }

    // ---------------------------------------------------------------- T16

    void t16(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a    = lat[i];
        bool const       dz   = is_delta0_hyperideal(g, d0, a);
        bool const       mult = is_delta0_multiplicative_subset(g, d0, g.carrier() - a);
        c.hit();
        if (dz != mult) {
          c.fail("delta(0)-hyperideal flag differs from complement being delta(0)-multiplicative",
                 {{"A", str(a)}, {"deltaZero", str(dz)}, {"complement", str(mult)}});
        }
      }
    }

    // ---------------------------------------------------------------- T17

    void t17(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&             g     = ctx.structure();
      auto const&             lat   = ctx.lattice();
      ElementSet const        d0    = delta.zero_image();
      std::vector<bool> const dflag = delta_flags(g, lat, d0);
      ElementSet::Mask const  top   = g.carrier().mask();
      for (ElementSet::Mask mask = 1; mask <= top; ++mask) {
        ElementSet const s = ElementSet::from_mask(mask);
        if (!is_delta0_multiplicative_subset(g, d0, s)) {
          continue;
        }
        for (std::size_t i = 0; i < lat.size(); ++i) {
          if (lat[i].intersects(s)) {
            continue;
          }
          c.hit();
          bool found = false;
          for (std::size_t j = 0; j < lat.size() && !found; ++j) {
            found = dflag[j] && lat[i].subset_of(lat[j]) && !lat[j].intersects(s);
          }
          if (!found) {
            c.fail("no delta(0)-hyperideal above A avoiding S", {{"A", str(lat[i])}, {"S", str(s)}});
          }
        }
      }
    }

    // ---------------------------------------------------------------- T18

    void t18(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const& g = ctx.structure();
      if (g.size() == 1) {
        c.note("trivial structure skipped");
        return;
      }
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      bool             all = true;
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        all = all && is_delta0_hyperideal(g, d0, lat[i]);
      }
      bool principal = true;
      for (Element a = 0; a < g.size(); ++a) {
        ElementSet p;
        try {
          p = principal_ideal(g, a);
        } catch (ConstructionError const& e) {
          c.note(e.what());
          return;
        }
        if (p != g.carrier()) {
          principal = principal && is_delta0_hyperideal(g, d0, p);
        }
      }
      if (d0 == g.carrier()) {
        c.note("delta(0) is the carrier: (ii) and (iii) hold, (i) cannot; excluded");
        return;
      }
      bool const local = is_local(lat) && lat.maximals().front() == d0;
      c.hit();
      if (local != principal || principal != all) {
        c.fail("local characterization clauses disagree",
               {{"delta(0)", str(d0)},
                {"(i)", str(local)},
                {"(ii)", str(principal)},
                {"(iii)", str(all)}});
      }
    }

    // ---------------------------------------------------------------- T19

    void t19(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();

      struct Target {
        HomMap const*          psi;
        HyperStructure const*  structure;
        IdealLattice const*    lattice;
        std::vector<Expansion> gammas;
        std::string            label;
      };
      std::vector<Target> targets;
      HomMap const        identity = identity_map(ctx.structure_ptr());
      {
        Target t{&identity, &g, &lat, ctx.family(), "identity"};
        add_unique(t.gammas, delta);
        targets.push_back(std::move(t));
      }
      for (std::size_t i = 0; i < lat.size(); ++i) {
        auto const* q = ctx.quotient_at(i);
        if (q == nullptr) {
          continue;
        }
        Target t{&q->map, q->structure.get(), &q->lattice, q->family, "G/" + str(lat[i])};
        try {
          add_unique(t.gammas, quotient_expansion(*ctx.quotient_data(i), delta, q->lattice));
        } catch (ConstructionError const&) {
        }
        targets.push_back(std::move(t));
      }
      for (ElementSet s : ctx.multiplicative_subsets()) {
        auto const* l = ctx.localization_at(s);
        if (l == nullptr) {
          continue;
        }
        Target t{&l->map, l->structure.get(), &l->lattice, l->family, "S^-1 G, S=" + str(s)};
        try {
          add_unique(t.gammas, localize_expansion(*ctx.localization_data(s), g.size(), delta, l->lattice));
        } catch (ConstructionError const&) {
        }
        targets.push_back(std::move(t));
      }

      std::vector<bool> const dflag = delta_flags(g, lat, d0);
      for (auto const& t : targets) {
        HomMap const&         psi    = *t.psi;
        HyperStructure const& h      = *t.structure;
        IdealLattice const&   hlat   = *t.lattice;
        bool const            inj    = psi.injective();
        bool const            surj   = psi.surjective();
        ElementSet const      kernel = psi.kernel();
        for (auto const& gamma : t.gammas) {
          if (!is_delta_gamma_homomorphism(psi, delta, gamma)) {
            continue;
          }
          ElementSet const c0 = gamma.zero_image();
          if (inj) {
            for (std::size_t j = 0; j + 1 < hlat.size(); ++j) {
              if (!is_delta0_hyperideal(h, c0, hlat[j])) {
                continue;
              }
              c.hit();
              ElementSet const pre = ideal_preimage(psi, hlat[j]);
              if (!is_proper_d0(g, d0, pre)) {
                c.fail("(i) preimage is not a delta(0)-hyperideal",
                       {{"psi", t.label}, {"gamma", gamma.label()}, {"A2", str(hlat[j])}, {"preimage", str(pre)}});
              }
            }
          }
          if (surj) {
            for (std::size_t j = 0; j + 1 < lat.size(); ++j) {
              if (!dflag[j] || !kernel.subset_of(lat[j])) {
                continue;
              }
              c.hit();
              ElementSet const img = ideal_image(psi, lat[j]);
              if (!is_proper_d0(h, c0, img)) {
                c.fail("(ii) image is not a gamma(0)-hyperideal",
                       {{"psi", t.label}, {"gamma", gamma.label()}, {"A1", str(lat[j])}, {"image", str(img)}});
              }
            }
          }
        }
      }
    }

    // ---------------------------------------------------------------- T20

    void t20(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&             g       = ctx.structure();
      auto const&             lat     = ctx.lattice();
      ElementSet const        d0      = delta.zero_image();
      std::vector<bool> const dflag   = delta_flags(g, lat, d0);
      std::size_t             skipped = 0;
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        ElementSet const a = lat[i];
        auto const*      q = ctx.quotient_at(i);
        if (q == nullptr) {
          ++skipped;
          continue;
        }
        std::optional<Expansion> dq;
        try {
          dq = quotient_expansion(*ctx.quotient_data(i), delta, q->lattice);
        } catch (ConstructionError const&) {
          ++skipped;
          continue;
        }
        ElementSet const dq0 = dq->zero_image();
        for (std::size_t j = 0; j + 1 < lat.size(); ++j) {
          ElementSet const b = lat[j];
          if (!a.subset_of(b)) {
            continue;
          }
          ElementSet const ba = ideal_image(q->map, b);
          bool const       qd = is_proper_d0(*q->structure, dq0, ba);
          Bindings const   at = {{"A", str(a)}, {"B", str(b)}, {"B/A", str(ba)}, {"delta_q(0)", str(dq0)}};
          if (dflag[j]) {
            c.hit();
            if (!qd) {
              c.fail("B/A is not a delta_q(0)-hyperideal", at);
            }
          }
          if (qd && a.subset_of(d0)) {
            c.hit();
            if (!dflag[j]) {
              c.fail("converse (i): B is not a delta(0)-hyperideal", at);
            }
          }
          if (qd && dflag[i]) {
            c.hit();
            if (!dflag[j]) {
              c.fail("converse (ii): B is not a delta(0)-hyperideal", at);
            }
          }
        }
      }
      if (skipped > 0) {
        c.note(std::to_string(skipped) + " quotients skipped (construction or transport failed)");
      }
    }

    // ---------------------------------------------------------------- T21

    void t21(TheoremContext& ctx, Expansion const& delta, Check& c) {
      if (!ctx.factors()) {
        return;
      }
      auto const&      g   = ctx.structure();
      ElementSet const d0  = delta.zero_image();
      TheoremContext*  f1  = ctx.factor_context(true);
      TheoremContext*  f2  = ctx.factor_context(false);
      std::size_t const s2 = f2->structure().size();
      auto pair_set        = [&](ElementSet left, ElementSet right) {
        ElementSet out;
        for (Element a : left) {
          for (Element b : right) {
            out.insert(static_cast<Element>(a * s2 + b));
          }
        }
        return out;
      };
      for (auto const& e1 : f1->family()) {
        for (auto const& e2 : f2->family()) {
          if (pair_set(e1.zero_image(), e2.zero_image()) != d0) {
            continue;
          }
          for (bool first : {true, false}) {
            TheoremContext*  fc    = first ? f1 : f2;
            ElementSet const fzero = (first ? e1 : e2).zero_image();
            auto const&      flat  = fc->lattice();
            for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
              ElementSet const wide = first ? pair_set(flat[i], f2->structure().carrier())
                                            : pair_set(f1->structure().carrier(), flat[i]);
              if (!is_delta0_hyperideal(g, d0, wide)) {
                continue;
              }
              c.hit();
              if (!is_delta0_hyperideal(fc->structure(), fzero, flat[i])) {
                c.fail("factor ideal is not a delta_i(0)-hyperideal",
                       {{"factor", first ? "1" : "2"},
                        {"delta1", e1.label()},
                        {"delta2", e2.label()},
                        {"A_i", str(flat[i])}});
              }
            }
          }
        }
      }
    }

    // ---------------------------------------------------------------- T22

    void t22(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g   = ctx.structure();
      auto const&      lat = ctx.lattice();
      ElementSet const d0  = delta.zero_image();
      std::size_t const n  = g.n();
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        if (!is_delta0_hyperideal(g, d0, lat[i])) {
          continue;
        }
        c.hit();
        if (auto w = find_sn_absorbing_violation(g, d0, lat[i], 2)) {
          c.fail("delta(0)-hyperideal that is not (2,n)-absorbing",
                 {{"A", str(lat[i])}, {"x", to_string(w->tuple)}});
        }
      }
      std::size_t k_checked = 0;
      std::size_t k_failed  = 0;
      for (std::size_t s : ctx.config().s_values) {
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          ElementSet const a = lat[i];
          if (!is_sn_absorbing_delta0(g, d0, a, s)) {
            continue;
          }
          c.hit();
          if (auto w = find_sn_absorbing_violation(g, d0, a, s + 1)) {
            c.fail("(s,n)-absorbing but not (s+1,n)-absorbing",
                   {{"A", str(a)}, {"s", std::to_string(s)}, {"x", to_string(w->tuple)}});
          }
          try {
            ++k_checked;
            if (!is_sn_absorbing_delta0(g, d0, a, n + 1)) {
              ++k_failed;
            }
          } catch (ResourceError const&) {
            --k_checked;
          }
        }
      }
      if (k_checked > 0) {
        c.note("k = n+1 reading: " + std::to_string(k_failed) + " of " + std::to_string(k_checked)
               + " absorbing instances are not (n+1,n)-absorbing");
      }
    }

    // ---------------------------------------------------------------- T23

    void t23(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const& g   = ctx.structure();
      auto const& lat = ctx.lattice();
      for (auto const& gamma : ctx.family()) {
        std::optional<Expansion> comp;
        try {
          comp = compose_expansions(gamma, delta);
        } catch (Error const& e) {
          c.note(std::string("composition skipped: ") + e.what());
          continue;
        }
        ElementSet const g0 = gamma.zero_image();
        ElementSet const c0 = comp->zero_image();
        for (std::size_t s : ctx.config().s_values) {
          for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
            if (!is_sn_absorbing_delta0(g, g0, lat[i], s)) {
              continue;
            }
            c.hit();
            bool const weak   = is_weakly_sn_absorbing_delta0(g, c0, lat[i], s);
            bool const strong = is_sn_absorbing_delta0(g, c0, lat[i], s);
            if (weak != strong) {
              c.fail("weakly and plain absorbing differ for the composite",
                     {{"gamma", gamma.label()},
                      {"A", str(lat[i])},
                      {"s", std::to_string(s)},
                      {"weakly", str(weak)},
                      {"absorbing", str(strong)}});
            }
          }
        }
      }
    }

    // ---------------------------------------------------------------- T24

    void t24(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const&      g    = ctx.structure();
      auto const&      lat  = ctx.lattice();
      ElementSet const d0   = delta.zero_image();
      ElementSet const zero = ElementSet::singleton(0);
      std::size_t const n   = g.n();
      for (std::size_t s : ctx.config().s_values) {
        std::size_t const length  = s * (n - 1) + 1;
        std::size_t const max_u   = (s - 1) * (n - 1) + 1;
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          ElementSet const a     = lat[i];
          auto const       zeros = find_sn_delta0_zeros(g, d0, a, s);
          if (zeros.empty()
              || find_strongly_weakly_violation(g, lat, d0, a, s).has_value()) {
            continue;
          }
          for (auto const& x : zeros) {
            for (std::size_t u = 1; u <= max_u; ++u) {
              for (auto const& omit : index_subsets(length, u)) {
                std::vector<ElementSet> sets;
                for (std::size_t j = 0; j < length; ++j) {
                  if (std::find(omit.begin(), omit.end(), j) == omit.end()) {
                    sets.push_back(ElementSet::singleton(x[j]));
                  }
                }
                sets.insert(sets.end(), u, a);
                c.hit();
                ElementSet const p = ideal_product(g, sets);
                if (p != zero) {
                  std::vector<Element> omitted(omit.begin(), omit.end());
                  for (auto& o : omitted) {
                    ++o;
                  }
                  c.fail("product with A substituted is not zero",
                         {{"A", str(a)},
                          {"s", std::to_string(s)},
                          {"x", to_string(x)},
                          {"omitted", to_string(omitted)},
                          {"product", str(p)}});
                }
              }
            }
          }
        }
      }
    }

    // ---------------------------------------------------------------- T25

    void t25(TheoremContext& ctx, Expansion const& delta, Check& c) {
      auto const& lat = ctx.lattice();
      for (std::size_t s : ctx.config().s_values) {
        for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
          TheoremResult const r = nakayama_check(ctx.structure(), lat, delta, lat[i], s);
          c.r.hypothesis_count += r.hypothesis_count;
          for (auto const& w : r.witnesses) {
            c.r.witnesses.push_back(w);
          }
        }
      }
    }

    struct Entry {
      std::string id;
      std::string summary;
      void (*run)(TheoremContext&, Expansion const&, Check&);
    };

    std::vector<Entry> const& registry() {
      static std::vector<Entry> const entries = {
          {"T1", "delta(0)-hyperideal, E_x = A for x outside delta(0), and the ideal-level form agree", t1},
          {"T2", "cancellation of products whose cofactor meets G - delta(0)", t2},
          {"T3", "gamma(0) within delta(0) carries gamma(0)-hyperideals to delta(0)-hyperideals", t3},
          {"T4", "residuals E_R of a delta(0)-hyperideal by R not inside it stay delta(0)-hyperideals", t4},
          {"T5", "intersections of delta(0)-hyperideals are delta(0)-hyperideals", t5},
          {"T6", "with delta(0) maximal, J-hyperideals are delta(0)-hyperideals", t6},
          {"T7", "delta(0)-hyperideals lie inside delta(0)", t7},
          {"T8", "delta(0) is prime iff it is a delta(0)-hyperideal", t8},
          {"T9", "a prime A with delta(A) = A is a delta(0)-hyperideal iff A = delta(0)", t9},
          {"T10", "maximal delta(0)-hyperideals fixed by delta equal delta(0); existence and primality", t10},
          {"T11", "domains, delta(0) = 0 and the zero ideal", t11},
          {"T12", "primary ideals with radical inside delta(0), and primes inside delta(0)", t12},
          {"T13", "rad(0) is a delta(0)-hyperideal when 0 is and rad(delta(0)) = delta(0)", t13},
          {"T14", "delta(0)-hyperideals versus delta-primary ideals inside delta(0)", t14},
          {"T15", "extensions to fractions of delta(0)-hyperideals avoiding S", t15},
          {"T16", "A is a delta(0)-hyperideal iff G - A is delta(0)-multiplicative", t16},
          {"T17", "an ideal avoiding a delta(0)-multiplicative S extends to a delta(0)-hyperideal avoiding S", t17},
          {"T18", "local with maximal ideal delta(0) iff every proper (principal) ideal is a delta(0)-hyperideal", t18},
          {"T19", "preimages and images along delta-gamma homomorphisms", t19},
          {"T20", "delta(0)-hyperideals and their images in quotients", t20},
          {"T21", "A_1 x G_2 a delta(0)-hyperideal forces A_1 a delta_1(0)-hyperideal", t21},
          {"T22", "delta(0)-hyperideals are (2,n)-absorbing; (s,n) gives (s+1,n)", t22},
          {"T23", "for (s,n)-absorbing gamma(0) ideals, weakly and plain absorbing for the composite agree", t23},
          {"T24", "products of a delta(0)-zero with A substituted vanish", t24},
          {"T25", "power of A and the self-module condition for strongly weakly, non-absorbing A", t25},
      };
      return entries;
    }

    Entry const& lookup(std::string_view id) {
      for (auto const& e : registry()) {
        if (e.id == id) {
          return e;
        }
      }
      throw InputError("unknown theorem id '" + std::string(id) + "'");
    }

  }  // namespace

  std::vector<std::string> const& theorem_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& e : registry()) {
        out.push_back(e.id);
      }
      return out;
    }();
    return ids;
  }

  std::string const& theorem_summary(std::string_view id) {
    return lookup(id).summary;
  }

  // ------------------------------------------------------------ context

  struct TheoremContext::Caches {
    struct QuotientSlot {
      bool                     built = false;
      std::optional<Quotient>  data;
      std::optional<Derived>   derived;
    };
    struct LocalSlot {
      std::optional<Localization> data;
      std::optional<Derived>      derived;
    };
    std::vector<QuotientSlot>                 quotients;
    std::optional<std::vector<ElementSet>>    multiplicative;
    std::map<ElementSet::Mask, LocalSlot>     locals;
    std::unique_ptr<TheoremContext>           first;
    std::unique_ptr<TheoremContext>           second;
  };

  TheoremContext::TheoremContext(SuiteItem item, TheoremConfig config)
      : item_(std::move(item)),
        config_(std::move(config)),
        lattice_(enumerate_hyperideals(*item_.structure)),
        family_(standard_expansions(*item_.structure, lattice_)),
        caches_(std::make_unique<Caches>()) {
    caches_->quotients.resize(lattice_.size());
    for (auto const& f : lattice_.findings()) {
      notes_.push_back(f);
    }
  }

  TheoremContext::~TheoremContext()                    = default;
  TheoremContext::TheoremContext(TheoremContext&&) noexcept = default;

  TheoremContext::Derived const* TheoremContext::quotient_at(std::size_t i) {
    auto& slot = caches_->quotients.at(i);
    if (!slot.built) {
      slot.built = true;
      try {
        Quotient     q   = quotient(item_.structure, lattice_[i]);
        IdealLattice lat = enumerate_hyperideals(*q.structure);
        auto         fam = standard_expansions(*q.structure, lat);
        slot.derived     = Derived{q.structure, q.projection, std::move(lat), std::move(fam)};
        slot.data        = std::move(q);
      } catch (ConstructionError const& e) {
        notes_.push_back(std::string("quotient skipped: ") + e.what());
      }
    }
    return slot.derived ? &*slot.derived : nullptr;
  }

  Quotient const* TheoremContext::quotient_data(std::size_t i) {
    quotient_at(i);
    auto& slot = caches_->quotients.at(i);
    return slot.data ? &*slot.data : nullptr;
  }

  std::vector<ElementSet> const& TheoremContext::multiplicative_subsets() {
    if (!caches_->multiplicative) {
      std::vector<ElementSet> out;
      HyperStructure const&   g = structure();
      if (g.size() <= config_.max_local_host) {
        for (ElementSet::Mask mask = 1; mask <= g.carrier().mask(); ++mask) {
          ElementSet const s = ElementSet::from_mask(mask);
          if (is_multiplicative_subset(g, s)) {
            out.push_back(s);
          }
        }
        std::sort(out.begin(), out.end(), CanonicalLess{});
      }
      caches_->multiplicative = std::move(out);
    }
    return *caches_->multiplicative;
  }

  TheoremContext::Derived const* TheoremContext::localization_at(ElementSet s) {
    auto [it, fresh] = caches_->locals.try_emplace(s.mask());
    if (fresh) {
      try {
        Localization loc = localize(item_.structure, s);
        IdealLattice lat = enumerate_hyperideals(*loc.structure);
        auto         fam = standard_expansions(*loc.structure, lat);
        it->second.derived = Derived{loc.structure, loc.canonical, std::move(lat), std::move(fam)};
        it->second.data    = std::move(loc);
      } catch (ConstructionError const& e) {
        notes_.push_back(std::string("localization skipped: ") + e.what());
      }
    }
    return it->second.derived ? &*it->second.derived : nullptr;
  }

  Localization const* TheoremContext::localization_data(ElementSet s) {
    localization_at(s);
    auto const& slot = caches_->locals.at(s.mask());
    return slot.data ? &*slot.data : nullptr;
  }

  TheoremContext* TheoremContext::factor_context(bool first) {
    if (!item_.factors) {
      return nullptr;
    }
    auto& slot = first ? caches_->first : caches_->second;
    if (!slot) {
      SuiteItem sub;
      sub.structure = first ? item_.factors->first : item_.factors->second;
      slot          = std::make_unique<TheoremContext>(std::move(sub), config_);
    }
    return slot.get();
  }

  TheoremResult run_theorem(std::string_view id, TheoremContext& ctx, Expansion const& delta) {
    Entry const&  entry = lookup(id);
    TheoremResult result;
    result.theorem_id = entry.id;
    result.structure  = ctx.structure().name();
    result.expansion  = delta.label();
    Check check{result};
    entry.run(ctx, delta, check);
    result.settle();
    return result;
  }

  std::size_t SuiteReport::counterexamples() const {
    std::size_t total = 0;
    for (auto const& s : summary) {
      total += s.counterexample;
    }
    return total;
  }

  SuiteReport run_suite(std::vector<SuiteItem> const& corpus, SuiteConfig const& config) {
    std::vector<std::string> ids = config.only.empty() ? theorem_ids() : config.only;
    for (auto const& id : ids) {
      lookup(id);
    }
    SuiteReport report;
    for (auto const& id : theorem_ids()) {
      if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
        report.per_theorem.emplace_back(id, std::vector<TheoremResult>{});
      }
    }
    for (auto const& item : corpus) {
      std::optional<TheoremContext> ctx;
      try {
        ctx.emplace(item, config.theorem);
      } catch (Error const& e) {
        report.errors.push_back(item.structure->name() + ": " + e.what());
        continue;
      }
      for (auto const& delta : ctx->expansions()) {
        for (auto& [id, results] : report.per_theorem) {
          try {
            results.push_back(run_theorem(id, *ctx, delta));
          } catch (Error const& e) {
            report.errors.push_back(id + " " + item.structure->name() + " " + delta.label() + ": "
                                    + e.what());
          }
        }
      }
    }
    for (auto& [id, results] : report.per_theorem) {
      std::stable_sort(results.begin(), results.end(), [](auto const& x, auto const& y) {
        return x.structure < y.structure;
      });
      TheoremSummary s;
      s.id = id;
      for (auto const& r : results) {
        s.hypothesis_total += r.hypothesis_count;
        switch (r.outcome) {
          case Outcome::pass:
            ++s.pass;
            break;
          case Outcome::counterexample:
            ++s.counterexample;
            break;
          case Outcome::vacuous:
            ++s.vacuous;
            break;
        }
      }
      report.summary.push_back(s);
    }
    return report;
  }

  std::string to_json(SuiteReport const& report) {
    using nlohmann::ordered_json;
    ordered_json root;
    ordered_json summary = ordered_json::array();
    for (auto const& s : report.summary) {
      summary.push_back({{"id", s.id},
                         {"pass", s.pass},
                         {"counterexample", s.counterexample},
                         {"vacuous", s.vacuous},
                         {"hypothesisTotal", s.hypothesis_total}});
    }
    root["summary"]        = std::move(summary);
    root["counterexamples"] = report.counterexamples();
    ordered_json theorems  = ordered_json::array();
    for (auto const& [id, results] : report.per_theorem) {
      ordered_json list = ordered_json::array();
      for (auto const& r : results) {
        ordered_json witnesses = ordered_json::array();
        for (auto const& w : r.witnesses) {
          ordered_json bindings = ordered_json::object();
          for (auto const& [k, v] : w.bindings) {
            bindings[k] = v;
          }
          witnesses.push_back({{"description", w.description}, {"bindings", std::move(bindings)}});
        }
        ordered_json entry = {{"structure", r.structure},
                              {"expansion", r.expansion},
                              {"outcome", to_string(r.outcome)},
                              {"hypothesisCount", r.hypothesis_count},
                              {"witnesses", std::move(witnesses)}};
        if (!r.notes.empty()) {
          entry["notes"] = r.notes;
        }
        list.push_back(std::move(entry));
      }
      theorems.push_back({{"id", id}, {"summary", theorem_summary(id)}, {"results", std::move(list)}});
    }
    root["theorems"] = std::move(theorems);
    root["errors"]   = report.errors;
    return root.dump(2) + "\n";
  }

}  // namespace hyperring
