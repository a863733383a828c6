#include "hyperring/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hyperring/tuples.hpp"

namespace hyperring {

  namespace {

    // {g(x, a_2, ..., a_n) | a_i in G}; by commutativity this is the
    // absorption image of x at any position.
    ElementSet absorption_image(HyperStructure const& g, Element x) {
      ElementSet           out;
      std::vector<Element> args(g.n());
      args[0] = x;
      for (TupleOdometer t(g.size(), g.n() - 1); t.valid(); t.next()) {
        std::copy(t.tuple().begin(), t.tuple().end(), args.begin() + 1);
        out.insert(g.mul(args));
      }
      return out;
    }

  }  // namespace

  bool is_hyperideal(HyperStructure const& g, ElementSet s) {
    if (!s.contains(0) || !s.subset_of(g.carrier())) {
      return false;
    }
    for (Element x : s) {
      if (!s.contains(g.inverse(x))) {
        return false;
      }
    }
    std::vector<ElementSet> sets(g.m(), s);
    for (TupleOdometer t(sets); t.valid(); t.next()) {
      if (!g.add(t.tuple()).subset_of(s)) {
        return false;
      }
    }
    std::vector<Element> args(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
      for (TupleOdometer t(g.size(), g.n() - 1); t.valid(); t.next()) {
        std::copy(t.tuple().begin(), t.tuple().begin() + static_cast<std::ptrdiff_t>(i), args.begin());
        std::copy(t.tuple().begin() + static_cast<std::ptrdiff_t>(i),
                  t.tuple().end(),
                  args.begin() + static_cast<std::ptrdiff_t>(i + 1));
        for (Element x : s) {
          args[i] = x;
          if (!s.contains(g.mul(args))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ElementSet ideal_closure(HyperStructure const& g, ElementSet seed) {
    ElementSet current = seed | ElementSet::singleton(0);
    while (true) {
      ElementSet next = current;
      for (Element x : current) {
        next.insert(g.inverse(x));
        next |= absorption_image(g, x);
      }
      std::vector<ElementSet> sets(g.m(), current);
      for (TupleOdometer t(sets); t.valid(); t.next()) {
        next |= g.add(t.tuple());
      }
      if (next == current) {
        return current;
      }
      current = next;
    }
  }

  std::optional<std::vector<Element>> prime_violation(HyperStructure const& g,
                                                      ElementSet            ideal) {
    for (TupleOdometer t(g.size(), g.n()); t.valid(); t.next()) {
      auto const& xs = t.tuple();
      if (ideal.contains(g.mul(xs))
          && std::none_of(xs.begin(), xs.end(), [&](Element x) { return ideal.contains(x); })) {
        return xs;
      }
    }
    return std::nullopt;
  }

  bool is_prime_idealwise(HyperStructure const& g,
                          IdealLattice const&   lattice,
                          ElementSet            ideal) {
    if (ideal == g.carrier()) {
      return false;
    }
    std::vector<ElementSet> sets(g.n());
    for (TupleOdometer t(lattice.size(), g.n()); t.valid(); t.next()) {
      for (std::size_t i = 0; i < g.n(); ++i) {
        sets[i] = lattice[t.tuple()[i]];
      }
      if (mul_sets(g, sets).subset_of(ideal)
          && std::none_of(sets.begin(), sets.end(), [&](ElementSet a) { return a.subset_of(ideal); })) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> IdealLattice::index_of(ElementSet s) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), s, CanonicalLess{});
    if (it == ideals_.end() || *it != s) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - ideals_.begin());
  }

  std::size_t IdealLattice::require(ElementSet s) const {
    auto i = index_of(s);
    if (!i) {
      throw DomainError(s.to_string() + " is not a hyperideal");
    }
    return *i;
  }

  std::vector<ElementSet> IdealLattice::primes() const {
    std::vector<ElementSet> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (prime_[i]) {
        out.push_back(ideals_[i]);
      }
    }
    return out;
  }

  std::vector<ElementSet> IdealLattice::maximals() const {
    std::vector<ElementSet> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (maximal_[i]) {
        out.push_back(ideals_[i]);
      }
    }
    return out;
  }

  std::vector<ElementSet> IdealLattice::proper() const {
    return {ideals_.begin(), ideals_.end() - 1};
  }

  IdealLattice enumerate_hyperideals(HyperStructure const& g) {
    std::unordered_set<ElementSet::Mask> seen;
    std::deque<ElementSet>               queue;
    std::vector<ElementSet>              found;
    ElementSet const                     bottom = ideal_closure(g, ElementSet{});
    queue.push_back(bottom);
    seen.insert(bottom.mask());
    while (!queue.empty()) {
      ElementSet const ideal = queue.front();
      queue.pop_front();
      found.push_back(ideal);
      for (Element a : g.carrier() - ideal) {
        ElementSet const next = ideal_closure(g, ideal | ElementSet::singleton(a));
        if (seen.insert(next.mask()).second) {
          queue.push_back(next);
        }
      }
    }
    std::sort(found.begin(), found.end(), CanonicalLess{});

    IdealLattice lattice;
    lattice.ideals_ = std::move(found);
    std::size_t const count   = lattice.ideals_.size();
    ElementSet const  carrier = g.carrier();
    lattice.prime_.assign(count, false);
    lattice.maximal_.assign(count, false);
    lattice.radical_.assign(count, carrier);

    for (std::size_t i = 0; i + 1 < count; ++i) {
      ElementSet const a = lattice.ideals_[i];
      lattice.prime_[i]  = !prime_violation(g, a).has_value();
      bool const idealwise = is_prime_idealwise(g, lattice, a);
      if (idealwise != lattice.prime_[i]) {
        lattice.findings_.push_back("elementwise and ideal-level primality disagree on "
                                    + a.to_string());
      }
      bool maximal = true;
      for (std::size_t j = 0; j + 1 < count; ++j) {
        if (j != i && a.subset_of(lattice.ideals_[j])) {
          maximal = false;
          break;
        }
      }
      lattice.maximal_[i] = maximal;
    }
    for (std::size_t i = 0; i < count; ++i) {
      ElementSet const a   = lattice.ideals_[i];
      ElementSet       rad = carrier;
      for (std::size_t j = 0; j < count; ++j) {
        if (lattice.prime_[j] && a.subset_of(lattice.ideals_[j])) {
          rad &= lattice.ideals_[j];
        }
      }
      lattice.radical_[i] = rad;
      ElementSet const by_powers = radical_by_powers(g, a);
      if (by_powers != rad) {
        lattice.findings_.push_back("radical of " + a.to_string() + ": primes give "
                                    + rad.to_string() + ", powers give "
                                    + by_powers.to_string());
      }
    }
    return lattice;
  }

  ElementSet principal_ideal(HyperStructure const& g, Element a) {
    if (a >= g.size()) {
      throw InputError("element out of range");
    }
    ElementSet out;
    for (Element r = 0; r < g.size(); ++r) {
      out.insert(g.mul2(r, a));
    }
    if (!is_hyperideal(g, out)) {
      throw ConstructionError("g(G, " + std::to_string(a) + ", 1, ..., 1) = "
                              + out.to_string() + " is not a hyperideal of "
                              + g.name());
    }
    return out;
  }

  ElementSet ideal_product(HyperStructure const& g, std::span<ElementSet const> sets) {
    std::size_t const n = g.n();
    if (!is_fold_length(sets.size(), n)) {
      throw ArityError("ideal product needs l(n-1)+1 factors, got "
                       + std::to_string(sets.size()));
    }
    for (ElementSet s : sets) {
      if (s.empty()) {
        throw DomainError("ideal product of an empty set");
      }
    }
    if (sets.size() == 1) {
      return sets[0];
    }
    ElementSet              acc = mul_sets(g, sets.first(n));
    std::vector<ElementSet> step(n);
    for (std::size_t pos = n; pos < sets.size(); pos += n - 1) {
      step[0] = acc;
      std::copy(sets.begin() + static_cast<std::ptrdiff_t>(pos),
                sets.begin() + static_cast<std::ptrdiff_t>(pos + n - 1),
                step.begin() + 1);
      acc = mul_sets(g, step);
    }
    return acc;
  }

  ElementSet residual_set(HyperStructure const& g, ElementSet ideal, ElementSet r) {
    if (r.empty()) {
      throw DomainError("residual by the empty set");
    }
    ElementSet out;
    for (Element x = 0; x < g.size(); ++x) {
      bool inside = true;
      for (Element y : r) {
        if (!ideal.contains(g.mul2(x, y))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        out.insert(x);
      }
    }
    return out;
  }

  ElementSet radical(IdealLattice const& lattice, ElementSet ideal) {
    return lattice.radical(lattice.require(ideal));
  }

  ElementSet radical_by_powers(HyperStructure const& g, ElementSet ideal) {
    std::size_t const n = g.n();
    ElementSet        out;
    for (Element x = 0; x < g.size(); ++x) {
      bool                 hit = false;
      std::vector<Element> args(n, g.one());
      for (std::size_t r = 1; r <= n && !hit; ++r) {
        args[r - 1] = x;
        hit         = ideal.contains(g.mul(args));
      }
      // g_(l)(x^(l(n-1)+1)) satisfies p_l = g(p_{l-1}, x, ..., x); the
      // sequence is eventually periodic.
      std::vector<Element> step(n, x);
      ElementSet           visited;
      Element              power = x;
      while (!hit && !visited.contains(power)) {
        visited.insert(power);
        hit     = ideal.contains(power);
        step[0] = power;
        power   = g.mul(step);
      }
      if (hit) {
        out.insert(x);
      }
    }
    return out;
  }

  ElementSet jacobson_radical(IdealLattice const& lattice) {
    ElementSet out = lattice.carrier();
    for (ElementSet m : lattice.maximals()) {
      out &= m;
    }
    return out;
  }

  ElementSet prime_radical(IdealLattice const& lattice) {
    ElementSet out = lattice.carrier();
    for (ElementSet p : lattice.primes()) {
      out &= p;
    }
    return out;
  }

  std::vector<ElementSet> maximal_ideals(IdealLattice const& lattice) {
    return lattice.maximals();
  }

}  // namespace hyperring
