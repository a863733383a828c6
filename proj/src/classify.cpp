#include "hyperring/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "hyperring/tuples.hpp"

namespace hyperring {

  namespace {

    void require_proper(HyperStructure const& g, ElementSet a) {
      if (a == g.carrier()) {
        throw DomainError("the whole carrier is not a proper ideal");
      }
      if (!a.contains(0) || !a.subset_of(g.carrier())) {
        throw DomainError(a.to_string() + " is not a hyperideal of " + g.name());
      }
    }

    // Scans n-tuples with g(x) in A and, for each position i, checks
    // holds(x, i, g(x with x_i -> 1)).
    template <class Clause>
    std::optional<ClassifierWitness> scan_positions(HyperStructure const& g,
                                                    ElementSet            a,
                                                    Clause&&              holds) {
      std::size_t const    n = g.n();
      std::vector<Element> args(n);
      for (TupleOdometer t(g.size(), n); t.valid(); t.next()) {
        auto const& xs = t.tuple();
        if (!a.contains(g.mul(xs))) {
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          args    = xs;
          args[i] = g.one();
          if (!holds(xs, i, g.mul(args))) {
            return ClassifierWitness{xs, i + 1};
          }
        }
      }
      return std::nullopt;
    }

    std::size_t tuple_count(std::size_t base, std::size_t length, std::size_t budget) {
      auto const count = checked_pow(base, length);
      if (!count || *count > budget) {
        throw ResourceError("scan over " + std::to_string(base) + "^" + std::to_string(length)
                            + " tuples exceeds the budget of " + std::to_string(budget));
      }
      return *count;
    }

    struct AbsorbingShape {
      std::size_t                           length;
      std::size_t                           leading;
      std::vector<std::vector<std::size_t>> others;
    };

    AbsorbingShape absorbing_shape(HyperStructure const& g, std::size_t s) {
      if (s == 0) {
        throw InputError("s must be positive");
      }
      std::size_t const n = g.n();
      return {s * (n - 1) + 1, (s - 1) * (n - 1) + 1, absorbing_subsets(s, n)};
    }

    Element fold_at(HyperStructure const&           g,
                    std::vector<Element> const&     xs,
                    std::vector<std::size_t> const& idx,
                    std::vector<Element>&           buffer) {
      buffer.resize(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) {
        buffer[j] = xs[idx[j]];
      }
      return mul_fold(g, buffer);
    }

    enum class Absorbing { plain, weakly };

    std::optional<ClassifierWitness> scan_absorbing(HyperStructure const& g,
                                                    ElementSet            delta_zero,
                                                    ElementSet            a,
                                                    std::size_t           s,
                                                    std::size_t           budget,
                                                    Absorbing             mode) {
      require_proper(g, a);
      AbsorbingShape const shape = absorbing_shape(g, s);
      tuple_count(g.size(), shape.length, budget);
      std::vector<Element> buffer;
      for (TupleOdometer t(g.size(), shape.length); t.valid(); t.next()) {
        auto const&   xs   = t.tuple();
        Element const prod = mul_fold(g, xs);
        if (!a.contains(prod) || (mode == Absorbing::weakly && prod == 0)) {
          continue;
        }
        if (a.contains(mul_fold(g, std::span(xs).first(shape.leading)))) {
          continue;
        }
        bool const rescued = std::any_of(shape.others.begin(), shape.others.end(), [&](auto const& idx) {
          return delta_zero.contains(fold_at(g, xs, idx, buffer));
        });
        if (!rescued) {
          return ClassifierWitness{xs, std::nullopt};
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::size_t default_budget() {
    constexpr std::size_t fallback = 10'000'000;
    char const*           text     = std::getenv("HYPERRING_BUDGET");
    if (text == nullptr) {
      return fallback;
    }
    std::size_t value = 0;
    auto const  end   = text + std::strlen(text);
    auto const [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
      return fallback;
    }
    return value;
  }

  std::optional<ClassifierWitness> find_prime_violation(HyperStructure const& g, ElementSet a) {
    require_proper(g, a);
    if (auto xs = prime_violation(g, a)) {
      return ClassifierWitness{*xs, std::nullopt};
    }
    return std::nullopt;
  }

  bool is_prime(HyperStructure const& g, IdealLattice const& lattice, ElementSet a) {
    bool const elementwise = !find_prime_violation(g, a).has_value();
    if (elementwise != is_prime_idealwise(g, lattice, a)) {
      throw std::logic_error("elementwise and ideal-level primality disagree on "
                             + a.to_string() + " in " + g.name());
    }
    return elementwise;
  }

  std::optional<ClassifierWitness> find_primary_violation(HyperStructure const& g,
                                                          IdealLattice const&   lattice,
                                                          ElementSet            a) {
    require_proper(g, a);
    ElementSet const rad = lattice.radical(lattice.require(a));
    return scan_positions(g, a, [&](auto const& xs, std::size_t i, Element rest) {
      return a.contains(xs[i]) || rad.contains(rest);
    });
  }

  bool is_primary(HyperStructure const& g, IdealLattice const& lattice, ElementSet a) {
    return !find_primary_violation(g, lattice, a).has_value();
  }

  bool is_hyperintegral_domain(HyperStructure const& g) {
    for (TupleOdometer t(g.size(), g.n()); t.valid(); t.next()) {
      auto const& xs = t.tuple();
      if (g.mul(xs) == 0 && std::none_of(xs.begin(), xs.end(), [](Element x) { return x == 0; })) {
        return false;
      }
    }
    return true;
  }

  bool is_local(IdealLattice const& lattice) {
    return lattice.maximals().size() == 1;
  }

  std::optional<ClassifierWitness> find_N_violation(HyperStructure const& g,
                                                    IdealLattice const&   lattice,
                                                    ElementSet            a) {
    require_proper(g, a);
    ElementSet const nil = prime_radical(lattice);
    return scan_positions(g, a, [&](auto const& xs, std::size_t i, Element rest) {
      return nil.contains(xs[i]) || a.contains(rest);
    });
  }

  bool is_N_hyperideal(HyperStructure const& g, IdealLattice const& lattice, ElementSet a) {
    return !find_N_violation(g, lattice, a).has_value();
  }

  std::optional<ClassifierWitness> find_J_violation(HyperStructure const& g,
                                                    IdealLattice const&   lattice,
                                                    ElementSet            a) {
    require_proper(g, a);
    ElementSet const jac = jacobson_radical(lattice);
    return scan_positions(g, a, [&](auto const& xs, std::size_t i, Element rest) {
      return jac.contains(xs[i]) || a.contains(rest);
    });
  }

  bool is_J_hyperideal(HyperStructure const& g, IdealLattice const& lattice, ElementSet a) {
    return !find_J_violation(g, lattice, a).has_value();
  }

  std::optional<ClassifierWitness> find_delta0_violation(HyperStructure const& g,
                                                         ElementSet            delta_zero,
                                                         ElementSet            a) {
    require_proper(g, a);
    return scan_positions(g, a, [&](auto const& xs, std::size_t i, Element rest) {
      return delta_zero.contains(rest) || a.contains(xs[i]);
    });
  }

  bool is_delta0_hyperideal(HyperStructure const& g, ElementSet delta_zero, ElementSet a) {
    return !find_delta0_violation(g, delta_zero, a).has_value();
  }

  bool is_delta0_hyperideal(HyperStructure const& g, Expansion const& delta, ElementSet a) {
    return is_delta0_hyperideal(g, delta.zero_image(), a);
  }

  std::optional<ClassifierWitness> find_delta_primary_violation(HyperStructure const& g,
                                                                Expansion const&      delta,
                                                                ElementSet            a) {
    require_proper(g, a);
    ElementSet const image = delta(a);
    return scan_positions(g, a, [&](auto const& xs, std::size_t i, Element rest) {
      return a.contains(xs[i]) || image.contains(rest);
    });
  }

  bool is_delta_primary(HyperStructure const& g, Expansion const& delta, ElementSet a) {
    return !find_delta_primary_violation(g, delta, a).has_value();
  }

  std::optional<ClassifierWitness> find_delta0_multiplicative_violation(HyperStructure const& g,
                                                                        ElementSet delta_zero,
                                                                        ElementSet s) {
    for (Element x : g.carrier() - delta_zero) {
      if (!s.contains(x)) {
        return ClassifierWitness{{x}, std::nullopt};
      }
    }
    std::size_t const    n = g.n();
    std::vector<Element> args(n);
    for (TupleOdometer t(g.size(), n - 1); t.valid(); t.next()) {
      std::copy(t.tuple().begin(), t.tuple().end(), args.begin());
      args[n - 1] = g.one();
      if (delta_zero.contains(g.mul(args))) {
        continue;
      }
      for (Element x : s) {
        args[n - 1] = x;
        if (!s.contains(g.mul(args))) {
          return ClassifierWitness{args, std::nullopt};
        }
      }
    }
    return std::nullopt;
  }

  bool is_delta0_multiplicative_subset(HyperStructure const& g,
                                       ElementSet            delta_zero,
                                       ElementSet            s) {
    return !find_delta0_multiplicative_violation(g, delta_zero, s).has_value();
  }

  bool is_delta0_multiplicative_subset(HyperStructure const& g,
                                       Expansion const&      delta,
                                       ElementSet            s) {
    return is_delta0_multiplicative_subset(g, delta.zero_image(), s);
  }

  std::vector<std::vector<std::size_t>> absorbing_subsets(std::size_t s, std::size_t n) {
    std::size_t const length  = s * (n - 1) + 1;
    std::size_t const leading = (s - 1) * (n - 1) + 1;
    auto              subsets = index_subsets(length, leading);
    subsets.erase(subsets.begin());
    return subsets;
  }

  std::optional<ClassifierWitness> find_sn_absorbing_violation(HyperStructure const& g,
                                                               ElementSet            delta_zero,
                                                               ElementSet            a,
                                                               std::size_t           s,
                                                               std::size_t           budget) {
    return scan_absorbing(g, delta_zero, a, s, budget, Absorbing::plain);
  }

  bool is_sn_absorbing_delta0(HyperStructure const& g,
                              ElementSet            delta_zero,
                              ElementSet            a,
                              std::size_t           s,
                              std::size_t           budget) {
    return !find_sn_absorbing_violation(g, delta_zero, a, s, budget).has_value();
  }

  bool is_sn_absorbing_delta0(HyperStructure const& g,
                              Expansion const&      delta,
                              ElementSet            a,
                              std::size_t           s,
                              std::size_t           budget) {
    return is_sn_absorbing_delta0(g, delta.zero_image(), a, s, budget);
  }

  std::optional<ClassifierWitness> find_weakly_sn_absorbing_violation(HyperStructure const& g,
                                                                      ElementSet delta_zero,
                                                                      ElementSet a,
                                                                      std::size_t s,
                                                                      std::size_t budget) {
    return scan_absorbing(g, delta_zero, a, s, budget, Absorbing::weakly);
  }

  bool is_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                     ElementSet            delta_zero,
                                     ElementSet            a,
                                     std::size_t           s,
                                     std::size_t           budget) {
    return !find_weakly_sn_absorbing_violation(g, delta_zero, a, s, budget).has_value();
  }

  bool is_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                     Expansion const&      delta,
                                     ElementSet            a,
                                     std::size_t           s,
                                     std::size_t           budget) {
    return is_weakly_sn_absorbing_delta0(g, delta.zero_image(), a, s, budget);
  }

  std::optional<ClassifierWitness> find_strongly_weakly_violation(HyperStructure const& g,
                                                                  IdealLattice const&   lattice,
                                                                  ElementSet delta_zero,
                                                                  ElementSet a,
                                                                  std::size_t s,
                                                                  std::size_t budget) {
    require_proper(g, a);
    AbsorbingShape const shape = absorbing_shape(g, s);
    tuple_count(lattice.size(), shape.length, budget);
    ElementSet const        zero = ElementSet::singleton(0);
    std::vector<ElementSet> sets(shape.length);
    std::vector<ElementSet> part;
    for (TupleOdometer t(lattice.size(), shape.length); t.valid(); t.next()) {
      auto const& idx = t.tuple();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        sets[i] = lattice[idx[i]];
      }
      ElementSet const prod = ideal_product(g, sets);
      if (prod == zero || !prod.subset_of(a)) {
        continue;
      }
      if (ideal_product(g, std::span(sets).first(shape.leading)).subset_of(a)) {
        continue;
      }
      bool const rescued = std::any_of(shape.others.begin(), shape.others.end(), [&](auto const& pick) {
        part.resize(pick.size());
        for (std::size_t j = 0; j < pick.size(); ++j) {
          part[j] = sets[pick[j]];
        }
        return ideal_product(g, part).subset_of(delta_zero);
      });
      if (!rescued) {
        return ClassifierWitness{idx, std::nullopt};
      }
    }
    return std::nullopt;
  }

  bool is_strongly_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                              IdealLattice const&   lattice,
                                              Expansion const&      delta,
                                              ElementSet            a,
                                              std::size_t           s,
                                              std::size_t           budget) {
    return !find_strongly_weakly_violation(g, lattice, delta.zero_image(), a, s, budget).has_value();
  }

  std::vector<std::vector<Element>> find_sn_delta0_zeros(HyperStructure const& g,
                                                         ElementSet            delta_zero,
                                                         ElementSet            a,
                                                         std::size_t           s,
                                                         std::size_t           budget) {
    require_proper(g, a);
    AbsorbingShape const shape = absorbing_shape(g, s);
    tuple_count(g.size(), shape.length, budget);
    std::vector<std::vector<Element>> out;
    std::vector<Element>              buffer;
    for (TupleOdometer t(g.size(), shape.length); t.valid(); t.next()) {
      auto const& xs = t.tuple();
      if (mul_fold(g, xs) != 0 || a.contains(mul_fold(g, std::span(xs).first(shape.leading)))) {
        continue;
      }
      bool const clear = std::none_of(shape.others.begin(), shape.others.end(), [&](auto const& idx) {
        return delta_zero.contains(fold_at(g, xs, idx, buffer));
      });
      if (clear) {
        out.push_back(xs);
      }
    }
    return out;
  }

  std::vector<std::vector<Element>> find_sn_delta0_zeros(HyperStructure const& g,
                                                         Expansion const&      delta,
                                                         ElementSet            a,
                                                         std::size_t           s,
                                                         std::size_t           budget) {
    return find_sn_delta0_zeros(g, delta.zero_image(), a, s, budget);
  }

  bool ClassificationRecord::flag(std::string const& name) const {
    for (auto const& [key, value] : flags) {
      if (key == name) {
        return value;
      }
    }
    throw std::out_of_range("no flag " + name);
  }

  std::vector<ClassificationRecord> classify_all(HyperStructure const&     g,
                                                 IdealLattice const&       lattice,
                                                 Expansion const&          delta,
                                                 ClassifyOptions const&    options,
                                                 std::vector<std::string>* notes) {
    std::vector<ClassificationRecord> out;
    ElementSet const                  d0 = delta.zero_image();
    for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
      ClassificationRecord record;
      ElementSet const     a = lattice[i];
      record.ideal           = a;
      auto put = [&](std::string name, std::optional<ClassifierWitness> w) {
        record.flags.emplace_back(name, !w.has_value());
        if (w) {
          record.witnesses.emplace(std::move(name), std::move(*w));
        }
      };
      put("prime", is_prime(g, lattice, a) ? std::nullopt : find_prime_violation(g, a));
      put("primary", find_primary_violation(g, lattice, a));
      std::optional<ClassifierWitness> larger;
      for (std::size_t j = 0; j + 1 < lattice.size(); ++j) {
        if (j != i && a.subset_of(lattice[j])) {
          larger = ClassifierWitness{{static_cast<Element>(j)}, std::nullopt};
          break;
        }
      }
      put("maximal", larger);
      put("N", find_N_violation(g, lattice, a));
      put("J", find_J_violation(g, lattice, a));
      put("deltaPrimary", find_delta_primary_violation(g, delta, a));
      put("deltaZero", find_delta0_violation(g, d0, a));
      for (std::size_t s : options.s_values) {
        std::string const tag = "(" + std::to_string(s) + ")";
        try {
          put("snAbsorbing" + tag, find_sn_absorbing_violation(g, d0, a, s, options.budget));
          put("weaklySnAbsorbing" + tag,
              find_weakly_sn_absorbing_violation(g, d0, a, s, options.budget));
          put("stronglyWeaklySnAbsorbing" + tag,
              find_strongly_weakly_violation(g, lattice, d0, a, s, options.budget));
        } catch (ResourceError const& e) {
          if (notes != nullptr) {
            notes->push_back(a.to_string() + " s=" + std::to_string(s) + ": " + e.what());
          }
        }
      }
      out.push_back(std::move(record));
    }
    return out;
  }

}  // namespace hyperring
