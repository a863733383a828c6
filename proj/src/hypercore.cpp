#include "hyperring/hypercore.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "hyperring/tuples.hpp"

namespace hyperring {

  namespace {

    constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

    std::string describe(Violation const& v) {
      return v.axiom + " violated at " + to_string(v.witness) + ": "
             + v.explanation;
    }

    // Read-only view of candidate tables used by the validator, which must
    // work before a HyperStructure exists.
    class RawTables {
     public:
      explicit RawTables(TableData const& d) : d_(d) {}

      std::size_t size() const {
        return d_.size;
      }
      ElementSet f(std::span<Element const> xs) const {
        return d_.add_table[tuple_rank(xs, d_.size)];
      }
      Element g(std::span<Element const> xs) const {
        return d_.mul_table[tuple_rank(xs, d_.size)];
      }
      // f with one argument ranging over a set.
      ElementSet f_with_set(std::vector<Element> args,
                            std::size_t          pos,
                            ElementSet           values) const {
        ElementSet out;
        for (Element c : values) {
          args[pos] = c;
          out |= f(args);
        }
        return out;
      }

     private:
      TableData const& d_;
    };

    void check_shape(TableData const& d) {
      if (d.size == 0 || d.size > kMaxCarrier) {
        throw InputError("carrier size must be in [1, 64], got "
                         + std::to_string(d.size));
      }
      if (d.m < 2 || d.n < 2) {
        throw InputError("arities must be at least 2");
      }
      if (d.one >= d.size) {
        throw InputError("scalar identity index out of range");
      }
      auto const f_count = checked_pow(d.size, d.m);
      auto const g_count = checked_pow(d.size, d.n);
      if (!f_count || !g_count || *f_count > kMaxTableEntries
          || *g_count > kMaxTableEntries) {
        throw InputError("operation tables too large for size "
                         + std::to_string(d.size));
      }
      if (d.add_table.size() != *f_count) {
        throw InputError("addition table has " + std::to_string(d.add_table.size())
                         + " entries, expected " + std::to_string(*f_count));
      }
      if (d.mul_table.size() != *g_count) {
        throw InputError("multiplication table has "
                         + std::to_string(d.mul_table.size())
                         + " entries, expected " + std::to_string(*g_count));
      }
      ElementSet const carrier = ElementSet::full(d.size);
      for (std::size_t r = 0; r < d.add_table.size(); ++r) {
        if (d.add_table[r].empty()) {
          throw InputError("empty hyperoperation value at tuple "
                           + to_string(tuple_unrank(r, d.size, d.m)));
        }
        if (!d.add_table[r].subset_of(carrier)) {
          throw InputError("addition value out of range at tuple "
                           + to_string(tuple_unrank(r, d.size, d.m)));
        }
      }
      for (std::size_t r = 0; r < d.mul_table.size(); ++r) {
        if (d.mul_table[r] >= d.size) {
          throw InputError("product out of range at tuple "
                           + to_string(tuple_unrank(r, d.size, d.n)));
        }
      }
    }

    template <typename Value>
    std::optional<std::vector<Element>>
    first_asymmetric(std::vector<Value> const& table,
                     std::size_t               size,
                     std::size_t               arity) {
      for (TupleOdometer t(size, arity); t.valid(); t.next()) {
        auto sorted = t.tuple();
        std::sort(sorted.begin(), sorted.end());
        if (table[tuple_rank(t.tuple(), size)]
            != table[tuple_rank(sorted, size)]) {
          return t.tuple();
        }
      }
      return std::nullopt;
    }

    bool acts_as_identity(RawTables const& t, std::size_t m, Element e) {
      std::vector<Element> args(m, e);
      for (Element a = 0; a < t.size(); ++a) {
        args[0] = a;
        if (t.f(args) != ElementSet::singleton(a)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  AxiomError::AxiomError(ValidationReport report)
      : Error(report.violations.empty()
                  ? std::string("structure invalid")
                  : describe(report.violations.front())),
        report_(std::move(report)) {}

  ValidationReport validate_structure(TableData const& d) {
    check_shape(d);
    RawTables const   t(d);
    std::size_t const size = d.size;
    std::size_t const m    = d.m;
    std::size_t const n    = d.n;
    ValidationReport  report;
    auto              fail = [&report](std::string axiom,
                              std::vector<Element> witness,
                              std::string          why) {
      report.violations.push_back({std::move(axiom), std::move(witness), std::move(why)});
    };

    // (a) commutativity
    if (auto w = first_asymmetric(d.add_table, size, m)) {
      fail("add_commutative", *w, "value differs from the sorted permutation");
    }
    if (auto w = first_asymmetric(d.mul_table, size, n)) {
      fail("mul_commutative", *w, "value differs from the sorted permutation");
    }

    // (b) identity: 0 acts as identity, and nothing else does
    {
      std::vector<Element> args(m, 0);
      for (Element a = 0; a < size; ++a) {
        args[0] = a;
        if (t.f(args) != ElementSet::singleton(a)) {
          fail("identity", {a}, "f(a, 0, ..., 0) = " + t.f(args).to_string());
          break;
        }
      }
      for (Element e = 1; e < size; ++e) {
        if (acts_as_identity(t, m, e)) {
          fail("identity_unique", {e}, "a second element is an additive identity");
          break;
        }
      }
    }

    // (c) unique inverses
    std::vector<std::optional<Element>> inverse(size);
    {
      std::vector<Element> args(m, 0);
      bool                 reported = false;
      for (Element a = 0; a < size; ++a) {
        std::vector<Element> candidates;
        args[0] = a;
        for (Element b = 0; b < size; ++b) {
          args[1] = b;
          if (t.f(args).contains(0)) {
            candidates.push_back(b);
          }
        }
        if (candidates.size() == 1) {
          inverse[a] = candidates.front();
        } else if (!reported) {
          std::vector<Element> witness{a};
          witness.insert(witness.end(), candidates.begin(), candidates.end());
          fail("inverse",
               std::move(witness),
               std::to_string(candidates.size()) + " candidate inverses");
          reported = true;
        }
      }
    }

    // (d) reversibility: a in f(a_1^m) implies
    //     a_i in f(a, a_1^-1, ..., a_{i-1}^-1, a_{i+1}^-1, ..., a_m^-1)
    {
      bool found = false;
      for (TupleOdometer tup(size, m); tup.valid() && !found; tup.next()) {
        auto const& xs = tup.tuple();
        if (std::any_of(xs.begin(), xs.end(), [&](Element x) { return !inverse[x]; })) {
          continue;
        }
        for (Element a : t.f(xs)) {
          for (std::size_t i = 0; i < m && !found; ++i) {
            std::vector<Element> args{a};
            for (std::size_t j = 0; j < m; ++j) {
              if (j != i) {
                args.push_back(*inverse[xs[j]]);
              }
            }
            if (!t.f(args).contains(xs[i])) {
              std::vector<Element> witness{static_cast<Element>(i + 1), a};
              witness.insert(witness.end(), xs.begin(), xs.end());
              fail("reversibility", std::move(witness), "a_i missing from the reversed sum");
              found = true;
            }
          }
          if (found) {
            break;
          }
        }
      }
    }

    // (e) associativity, comparing every bracket position with the first
    {
      bool found = false;
      for (TupleOdometer tup(size, 2 * m - 1); tup.valid() && !found; tup.next()) {
        auto const& xs = tup.tuple();
        auto        at = [&](std::size_t p) {
          std::vector<Element> inner(xs.begin() + p, xs.begin() + p + m);
          std::vector<Element> outer(xs.begin(), xs.begin() + p);
          outer.push_back(0);
          outer.insert(outer.end(), xs.begin() + p + m, xs.end());
          return t.f_with_set(outer, p, t.f(inner));
        };
        ElementSet const first = at(0);
        for (std::size_t p = 1; p < m; ++p) {
          if (at(p) != first) {
            std::vector<Element> witness{1, static_cast<Element>(p + 1)};
            witness.insert(witness.end(), xs.begin(), xs.end());
            fail("add_associative", std::move(witness), "bracketings disagree");
            found = true;
            break;
          }
        }
      }
    }
    {
      bool found = false;
      for (TupleOdometer tup(size, 2 * n - 1); tup.valid() && !found; tup.next()) {
        auto const& xs = tup.tuple();
        auto        at = [&](std::size_t p) {
          std::vector<Element> inner(xs.begin() + p, xs.begin() + p + n);
          std::vector<Element> outer(xs.begin(), xs.begin() + p);
          outer.push_back(t.g(inner));
          outer.insert(outer.end(), xs.begin() + p + n, xs.end());
          return t.g(outer);
        };
        Element const first = at(0);
        for (std::size_t p = 1; p < n; ++p) {
          if (at(p) != first) {
            std::vector<Element> witness{1, static_cast<Element>(p + 1)};
            witness.insert(witness.end(), xs.begin(), xs.end());
            fail("mul_associative", std::move(witness), "bracketings disagree");
            found = true;
            break;
          }
        }
      }
    }

    // (f) distributivity at every position
    {
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i) {
        for (TupleOdometer outer(size, n - 1); outer.valid() && !found; outer.next()) {
          std::vector<Element> args(outer.tuple().begin(), outer.tuple().end());
          args.insert(args.begin() + static_cast<std::ptrdiff_t>(i), 0);
          for (TupleOdometer bs(size, m); bs.valid(); bs.next()) {
            ElementSet lhs;
            for (Element c : t.f(bs.tuple())) {
              args[i] = c;
              lhs.insert(t.g(args));
            }
            std::vector<Element> terms(m);
            for (std::size_t k = 0; k < m; ++k) {
              args[i]  = bs.tuple()[k];
              terms[k] = t.g(args);
            }
            if (lhs != t.f(terms)) {
              std::vector<Element> witness{static_cast<Element>(i + 1)};
              witness.insert(witness.end(), outer.tuple().begin(), outer.tuple().end());
              witness.insert(witness.end(), bs.tuple().begin(), bs.tuple().end());
              fail("distributive",
                   std::move(witness),
                   "g(.., f(b), ..) = " + lhs.to_string() + " but f(g(.., b_k, ..)) = "
                       + t.f(terms).to_string());
              found = true;
              break;
            }
          }
        }
      }
    }

    // (g) zero absorption
    for (TupleOdometer tup(size, n); tup.valid(); tup.next()) {
      auto const& xs = tup.tuple();
      if (std::find(xs.begin(), xs.end(), Element{0}) != xs.end() && t.g(xs) != 0) {
        fail("zero_absorbing", xs, "product with a zero factor is " + std::to_string(t.g(xs)));
        break;
      }
    }

    // (h) scalar identity: g(a, 1^(n-1)) = a
    {
      std::vector<Element> args(n, d.one);
      for (Element a = 0; a < size; ++a) {
        args[0] = a;
        if (t.g(args) != a) {
          fail("scalar_identity", {a}, "g(a, 1, ..., 1) = " + std::to_string(t.g(args)));
          break;
        }
      }
    }

    return report;
  }

  HyperStructure::HyperStructure(TableData data, std::vector<Element> inverses)
      : data_(std::move(data)), inverses_(std::move(inverses)) {
    std::size_t const    size = data_.size;
    std::vector<Element> args(data_.n, data_.one);
    mul2_.resize(size * size);
    for (Element a = 0; a < size; ++a) {
      for (Element b = 0; b < size; ++b) {
        args[0]               = a;
        args[1]               = b;
        mul2_[a * size + b] = data_.mul_table[tuple_rank(args, size)];
      }
    }
  }

  HyperStructure HyperStructure::create(TableData data) {
    ValidationReport report = validate_structure(data);
    if (!report.valid()) {
      throw AxiomError(std::move(report));
    }
    std::vector<Element> inverses(data.size);
    std::vector<Element> args(data.m, 0);
    for (Element a = 0; a < data.size; ++a) {
      args[0] = a;
      for (Element b = 0; b < data.size; ++b) {
        args[1] = b;
        if (data.add_table[tuple_rank(args, data.size)].contains(0)) {
          inverses[a] = b;
        }
      }
    }
    return HyperStructure(std::move(data), std::move(inverses));
  }

  ElementSet HyperStructure::add(std::span<Element const> xs) const {
    if (xs.size() != data_.m) {
      throw ArityError("f expects " + std::to_string(data_.m) + " arguments");
    }
    return data_.add_table[tuple_rank(xs, data_.size)];
  }

  Element HyperStructure::mul(std::span<Element const> xs) const {
    if (xs.size() != data_.n) {
      throw ArityError("g expects " + std::to_string(data_.n) + " arguments");
    }
    return data_.mul_table[tuple_rank(xs, data_.size)];
  }

  Element HyperStructure::mul2(Element a, Element b) const noexcept {
    return mul2_[a * data_.size + b];
  }

  Element HyperStructure::mul_all(std::span<Element const> xs) const {
    if (xs.empty()) {
      throw ArityError("product of an empty sequence");
    }
    Element acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      acc = mul2(acc, xs[i]);
    }
    return acc;
  }

  HyperStructure HyperStructure::renamed(std::string name,
                                         std::string provenance) const {
    HyperStructure copy = *this;
    copy.data_.name       = std::move(name);
    copy.data_.provenance = std::move(provenance);
    return copy;
  }

  ElementSet add_fold(HyperStructure const& g, std::span<Element const> xs) {
    std::size_t const m = g.m();
    if (!is_fold_length(xs.size(), m)) {
      throw ArityError("iterated f needs l(m-1)+1 arguments, got "
                       + std::to_string(xs.size()));
    }
    if (xs.size() == 1) {
      return ElementSet::singleton(xs[0]);
    }
    ElementSet           acc = g.add(xs.first(m));
    std::vector<Element> args(m);
    for (std::size_t pos = m; pos < xs.size(); pos += m - 1) {
      std::copy(xs.begin() + static_cast<std::ptrdiff_t>(pos),
                xs.begin() + static_cast<std::ptrdiff_t>(pos + m - 1),
                args.begin() + 1);
      ElementSet next;
      for (Element c : acc) {
        args[0] = c;
        next |= g.add(args);
      }
      acc = next;
    }
    return acc;
  }

  Element mul_fold(HyperStructure const& g, std::span<Element const> xs) {
    std::size_t const n = g.n();
    if (!is_fold_length(xs.size(), n)) {
      throw ArityError("iterated g needs l(n-1)+1 arguments, got "
                       + std::to_string(xs.size()));
    }
    if (xs.size() == 1) {
      return xs[0];
    }
    Element              acc = g.mul(xs.first(n));
    std::vector<Element> args(n);
    for (std::size_t pos = n; pos < xs.size(); pos += n - 1) {
      args[0] = acc;
      std::copy(xs.begin() + static_cast<std::ptrdiff_t>(pos),
                xs.begin() + static_cast<std::ptrdiff_t>(pos + n - 1),
                args.begin() + 1);
      acc = g.mul(args);
    }
    return acc;
  }

  ElementSet add_sets(HyperStructure const& g, std::span<ElementSet const> sets) {
    if (sets.size() != g.m()) {
      throw ArityError("f expects " + std::to_string(g.m()) + " sets");
    }
    ElementSet out;
    for (ElementSet s : sets) {
      if (s.empty()) {
        throw DomainError("f applied to an empty set");
      }
    }
    for (TupleOdometer t(sets); t.valid(); t.next()) {
      out |= g.add(t.tuple());
    }
    return out;
  }

  ElementSet mul_sets(HyperStructure const& g, std::span<ElementSet const> sets) {
    if (sets.size() != g.n()) {
      throw ArityError("g expects " + std::to_string(g.n()) + " sets");
    }
    ElementSet out;
    for (ElementSet s : sets) {
      if (s.empty()) {
        throw DomainError("g applied to an empty set");
      }
    }
    for (TupleOdometer t(sets); t.valid(); t.next()) {
      out.insert(g.mul(t.tuple()));
    }
    return out;
  }

  Element additive_inverse(HyperStructure const& g, Element a) {
    if (a >= g.size()) {
      throw InputError("element out of range");
    }
    return g.inverse(a);
  }

  bool is_invertible(HyperStructure const& g, Element a) {
    if (a >= g.size()) {
      throw InputError("element out of range");
    }
    for (Element b = 0; b < g.size(); ++b) {
      if (g.mul2(a, b) == g.one()) {
        return true;
      }
    }
    return false;
  }

  HyperStructure derive_arity(HyperStructure const& g,
                              std::size_t           target_m,
                              std::size_t           target_n) {
    if (g.m() != 2 || g.n() != 2) {
      throw InputError("derive_arity expects a binary structure");
    }
    if (target_m < 2 || target_n < 2) {
      throw InputError("target arities must be at least 2");
    }
    if (target_m == 2 && target_n == 2) {
      return g;
    }
    std::size_t const size = g.size();
    TableData         d;
    d.name = g.name() + "_m" + std::to_string(target_m) + "n" + std::to_string(target_n);
    d.provenance = "derive(" + g.name() + "," + std::to_string(target_m) + ","
                   + std::to_string(target_n) + ")";
    d.size = size;
    d.m    = target_m;
    d.n    = target_n;
    d.one  = g.one();
    auto const f_count = checked_pow(size, target_m);
    auto const g_count = checked_pow(size, target_n);
    if (!f_count || !g_count || *f_count > kMaxTableEntries
        || *g_count > kMaxTableEntries) {
      throw ResourceError("derived tables too large");
    }
    d.add_table.reserve(*f_count);
    for (TupleOdometer t(size, target_m); t.valid(); t.next()) {
      d.add_table.push_back(add_fold(g, t.tuple()));
    }
    d.mul_table.reserve(*g_count);
    for (TupleOdometer t(size, target_n); t.valid(); t.next()) {
      d.mul_table.push_back(mul_fold(g, t.tuple()));
    }
    try {
      return HyperStructure::create(std::move(d));
    } catch (AxiomError const& e) {
      throw ConstructionError("derived structure fails validation: "
                              + std::string(e.what()));
    }
  }

}  // namespace hyperring
