#pragma once

// Single-entry table corruptions, one per axiom family, and an independent
// replay of validator witnesses against the raw tables.

#include <string>
#include <vector>

#include "hyperring/workbench.hpp"
#include "oracles.hpp"

namespace axioms {

  using hyperring::Element;
  using hyperring::ElementSet;
  using oracle::has;
  using oracle::Mask;
  using oracle::Raw;

  struct Corruption {
    std::string          axiom;
    std::string          base;
    bool                 in_f;
    std::vector<Element> tuple;
    Mask                 f_value = 0;
    Element              g_value = 0;
  };

  inline std::vector<Corruption> const& corruptions() {
    static std::vector<Corruption> const list = {
        {"add_commutative", "krasner2", true, {0, 1}, 0b11, 0},
        {"mul_commutative", "Z3", false, {1, 2}, 0, 0},
        {"identity", "krasner2", true, {1, 0}, 0b11, 0},
        {"inverse", "krasner2", true, {1, 1}, 0b10, 0},
        {"reversibility", "Z3", true, {1, 1}, 0b010, 0},
        {"add_associative", "Z4", true, {2, 2}, 0b0101, 0},
        {"mul_associative", "Z4", false, {2, 2}, 0, 1},
        {"distributive", "Z3", false, {2, 2}, 0, 0},
        {"zero_absorbing", "krasner2", false, {0, 0}, 0, 1},
        {"scalar_identity", "krasner2", false, {1, 1}, 0, 0},
    };
    return list;
  }

  inline hyperring::TableData apply(Corruption const& c) {
    hyperring::TableData d = hyperring::builtin_structure(c.base).tables();
    std::size_t          r = 0;
    for (Element x : c.tuple) {
      r = r * d.size + x;
    }
    if (c.in_f) {
      d.add_table[r] = ElementSet::from_mask(c.f_value);
    } else {
      d.mul_table[r] = c.g_value;
    }
    return d;
  }

  inline std::vector<Element> sorted(std::vector<Element> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
  }

  // f with one argument ranging over a set.
  inline Mask f_over(Raw const& t, std::vector<Element> args, std::size_t pos, Mask values) {
    Mask out = 0;
    for (Element c : oracle::members(values)) {
      args[pos] = c;
      out |= t.f(args);
    }
    return out;
  }

  // Whether the witness really exhibits a failure of the named axiom.
  inline bool witness_holds(Raw const& t, std::string const& axiom, std::vector<Element> const& w) {
    std::size_t const m = t.m;
    std::size_t const n = t.n;
    if (axiom == "add_commutative") {
      return w.size() == m && t.f(w) != t.f(sorted(w));
    }
    if (axiom == "mul_commutative") {
      return w.size() == n && t.g(w) != t.g(sorted(w));
    }
    if (axiom == "identity") {
      std::vector<Element> xs(m, 0);
      xs[0] = w.at(0);
      return w.size() == 1 && t.f(xs) != (Mask{1} << w[0]);
    }
    if (axiom == "inverse") {
      std::vector<Element> found;
      for (Element b = 0; b < t.size; ++b) {
        std::vector<Element> xs(m, 0);
        xs[0] = w.at(0);
        xs[1] = b;
        if (has(t.f(xs), 0)) {
          found.push_back(b);
        }
      }
      return found.size() != 1 && std::vector<Element>(w.begin() + 1, w.end()) == found;
    }
    if (axiom == "reversibility") {
      if (w.size() != m + 2) {
        return false;
      }
      std::size_t const    i = w[0] - 1;
      Element const        a = w[1];
      std::vector<Element> xs(w.begin() + 2, w.end());
      if (!has(t.f(xs), a)) {
        return false;
      }
      std::vector<Element> args{a};
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) {
          args.push_back(oracle::inverse(t, xs[j]));
        }
      }
      return !has(t.f(args), xs[i]);
    }
    if (axiom == "add_associative" || axiom == "mul_associative") {
      bool const        add   = axiom == "add_associative";
      std::size_t const arity = add ? m : n;
      if (w.size() != 2 * arity + 1 || w[0] != 1) {
        return false;
      }
      std::vector<Element> xs(w.begin() + 2, w.end());
      auto bracket = [&](std::size_t p) -> Mask {
        std::vector<Element> inner(xs.begin() + static_cast<long>(p), xs.begin() + static_cast<long>(p + arity));
        std::vector<Element> outer(xs.begin(), xs.begin() + static_cast<long>(p));
        outer.push_back(0);
        outer.insert(outer.end(), xs.begin() + static_cast<long>(p + arity), xs.end());
        if (add) {
          return f_over(t, outer, p, t.f(inner));
        }
        outer[p] = t.g(inner);
        return Mask{1} << t.g(outer);
      };
      return bracket(0) != bracket(w[1] - 1);
    }
    if (axiom == "distributive") {
      if (w.size() != n + m) {
        return false;
      }
      std::size_t const    i = w[0] - 1;
      std::vector<Element> args(w.begin() + 1, w.begin() + static_cast<long>(n));
      args.insert(args.begin() + static_cast<long>(i), 0);
      std::vector<Element> bs(w.begin() + static_cast<long>(n), w.end());
      Mask                 lhs = 0;
      for (Element c : oracle::members(t.f(bs))) {
        args[i] = c;
        lhs |= Mask{1} << t.g(args);
      }
      std::vector<Element> terms;
      for (Element b : bs) {
        args[i] = b;
        terms.push_back(t.g(args));
      }
      return lhs != t.f(terms);
    }
    if (axiom == "zero_absorbing") {
      return w.size() == n && std::find(w.begin(), w.end(), Element{0}) != w.end() && t.g(w) != 0;
    }
    if (axiom == "scalar_identity") {
      std::vector<Element> xs(n, t.one);
      xs[0] = w.at(0);
      return w.size() == 1 && t.g(xs) != w[0];
    }
    return false;
  }

}  // namespace axioms
