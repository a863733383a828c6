#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperring/element_set.hpp"
#include "hyperring/hypercore.hpp"

namespace hyperring {

  // Whether s contains 0, is closed under f and additive inverses, and
  // absorbs g at every argument position.
  bool is_hyperideal(HyperStructure const& g, ElementSet s);

  // Smallest hyperideal containing seed.
  ElementSet ideal_closure(HyperStructure const& g, ElementSet seed);

  // Elementwise primality of a proper ideal: an n-tuple whose product lies in
  // the ideal while none of its entries do. Lexicographically least.
  std::optional<std::vector<Element>> prime_violation(HyperStructure const& g,
                                                      ElementSet            ideal);

  // Every hyperideal of a structure in canonical order, with primality,
  // maximality and radicals precomputed.
  //
  // Primality is computed elementwise and cross-checked against the
  // ideal-level definition over all n-tuples of ideals; radicals are computed
  // as prime intersections and cross-checked against the power
  // characterization. Any disagreement is kept in findings() rather than
  // resolved.
  class IdealLattice {
   public:
    std::vector<ElementSet> const& ideals() const noexcept {
      return ideals_;
    }
    std::size_t size() const noexcept {
      return ideals_.size();
    }
    ElementSet operator[](std::size_t i) const {
      return ideals_[i];
    }

    std::optional<std::size_t> index_of(ElementSet s) const;
    bool                       contains(ElementSet s) const {
      return index_of(s).has_value();
    }
    // Index of s; throws DomainError if s is not an ideal.
    std::size_t require(ElementSet s) const;

    bool is_prime(std::size_t i) const {
      return prime_[i];
    }
    bool is_maximal(std::size_t i) const {
      return maximal_[i];
    }
    ElementSet radical(std::size_t i) const {
      return radical_[i];
    }
    ElementSet carrier() const noexcept {
      return ideals_.back();
    }

    std::vector<ElementSet> primes() const;
    std::vector<ElementSet> maximals() const;
    // Proper ideals, canonical order.
    std::vector<ElementSet> proper() const;

    std::vector<std::string> const& findings() const noexcept {
      return findings_;
    }

   private:
    friend IdealLattice enumerate_hyperideals(HyperStructure const& g);

    std::vector<ElementSet>  ideals_;
    std::vector<bool>        prime_;
    std::vector<bool>        maximal_;
    std::vector<ElementSet>  radical_;
    std::vector<std::string> findings_;
  };

  IdealLattice enumerate_hyperideals(HyperStructure const& g);

  // <a> = g(G, a, 1, ..., 1). Throws ConstructionError if the set is not a
  // hyperideal of this structure.
  ElementSet principal_ideal(HyperStructure const& g, Element a);

  // {g_(l)(x_1, ..., x_k) | x_i in sets[i]} for k = l(n-1)+1. Raw value set,
  // not closed to an ideal.
  ElementSet ideal_product(HyperStructure const& g, std::span<ElementSet const> sets);

  // E_R(A) = {x | g(x, r, 1, ..., 1) in A for every r in R}.
  ElementSet residual_set(HyperStructure const& g, ElementSet ideal, ElementSet r);

  // Intersection of the prime ideals containing the ideal; the carrier if
  // there are none.
  ElementSet radical(IdealLattice const& lattice, ElementSet ideal);

  // {x | some power of x lies in the ideal}, with powers taken as
  // g(x^(r), 1^(n-r)) for r <= n and g_(l)(x^(l(n-1)+1)).
  ElementSet radical_by_powers(HyperStructure const& g, ElementSet ideal);

  ElementSet              jacobson_radical(IdealLattice const& lattice);
  ElementSet              prime_radical(IdealLattice const& lattice);
  std::vector<ElementSet> maximal_ideals(IdealLattice const& lattice);

  // Ideal-level primality: g(A_1, ..., A_n) within the ideal forces some
  // A_i inside it, over all n-tuples of lattice ideals.
  bool is_prime_idealwise(HyperStructure const& g,
                          IdealLattice const&   lattice,
                          ElementSet            ideal);

}  // namespace hyperring
