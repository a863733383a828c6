#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hyperring/element_set.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/result.hpp"

namespace hyperring {

  class Expansion;
  class IdealLattice;

  using StructurePtr = std::shared_ptr<HyperStructure const>;

  enum class HomKind { projection, embedding, general };

  // Carrier map between two structures. Constructions only hand out maps
  // that pass validate_homomorphism.
  struct HomMap {
    StructurePtr         source;
    StructurePtr         target;
    std::vector<Element> map;
    HomKind              kind = HomKind::general;

    Element operator()(Element a) const {
      return map[a];
    }
    bool       injective() const;
    bool       surjective() const;
    ElementSet kernel() const;
  };

  // Identity map on a structure.
  HomMap identity_map(StructurePtr g);

  // f and g preserved setwise, 1 mapped to 1. Witness layouts: the offending
  // m-tuple (add_preserved), n-tuple (mul_preserved), or (1) (one_preserved).
  ValidationReport validate_homomorphism(HomMap const& psi);

  struct Quotient {
    StructurePtr            structure;
    HomMap                  projection;
    ElementSet              by;
    // cosets[i] is element i of the quotient; ordered by least member.
    std::vector<ElementSet> cosets;
  };

  // G/A with cosets f(a, A, 0, ..., 0) as elements. Throws ConstructionError
  // if the cosets do not partition G or the induced operations depend on the
  // chosen representatives.
  Quotient quotient(StructurePtr g, ElementSet ideal);

  // Componentwise structure on index pairs (a, b) -> a * |G2| + b.
  HyperStructure product(HyperStructure const& g1, HyperStructure const& g2);

  // Projection of G1 x G2 onto its first (second) factor; second_size is
  // |G2| either way.
  HomMap product_projection(StructurePtr product_structure,
                            StructurePtr factor,
                            std::size_t  second_size,
                            bool         first);

  struct FractionClass {
    Element numerator;
    Element denominator;

    auto operator<=>(FractionClass const&) const = default;
  };

  struct Localization {
    StructurePtr               structure;
    HomMap                     canonical;
    ElementSet                 by;
    // Least (numerator, denominator) pair of each class, by element index.
    std::vector<FractionClass> representatives;
    // class_of[a * |G| + s] for s in S; unused slots hold 0.
    std::vector<Element>       class_of;

    Element fraction(Element a, Element s, std::size_t host_size) const {
      return class_of[a * host_size + s];
    }
  };

  // Whether 1 is in s and s is closed under g.
  bool is_multiplicative_subset(HyperStructure const& g, ElementSet s);

  // S^{-1}G with a/s ~ b/t iff u·a·t = u·b·s for some u in S. Throws
  // InputError if S is not multiplicative and ConstructionError if the
  // induced operations are ill-defined or the result fails validation.
  Localization localize(StructurePtr g, ElementSet s);

  // S^{-1}A as a set of classes.
  ElementSet extend_to_fractions(Localization const& loc,
                                 std::size_t         host_size,
                                 ElementSet          ideal);

  // delta(psi^{-1}(A2)) = psi^{-1}(gamma(A2)) for every ideal A2 of the
  // target.
  bool is_delta_gamma_homomorphism(HomMap const&    psi,
                                   Expansion const& delta,
                                   Expansion const& gamma);

  // Pointwise image. When psi is surjective and its kernel lies in the ideal
  // the image must be a hyperideal; a failure throws ConstructionError.
  ElementSet ideal_image(HomMap const& psi, ElementSet ideal);

  // Pointwise preimage; always a hyperideal of the source for an ideal of
  // the target (ConstructionError otherwise).
  ElementSet ideal_preimage(HomMap const& psi, ElementSet ideal);

  // For an ideal that is strongly weakly (s,n)-absorbing delta(0) but not
  // (s,n)-absorbing delta(0): the (s(n-1)+1)-fold product of the ideal is
  // {0}, and every ideal M with g(A, 1, ..., 1, M) = M is {0}. Vacuous when
  // the hypothesis fails.
  TheoremResult nakayama_check(HyperStructure const& g,
                               IdealLattice const&   lattice,
                               Expansion const&      delta,
                               ElementSet            ideal,
                               std::size_t           s);

}  // namespace hyperring
