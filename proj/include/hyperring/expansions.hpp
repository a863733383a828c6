#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperring/constructions.hpp"
#include "hyperring/element_set.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

  // A hyperideal expansion materialized as a total table over an ideal
  // lattice: image()[i] is the image of domain()[i].
  //
  // The constructor does not validate; every factory below does, and throws
  // ConstructionError when the table is not extensive and monotone.
  class Expansion {
   public:
    Expansion(std::string             label,
              std::vector<ElementSet> domain,
              std::vector<ElementSet> image);

    std::string const& label() const noexcept {
      return label_;
    }
    std::vector<ElementSet> const& domain() const noexcept {
      return domain_;
    }
    std::vector<ElementSet> const& image() const noexcept {
      return image_;
    }

    // Image of an ideal of the domain; DomainError otherwise.
    ElementSet operator()(ElementSet ideal) const;

    // delta(0), the image of the least ideal.
    ElementSet zero_image() const noexcept {
      return image_.front();
    }

    bool same_table(Expansion const& other) const noexcept {
      return domain_ == other.domain_ && image_ == other.image_;
    }

    Expansion relabeled(std::string label) const {
      return Expansion(std::move(label), domain_, image_);
    }

   private:
    std::string             label_;
    std::vector<ElementSet> domain_;
    std::vector<ElementSet> image_;
  };

  // Images must be ideals of the domain (witness (i)), extensive (witness
  // (i)) and monotone (witness (i, j) with domain[i] within domain[j]).
  // Witnesses are domain indices.
  ValidationReport validate_expansion(Expansion const& candidate);

  // "delta0" (identity), "delta1" (radical), "deltaG" (constant carrier),
  // "deltaM" (intersection of the maximal ideals above; the carrier when
  // there are none). InputError on any other name.
  Expansion builtin_expansion(HyperStructure const& g,
                              IdealLattice const&   lattice,
                              std::string_view      name);

  // A -> E_B(A) = {x | g(x, B, 1, ..., 1) within A}.
  Expansion residual_expansion(HyperStructure const& g,
                               IdealLattice const&   lattice,
                               ElementSet            b);

  // Table given as (ideal, image) pairs covering the whole lattice.
  Expansion custom_expansion(IdealLattice const&                                   lattice,
                             std::vector<std::pair<ElementSet, ElementSet>> const& pairs,
                             std::string                                           label);

  // A -> outer(inner(A)).
  Expansion compose_expansions(Expansion const& outer, Expansion const& inner);

  // delta_q(B/A) = delta(B)/A on the quotient lattice.
  Expansion quotient_expansion(Quotient const&     q,
                               Expansion const&    delta,
                               IdealLattice const& quotient_lattice);

  // delta_S(S^{-1}A) = S^{-1}(delta(A)). Throws ConstructionError when two
  // ideals with the same extension are sent to different extensions, or when
  // some ideal of the localization is not an extension.
  Expansion localize_expansion(Localization const& loc,
                               std::size_t         host_size,
                               Expansion const&    delta,
                               IdealLattice const& localized_lattice);

  // delta0, delta1, deltaG, deltaM and residual(B) for every proper non-zero
  // ideal B, dropping tables already present.
  std::vector<Expansion> standard_expansions(HyperStructure const& g,
                                             IdealLattice const&   lattice);

}  // namespace hyperring
