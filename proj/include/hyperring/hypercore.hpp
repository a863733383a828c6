#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyperring/element_set.hpp"
#include "hyperring/errors.hpp"

namespace hyperring {

  // Raw operation tables of a candidate structure, before validation.
  //
  // add_table holds one non-empty ElementSet per m-tuple and mul_table one
  // element per n-tuple; both are indexed by lexicographic tuple rank (see
  // tuple_rank). Element 0 is the additive identity.
  struct TableData {
    std::string             name;
    std::size_t             size = 0;
    std::size_t             m    = 2;
    std::size_t             n    = 2;
    Element                 one  = 0;
    std::vector<ElementSet> add_table;
    std::vector<Element>    mul_table;
    std::string             provenance;

    bool operator==(TableData const&) const = default;
  };

  // One failed axiom instance.
  //
  // Witness layouts, by axiom id (positions i, j are 1-based):
  //   add_commutative, mul_commutative   the offending tuple
  //   identity                           (a) with f(a, 0, ..., 0) != {a}
  //   identity_unique                    (e) a second element acting as identity
  //   inverse                            (a, b_1, ..., b_k) all b with 0 in f(a, b, 0, ...)
  //   reversibility                      (i, a, a_1, ..., a_m)
  //   add_associative, mul_associative   (1, j, a_1, ..., a_{2k-1})
  //   distributive                       (i, a_1..a_{i-1}, a_{i+1}..a_n, b_1..b_m)
  //   zero_absorbing                     the n-tuple containing 0
  //   scalar_identity                    (a) with g(a, 1, ..., 1) != a
  struct Violation {
    std::string          axiom;
    std::vector<Element> witness;
    std::string          explanation;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept {
      return violations.empty();
    }
  };

  // Thrown when a structure is built from tables that break an axiom.
  class AxiomError : public Error {
   public:
    explicit AxiomError(ValidationReport report);

    ValidationReport const& report() const noexcept {
      return report_;
    }

   private:
    ValidationReport report_;
  };

  // Exhaustively checks every Krasner (m,n)-hyperring axiom, plus
  // commutativity and the scalar identity. Throws InputError if the tables
  // are malformed (wrong length, index out of range, empty value).
  //
  // Violations are reported in a fixed order (the order of the witness
  // layout list above), each axiom contributing its lexicographically least
  // witness only.
  ValidationReport validate_structure(TableData const& candidate);

  // A validated commutative Krasner (m,n)-hyperring with scalar identity.
  // Immutable; the only way to obtain one is through create(), which runs
  // validate_structure.
  class HyperStructure {
   public:
    static HyperStructure create(TableData data);

    std::string const& name() const noexcept {
      return data_.name;
    }
    std::string const& provenance() const noexcept {
      return data_.provenance;
    }
    std::size_t size() const noexcept {
      return data_.size;
    }
    std::size_t m() const noexcept {
      return data_.m;
    }
    std::size_t n() const noexcept {
      return data_.n;
    }
    static constexpr Element zero() noexcept {
      return 0;
    }
    Element one() const noexcept {
      return data_.one;
    }
    ElementSet carrier() const noexcept {
      return ElementSet::full(data_.size);
    }
    TableData const& tables() const noexcept {
      return data_;
    }

    // f on an m-tuple.
    ElementSet add(std::span<Element const> xs) const;
    // g on an n-tuple.
    Element mul(std::span<Element const> xs) const;

    // g(a, b, 1, ..., 1).
    Element mul2(Element a, Element b) const noexcept;
    // Product of any non-empty sequence, folded through mul2.
    Element mul_all(std::span<Element const> xs) const;

    Element inverse(Element a) const noexcept {
      return inverses_[a];
    }

    // Copy with a new display name / provenance; tables untouched.
    HyperStructure renamed(std::string name, std::string provenance) const;

    bool operator==(HyperStructure const& other) const {
      return data_ == other.data_;
    }

   private:
    explicit HyperStructure(TableData data, std::vector<Element> inverses);

    TableData            data_;
    std::vector<Element> inverses_;
    // g(a, b, 1, ..., 1) for all a, b.
    std::vector<Element> mul2_;
  };

  // Iterated hyperaddition f_(l) on a sequence of length l(m-1)+1, extended
  // to sets at each stage. Throws ArityError on other lengths.
  ElementSet add_fold(HyperStructure const& g, std::span<Element const> xs);

  // Iterated product g_(l) on a sequence of length l(n-1)+1.
  Element mul_fold(HyperStructure const& g, std::span<Element const> xs);

  // f applied to m non-empty sets: union over all choice tuples.
  ElementSet add_sets(HyperStructure const& g, std::span<ElementSet const> sets);

  // g applied to n non-empty sets.
  ElementSet mul_sets(HyperStructure const& g, std::span<ElementSet const> sets);

  // The unique b with 0 in f(a, b, 0, ..., 0).
  Element additive_inverse(HyperStructure const& g, Element a);

  // Whether g(a, b, 1, ..., 1) = 1 for some b.
  bool is_invertible(HyperStructure const& g, Element a);

  // Re-expresses a binary structure with arities (target_m, target_n) using
  // the iterated operations. Throws ConstructionError if the result does not
  // validate.
  HyperStructure derive_arity(HyperStructure const& g,
                              std::size_t           target_m,
                              std::size_t           target_n);

}  // namespace hyperring
