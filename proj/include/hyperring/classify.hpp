#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperring/element_set.hpp"
#include "hyperring/expansions.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/ideals.hpp"

namespace hyperring {

  // A concrete failure of a defining formula. For element-level predicates
  // the tuple holds elements and position (1-based) names the coordinate i
  // whose clause fails. For the strongly weakly predicates the tuple holds
  // lattice indices; for maximality it holds the index of a strictly larger
  // proper ideal.
  struct ClassifierWitness {
    std::vector<Element>       tuple;
    std::optional<std::size_t> position;

    bool operator==(ClassifierWitness const&) const = default;
  };

  // Tuple budget for the absorbing scans: 10^7, or HYPERRING_BUDGET when set
  // to a positive integer.
  std::size_t default_budget();

  // Each find_* returns the lexicographically least violation (tuple first,
  // then position) or nullopt when the property holds. Every predicate on a
  // proper ideal throws DomainError when handed the whole carrier.

  std::optional<ClassifierWitness> find_prime_violation(HyperStructure const& g, ElementSet a);
  // Elementwise form; throws std::logic_error if it disagrees with the
  // ideal-level form on this lattice.
  bool is_prime(HyperStructure const& g, IdealLattice const& lattice, ElementSet a);

  std::optional<ClassifierWitness> find_primary_violation(HyperStructure const& g,
                                                          IdealLattice const&   lattice,
                                                          ElementSet            a);
  bool is_primary(HyperStructure const& g, IdealLattice const& lattice, ElementSet a);

  bool is_hyperintegral_domain(HyperStructure const& g);
  bool is_local(IdealLattice const& lattice);

  // g(x) in A and x_i outside the avoided set force g(x with x_i -> 1) in A.
  std::optional<ClassifierWitness> find_N_violation(HyperStructure const& g,
                                                    IdealLattice const&   lattice,
                                                    ElementSet            a);
  bool is_N_hyperideal(HyperStructure const& g, IdealLattice const& lattice, ElementSet a);
  std::optional<ClassifierWitness> find_J_violation(HyperStructure const& g,
                                                    IdealLattice const&   lattice,
                                                    ElementSet            a);
  bool is_J_hyperideal(HyperStructure const& g, IdealLattice const& lattice, ElementSet a);

  // g(x) in A and g(x with x_i -> 1) outside delta(0) force x_i in A.
  std::optional<ClassifierWitness> find_delta0_violation(HyperStructure const& g,
                                                         ElementSet            delta_zero,
                                                         ElementSet            a);
  bool is_delta0_hyperideal(HyperStructure const& g, ElementSet delta_zero, ElementSet a);
  bool is_delta0_hyperideal(HyperStructure const& g, Expansion const& delta, ElementSet a);

  // g(x) in A forces x_i in A or g(x with x_i -> 1) in delta(A).
  std::optional<ClassifierWitness> find_delta_primary_violation(HyperStructure const& g,
                                                                Expansion const&      delta,
                                                                ElementSet            a);
  bool is_delta_primary(HyperStructure const& g, Expansion const& delta, ElementSet a);

  // Witness: (x) for an element of G - delta(0) missing from S, or
  // (x_1, ..., x_{n-1}, x) for a failed closure instance.
  std::optional<ClassifierWitness> find_delta0_multiplicative_violation(HyperStructure const& g,
                                                                        ElementSet delta_zero,
                                                                        ElementSet s);
  bool is_delta0_multiplicative_subset(HyperStructure const& g,
                                       ElementSet            delta_zero,
                                       ElementSet            s);
  bool is_delta0_multiplicative_subset(HyperStructure const& g,
                                       Expansion const&      delta,
                                       ElementSet            s);

  // Index subsets of size (s-1)(n-1)+1 among s(n-1)+1 positions other than
  // the leading one, lexicographic.
  std::vector<std::vector<std::size_t>> absorbing_subsets(std::size_t s, std::size_t n);

  // Tuples of length s(n-1)+1. Throws ResourceError when size^length
  // exceeds the budget.
  std::optional<ClassifierWitness> find_sn_absorbing_violation(HyperStructure const& g,
                                                               ElementSet            delta_zero,
                                                               ElementSet            a,
                                                               std::size_t           s,
                                                               std::size_t budget = default_budget());
  bool is_sn_absorbing_delta0(HyperStructure const& g,
                              ElementSet            delta_zero,
                              ElementSet            a,
                              std::size_t           s,
                              std::size_t           budget = default_budget());
  bool is_sn_absorbing_delta0(HyperStructure const& g,
                              Expansion const&      delta,
                              ElementSet            a,
                              std::size_t           s,
                              std::size_t           budget = default_budget());

  std::optional<ClassifierWitness> find_weakly_sn_absorbing_violation(
      HyperStructure const& g,
      ElementSet            delta_zero,
      ElementSet            a,
      std::size_t           s,
      std::size_t           budget = default_budget());
  bool is_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                     ElementSet            delta_zero,
                                     ElementSet            a,
                                     std::size_t           s,
                                     std::size_t           budget = default_budget());
  bool is_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                     Expansion const&      delta,
                                     ElementSet            a,
                                     std::size_t           s,
                                     std::size_t           budget = default_budget());

  // Tuples of lattice ideals; the witness holds lattice indices.
  std::optional<ClassifierWitness> find_strongly_weakly_violation(
      HyperStructure const& g,
      IdealLattice const&   lattice,
      ElementSet            delta_zero,
      ElementSet            a,
      std::size_t           s,
      std::size_t           budget = default_budget());
  bool is_strongly_weakly_sn_absorbing_delta0(HyperStructure const& g,
                                              IdealLattice const&   lattice,
                                              Expansion const&      delta,
                                              ElementSet            a,
                                              std::size_t           s,
                                              std::size_t budget = default_budget());

  // Every (s,n)-delta(0)-zero of A, lexicographic.
  std::vector<std::vector<Element>> find_sn_delta0_zeros(HyperStructure const& g,
                                                         ElementSet            delta_zero,
                                                         ElementSet            a,
                                                         std::size_t           s,
                                                         std::size_t budget = default_budget());
  std::vector<std::vector<Element>> find_sn_delta0_zeros(HyperStructure const& g,
                                                         Expansion const&      delta,
                                                         ElementSet            a,
                                                         std::size_t           s,
                                                         std::size_t budget = default_budget());

  struct ClassificationRecord {
    ElementSet                                ideal;
    std::vector<std::pair<std::string, bool>> flags;
    std::map<std::string, ClassifierWitness>  witnesses;

    // Value of a flag; std::out_of_range if absent.
    bool flag(std::string const& name) const;
  };

  struct ClassifyOptions {
    std::vector<std::size_t> s_values = {1, 2};
    std::size_t              budget   = default_budget();
  };

  // One record per proper ideal in lattice order. Flags: prime, primary,
  // maximal, N, J, deltaPrimary, deltaZero, then snAbsorbing(s),
  // weaklySnAbsorbing(s), stronglyWeaklySnAbsorbing(s) per s. A scan over
  // budget leaves its flag out and records the reason in notes.
  std::vector<ClassificationRecord> classify_all(HyperStructure const&     g,
                                                 IdealLattice const&       lattice,
                                                 Expansion const&          delta,
                                                 ClassifyOptions const&    options = {},
                                                 std::vector<std::string>* notes   = nullptr);

}  // namespace hyperring
