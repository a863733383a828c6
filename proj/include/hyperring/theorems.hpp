#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperring/constructions.hpp"
#include "hyperring/expansions.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/result.hpp"

namespace hyperring {

  // Registered statement ids, T1 ... T25, in order.
  std::vector<std::string> const& theorem_ids();

  // One-line statement of a registered id; InputError for unknown ids.
  std::string const& theorem_summary(std::string_view id);

  // A structure together with what the statements quantify over. Product
  // items keep their factors so the projection statement can be checked.
  struct SuiteItem {
    StructurePtr                                       structure;
    std::optional<std::pair<StructurePtr, StructurePtr>> factors;
    // Expansions to run; empty means standard_expansions.
    std::vector<Expansion> expansions;
  };

  struct TheoremConfig {
    std::vector<std::size_t> s_values       = {1, 2};
    // Hosts above this size are not localized.
    std::size_t              max_local_host = 8;
  };

  // Per-structure state shared by all statements: the ideal lattice, the
  // standard expansion family, and lazily built quotients, localizations
  // and factor contexts. Not thread-safe.
  class TheoremContext {
   public:
    explicit TheoremContext(SuiteItem item, TheoremConfig config = {});
    ~TheoremContext();
    TheoremContext(TheoremContext&&) noexcept;

    HyperStructure const& structure() const noexcept {
      return *item_.structure;
    }
    StructurePtr const& structure_ptr() const noexcept {
      return item_.structure;
    }
    IdealLattice const& lattice() const noexcept {
      return lattice_;
    }
    // Standard expansions of this structure (the gamma range of the
    // statements that quantify over a second expansion).
    std::vector<Expansion> const& family() const noexcept {
      return family_;
    }
    // Expansions the suite runs on this structure.
    std::vector<Expansion> const& expansions() const noexcept {
      return item_.expansions.empty() ? family_ : item_.expansions;
    }
    TheoremConfig const& config() const noexcept {
      return config_;
    }
    std::optional<std::pair<StructurePtr, StructurePtr>> const& factors() const noexcept {
      return item_.factors;
    }

    struct Derived {
      StructurePtr           structure;
      HomMap                 map;
      IdealLattice           lattice;
      std::vector<Expansion> family;
    };

    // G/A for the ideal at lattice index i; nullptr when the construction
    // failed (the reason is kept in notes()).
    Derived const* quotient_at(std::size_t i);
    Quotient const* quotient_data(std::size_t i);

    // Multiplicative subsets of the carrier, canonical order; empty when the
    // host is above max_local_host.
    std::vector<ElementSet> const& multiplicative_subsets();
    Derived const*               localization_at(ElementSet s);
    Localization const*          localization_data(ElementSet s);

    TheoremContext* factor_context(bool first);

    std::vector<std::string> const& notes() const noexcept {
      return notes_;
    }

   private:
    struct Caches;

    SuiteItem                 item_;
    TheoremConfig             config_;
    IdealLattice              lattice_;
    std::vector<Expansion>    family_;
    std::vector<std::string>  notes_;
    std::unique_ptr<Caches>   caches_;
  };

  // Evaluates one statement on one structure with delta as the primary
  // expansion. InputError for an unknown id; ResourceError when a scan
  // exceeds its budget.
  TheoremResult run_theorem(std::string_view id, TheoremContext& ctx, Expansion const& delta);

  struct TheoremSummary {
    std::string id;
    std::size_t pass             = 0;
    std::size_t counterexample   = 0;
    std::size_t vacuous          = 0;
    std::size_t hypothesis_total = 0;
  };

  struct SuiteReport {
    // Results grouped by id in registry order, each group sorted by
    // (structure, expansion).
    std::vector<std::pair<std::string, std::vector<TheoremResult>>> per_theorem;
    std::vector<TheoremSummary>                                      summary;
    // Items or statements that raised instead of producing a result.
    std::vector<std::string>                                         errors;

    std::size_t counterexamples() const;
  };

  struct SuiteConfig {
    // Empty means every registered id.
    std::vector<std::string> only;
    TheoremConfig            theorem;
  };

  SuiteReport run_suite(std::vector<SuiteItem> const& corpus, SuiteConfig const& config = {});

  // Canonical JSON (fixed key order, two-space indent, trailing newline).
  std::string to_json(SuiteReport const& report);

}  // namespace hyperring
