#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperring/expansions.hpp"
#include "hyperring/hypercore.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/theorems.hpp"

namespace hyperring {

  // Z2, Z3, Z4, Z6, Z8, krasner2, sign3.
  std::vector<std::string> const& builtin_names();

  // InputError for an unknown name.
  HyperStructure builtin_structure(std::string_view name);

  // Structure file:
  //
  //   {"name": "Z2", "m": 2, "n": 2, "size": 2, "zero": 0, "one": 1,
  //    "fTable": [[[0],[1]],[[1],[0]]], "gTable": [[0,0],[0,1]],
  //    "provenance": "builtin"}
  //
  // fTable nests m levels deep (one per argument, lexicographic) and ends in
  // sorted element arrays; gTable nests n levels and ends in single
  // elements. A zero other than 0 is swapped with 0 and a warning added.
  // Throws InputError on malformed input, AxiomError on axiom violations.
  HyperStructure parse_structure(std::string_view text, std::vector<std::string>* warnings = nullptr);

  // Tables only, without running validate_structure.
  TableData parse_tables(std::string_view text, std::vector<std::string>* warnings = nullptr);

  // Canonical text: fixed key order, two-space indent, newline at the end.
  std::string serialize_structure(HyperStructure const& g);

  // Expansion file:
  //
  //   {"label": "custom", "table": [{"ideal": [0], "image": [0,3]}, ...]}
  Expansion parse_expansion_file(std::string_view text, IdealLattice const& lattice);

  // "delta0" | "delta1" | "deltaG" | "deltaM" | "residual:0,3" | "@path".
  Expansion parse_expansion_spec(std::string_view spec,
                                 HyperStructure const& g,
                                 IdealLattice const&   lattice);

  struct CorpusSpec {
    std::vector<std::string>                         seeds;
    std::size_t                                      max_size = 12;
    std::vector<std::pair<std::size_t, std::size_t>> arities;
    // Any of "product", "quotient", "localize", "deriveArity".
    std::vector<std::string>                         operations;
    // Seeds that get arity derivations; empty means all of them.
    std::vector<std::string>                         derive_from;
    std::size_t                                      max_local_host = 8;
  };

  // Builtins, pairwise products up to size 12, quotients and localizations
  // of those (hosts up to size 8), and (3,2), (2,3), (3,3) derivations of
  // Z3, Z4, Z6, krasner2 and sign3. The m = 3 forms of Z4 and Z6 have a
  // second additive identity and are dropped with a warning.
  CorpusSpec default_corpus_spec();

  // JSON form: {"seeds": [...], "maxSize": 12, "arities": [[3,2]],
  // "operations": [...], "deriveFrom": [...], "maxLocalHost": 8}.
  CorpusSpec parse_corpus_spec(std::string_view text);

  // One pass over the seeds: products of seed pairs, then quotients and
  // localizations of seeds and products, then arity derivations. Members
  // are deduplicated by tables and kept in generation order. Constructions
  // that fail are skipped with a warning.
  std::vector<SuiteItem> generate_corpus(CorpusSpec const&          spec,
                                         std::vector<std::string>* warnings = nullptr);

}  // namespace hyperring
