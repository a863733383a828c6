#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hyperring {

  enum class Outcome { pass, counterexample, vacuous };

  std::string to_string(Outcome outcome);

  // One instance of a universally quantified statement, as named parameter
  // bindings ("A" -> "{0,2,4}", "x" -> "(2,3)", ...).
  struct Witness {
    std::string                                      description;
    std::vector<std::pair<std::string, std::string>> bindings;

    std::string const* find(std::string const& key) const {
      for (auto const& [k, v] : bindings) {
        if (k == key) {
          return &v;
        }
      }
      return nullptr;
    }
  };

  // Outcome of one statement on one structure. vacuous exactly when no
  // instance satisfied the hypothesis.
  struct TheoremResult {
    std::string              theorem_id;
    std::string              structure;
    std::string              expansion;
    Outcome                  outcome = Outcome::vacuous;
    std::vector<Witness>     witnesses;
    std::size_t              hypothesis_count = 0;
    std::vector<std::string> notes;

    // Sets outcome from hypothesis_count and witnesses.
    void settle();
  };

}  // namespace hyperring
