#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hyperring/element_set.hpp"

namespace hyperring {

  // base^exponent, or nullopt on overflow of std::size_t.
  constexpr std::optional<std::size_t> checked_pow(std::size_t base,
                                                   std::size_t exponent) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
        return std::nullopt;
      }
      result *= base;
    }
    return result;
  }

  // Lexicographic rank of a tuple over a carrier of the given size; the
  // first coordinate is the most significant digit.
  inline std::size_t tuple_rank(std::span<Element const> tuple,
                                std::size_t              size) {
    std::size_t rank = 0;
    for (Element e : tuple) {
      rank = rank * size + e;
    }
    return rank;
  }

  inline std::vector<Element> tuple_unrank(std::size_t rank,
                                           std::size_t size,
                                           std::size_t length) {
    std::vector<Element> tuple(length);
    for (std::size_t i = length; i-- > 0;) {
      tuple[i] = static_cast<Element>(rank % size);
      rank /= size;
    }
    return tuple;
  }

  // Odometer over all tuples of a fixed length drawn from per-position
  // candidate lists, in lexicographic order of candidate positions.
  //
  //   for (TupleOdometer t(size, 3); t.valid(); t.next()) { use(t.tuple()); }
  class TupleOdometer {
   public:
    // All tuples over {0, ..., size-1}.
    TupleOdometer(std::size_t size, std::size_t length)
        : choices_(length, ElementSet::full(size).elements()),
          digits_(length, 0),
          tuple_(length, 0),
          valid_(size > 0 || length == 0) {}

    // Tuples whose i-th coordinate ranges over sets[i] (ascending).
    explicit TupleOdometer(std::span<ElementSet const> sets)
        : digits_(sets.size(), 0), tuple_(sets.size(), 0), valid_(true) {
      choices_.reserve(sets.size());
      for (ElementSet s : sets) {
        choices_.push_back(s.elements());
        if (choices_.back().empty()) {
          valid_ = false;
        }
      }
      if (valid_) {
        for (std::size_t i = 0; i < tuple_.size(); ++i) {
          tuple_[i] = choices_[i][0];
        }
      }
    }

    bool valid() const noexcept {
      return valid_;
    }

    std::vector<Element> const& tuple() const noexcept {
      return tuple_;
    }

    void next() noexcept {
      for (std::size_t i = tuple_.size(); i-- > 0;) {
        if (++digits_[i] < choices_[i].size()) {
          tuple_[i] = choices_[i][digits_[i]];
          return;
        }
        digits_[i] = 0;
        tuple_[i]  = choices_[i][0];
      }
      valid_ = false;
    }

   private:
    std::vector<std::vector<Element>> choices_;
    std::vector<std::size_t>          digits_;
    std::vector<Element>              tuple_;
    bool                              valid_;
  };

  // All k-element subsets of {0, ..., n-1} as ascending index lists, in
  // lexicographic order.
  inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n,
                                                             std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
      return out;
    }
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
      pick[i] = i;
    }
    while (true) {
      out.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
    return out;
  }

  // Whether length = l(arity-1)+1 for some l >= 0.
  constexpr bool is_fold_length(std::size_t length, std::size_t arity) {
    return length >= 1 && (length - 1) % (arity - 1) == 0;
  }

}  // namespace hyperring
