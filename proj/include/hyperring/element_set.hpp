#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperring {

  // Index into a finite carrier. Index 0 is always the additive identity.
  using Element = std::uint32_t;

  inline constexpr std::size_t kMaxCarrier = 64;

  // Subset of a carrier of at most 64 elements, stored as a bit mask with
  // bit i standing for element i.
  class ElementSet {
   public:
    using Mask = std::uint64_t;

    constexpr ElementSet() noexcept = default;

    static constexpr ElementSet from_mask(Mask mask) noexcept {
      ElementSet s;
      s.mask_ = mask;
      return s;
    }

    static constexpr ElementSet singleton(Element e) noexcept {
      return from_mask(Mask{1} << e);
    }

    static constexpr ElementSet full(std::size_t size) noexcept {
      return from_mask(size >= 64 ? ~Mask{0} : (Mask{1} << size) - 1);
    }

    static ElementSet of(std::initializer_list<Element> elements) noexcept {
      ElementSet s;
      for (Element e : elements) {
        s.insert(e);
      }
      return s;
    }

    static ElementSet of(std::vector<Element> const& elements) noexcept {
      ElementSet s;
      for (Element e : elements) {
        s.insert(e);
      }
      return s;
    }

    constexpr Mask mask() const noexcept {
      return mask_;
    }

    constexpr bool contains(Element e) const noexcept {
      return e < 64 && ((mask_ >> e) & 1U) != 0;
    }

    constexpr void insert(Element e) noexcept {
      mask_ |= Mask{1} << e;
    }

    constexpr void erase(Element e) noexcept {
      mask_ &= ~(Mask{1} << e);
    }

    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(mask_));
    }

    constexpr bool empty() const noexcept {
      return mask_ == 0;
    }

    constexpr bool subset_of(ElementSet other) const noexcept {
      return (mask_ & ~other.mask_) == 0;
    }

    constexpr bool intersects(ElementSet other) const noexcept {
      return (mask_ & other.mask_) != 0;
    }

    // Least member; undefined on the empty set.
    constexpr Element min() const noexcept {
      return static_cast<Element>(std::countr_zero(mask_));
    }

    constexpr ElementSet operator|(ElementSet o) const noexcept {
      return from_mask(mask_ | o.mask_);
    }
    constexpr ElementSet operator&(ElementSet o) const noexcept {
      return from_mask(mask_ & o.mask_);
    }
    // Set difference.
    constexpr ElementSet operator-(ElementSet o) const noexcept {
      return from_mask(mask_ & ~o.mask_);
    }
    constexpr ElementSet& operator|=(ElementSet o) noexcept {
      mask_ |= o.mask_;
      return *this;
    }
    constexpr ElementSet& operator&=(ElementSet o) noexcept {
      mask_ &= o.mask_;
      return *this;
    }

    constexpr bool operator==(ElementSet const&) const noexcept = default;

    class iterator {
     public:
      using value_type      = Element;
      using difference_type = std::ptrdiff_t;

      constexpr iterator() noexcept = default;
      constexpr explicit iterator(Mask rest) noexcept : rest_(rest) {}

      constexpr Element operator*() const noexcept {
        return static_cast<Element>(std::countr_zero(rest_));
      }
      constexpr iterator& operator++() noexcept {
        rest_ &= rest_ - 1;
        return *this;
      }
      constexpr iterator operator++(int) noexcept {
        iterator tmp = *this;
        ++*this;
        return tmp;
      }
      constexpr bool operator==(iterator const&) const noexcept = default;

     private:
      Mask rest_ = 0;
    };

    constexpr iterator begin() const noexcept {
      return iterator(mask_);
    }
    constexpr iterator end() const noexcept {
      return iterator(0);
    }

    std::vector<Element> elements() const;

    // "{0,2,4}"
    std::string to_string() const;

   private:
    Mask mask_ = 0;
  };

  // Canonical order used for every reported list of sets: ascending
  // cardinality, ties broken by mask value.
  constexpr bool canonical_less(ElementSet a, ElementSet b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.mask() < b.mask();
  }

  struct CanonicalLess {
    constexpr bool operator()(ElementSet a, ElementSet b) const noexcept {
      return canonical_less(a, b);
    }
  };

  std::string to_string(std::vector<Element> const& tuple);

}  // namespace hyperring
