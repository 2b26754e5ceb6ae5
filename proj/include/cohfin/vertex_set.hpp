/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace cohfin {

/// Vertex labels are nonnegative integers.
using Vertex = std::uint32_t;

/// Hard upper bound on the size of any web handled by the library.
inline constexpr std::size_t kMaxWeb = 64;

/// Default cap for operations that sweep the full powerset of a web.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// A subset of a web, stored as a bitmask over web positions (not labels).
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

  /// Positions 0..n-1.
  static constexpr VertexSet first(std::size_t n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet of(std::initializer_list<std::size_t> positions) noexcept {
    VertexSet s;
    for (auto p : positions) s.insert(p);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const noexcept {
    return i < 64 && ((bits_ >> i) & 1U) != 0;
  }
  /// Smallest position. Precondition: !empty().
  constexpr std::size_t lowest() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }
  /// One past the largest position; 0 for the empty set.
  constexpr std::size_t extent() const noexcept {
    return 64 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  constexpr void insert(std::size_t i) noexcept { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr VertexSet with(std::size_t i) const noexcept {
    VertexSet s = *this;
    s.insert(i);
    return s;
  }
  constexpr VertexSet without(std::size_t i) const noexcept {
    VertexSet s = *this;
    s.erase(i);
    return s;
  }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  /// The `count` smallest positions of the set.
  constexpr VertexSet take(std::size_t count) const noexcept {
    VertexSet out;
    std::uint64_t rest = bits_;
    while (rest != 0 && out.size() < count) {
      out.insert(static_cast<std::size_t>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ ^ b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) noexcept {
    return a.bits_ <=> b.bits_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr std::size_t operator*() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<std::size_t> positions() const {
    return std::vector<std::size_t>(begin(), end());
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cohfin
