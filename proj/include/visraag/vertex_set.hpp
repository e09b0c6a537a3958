#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace visraag {

using VertexId = int;

/// Hard cap on graph size; vertex sets are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids of some host graph, stored as a bitmask.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = VertexId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    VertexId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> ids) {
    for (VertexId v : ids) insert(v);
  }

  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <class Range>
  static VertexSet of(const Range& ids) {
    VertexSet s;
    for (VertexId v : ids) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr VertexId first() const { return std::countr_zero(bits_); }

  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(VertexId v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(VertexId v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace visraag

template <>
struct std::hash<visraag::VertexSet> {
  std::size_t operator()(const visraag::VertexSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
