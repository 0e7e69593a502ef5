#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace bindingfactor {

using Vertex = int;

/// Subset of {0, ..., universe-1}.
///
/// Universes of at most 64 vertices live in a single inline word so the
/// exhaustive searches never allocate; larger universes fall back to a heap
/// word array. Iteration is always in ascending vertex order, and ordering
/// compares the sets as binary numbers (bit v has weight 2^v), which is the
/// tie-break used for every deterministic witness in the library.
class VertexSet {
 public:
  static constexpr std::size_t kInlineBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  /// Requires universe <= 64 and mask to have no bits at or above universe.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);

  /// Only valid for universe <= 64.
  std::uint64_t mask() const noexcept { return small_; }
  bool is_inline() const noexcept { return universe_ <= kInlineBits; }

  std::size_t word_count() const noexcept;
  std::uint64_t word(std::size_t i) const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  /// Smallest member, or -1 when empty.
  Vertex front() const noexcept;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) noexcept;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const noexcept { return current_; }
    const_iterator& operator++() noexcept;
    const_iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a,
                           const const_iterator& b) noexcept {
      return a.current_ == b.current_;
    }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, Vertex start) noexcept;
    void seek(std::size_t from) noexcept;

    const VertexSet* set_ = nullptr;
    Vertex current_ = -1;
  };

  const_iterator begin() const noexcept { return const_iterator(this, 0); }
  const_iterator end() const noexcept { return const_iterator(); }

 private:
  void check_same_universe(const VertexSet& other) const;
  void trim() noexcept;
  std::uint64_t* words() noexcept {
    return is_inline() ? &small_ : large_.data();
  }
  const std::uint64_t* words() const noexcept {
    return is_inline() ? &small_ : large_.data();
  }

  std::size_t universe_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> large_;
};

/// All bits below n set; n <= 64.
constexpr std::uint64_t low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace bindingfactor
