#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace smw {

using Vertex = int;

/// Sorted set of vertex ids backed by a fixed-width bitmask.
///
/// Ids range over [0, kCapacity). Ordering is lexicographic on the ascending
/// element lists, so `{0,1} < {0,1,2} < {0,2} < {1}`.
class VertexSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = kCapacity;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);

  template <class Range>
  static VertexSet from_range(const Range& range) {
    VertexSet s;
    for (auto v : range) s.insert(static_cast<Vertex>(v));
    return s;
  }

  /// {0, 1, ..., n-1}
  static VertexSet prefix(int n);

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const {
    return v >= 0 && v < kCapacity && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  int size() const;
  bool empty() const;
  void clear() { words_.fill(0); }

  /// Smallest element; kCapacity when empty.
  Vertex min() const { return next_from(0); }
  /// Largest element; -1 when empty.
  Vertex max() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, kCapacity}; }

  std::vector<Vertex> to_vector() const;
  /// "{0,1,5}"
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  int next_from(int pos) const;

  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace smw
