#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace wheelfree {

using Vertex = int;

/// Ordered set of vertex ids drawn from a fixed universe 0..universe-1.
///
/// Stored as a bitset; universes of up to 64 vertices live in a single
/// inline word so set algebra is a handful of instructions.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr Vertex npos = -1;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return at_ == o.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  template <typename Range>
  VertexSet(std::size_t universe, const Range& members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, Word mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  /// Smallest member, or npos.
  Vertex first() const { return next(npos); }
  /// Smallest member strictly greater than `after`, or npos.
  Vertex next(Vertex after) const;

  /// The single-word representation; requires universe() <= 64.
  Word mask() const;

  std::vector<Vertex> to_vector() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const;
  /// Lexicographic on the sorted member lists.
  bool operator<(const VertexSet& other) const;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

  /// "{0, 3, 5}"
  std::string to_string() const;

 private:
  void check_member(Vertex v) const;
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 1> words_{Word{0}};
};

/// Members of a word mask in increasing order.
std::vector<Vertex> mask_members(std::uint64_t mask);

}  // namespace wheelfree
