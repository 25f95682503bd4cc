#include "wheelfree/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wheelfree {

namespace {

std::size_t word_count(std::size_t universe) { return std::max<std::size_t>(1, (universe + 63) / 64); }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe) { words_.assign(word_count(universe), 0); }

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
  if (universe % 64 != 0) s.words_.back() = (Word{1} << (universe % 64)) - 1;
  if (universe == 0) s.words_[0] = 0;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, Word mask) {
  if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
  if (universe < 64 && (mask >> universe) != 0) throw std::out_of_range("VertexSet::from_mask: mask has bits outside universe");
  VertexSet s(universe);
  s.words_[0] = mask;
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check_member(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_) + ")");
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("VertexSet: mismatched universes");
}

void VertexSet::insert(Vertex v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

Vertex VertexSet::next(Vertex after) const {
  std::size_t start = static_cast<std::size_t>(after + 1);
  if (start >= universe_) return npos;
  std::size_t wi = start >> 6;
  Word w = words_[wi] & (~Word{0} << (start & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

VertexSet::Word VertexSet::mask() const {
  if (universe_ > 64) throw std::logic_error("VertexSet::mask: universe exceeds 64");
  return words_[0];
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
  return universe_ == other.universe_ && std::equal(words_.begin(), words_.end(), other.words_.begin());
}

bool VertexSet::operator<(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  for (; a != end() && b != other.end(); ++a, ++b) {
    if (*a != *b) return *a < *b;
  }
  return a == end() && b != other.end();
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) os << ", ";
    os << v;
    first_member = false;
  }
  os << '}';
  return os.str();
}

std::vector<Vertex> mask_members(std::uint64_t mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace wheelfree
