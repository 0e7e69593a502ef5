#include "bindingfactor/vertex_set.hpp"

#include <algorithm>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe) {
  if (!is_inline()) large_.assign(words_for(universe), 0);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kInlineBits)
    throw ArgumentError("from_mask requires a universe of at most 64 vertices");
  if ((mask & ~low_mask(universe)) != 0)
    throw ArgumentError("mask has bits outside the universe");
  VertexSet s(universe);
  s.small_ = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  auto* w = s.words();
  for (std::size_t i = 0; i < s.word_count(); ++i) w[i] = ~std::uint64_t{0};
  s.trim();
  return s;
}

std::size_t VertexSet::word_count() const noexcept {
  return is_inline() ? 1 : large_.size();
}

std::uint64_t VertexSet::word(std::size_t i) const noexcept {
  return i < word_count() ? words()[i] : 0;
}

std::size_t VertexSet::size() const noexcept {
  if (is_inline()) return static_cast<std::size_t>(std::popcount(small_));
  std::size_t total = 0;
  for (auto w : large_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  if (is_inline()) return small_ == 0;
  return std::all_of(large_.begin(), large_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::contains(Vertex v) const noexcept {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
  return (words()[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_)
    throw ArgumentError("vertex " + std::to_string(v) + " outside universe of " +
                        std::to_string(universe_));
  words()[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return;
  words()[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw ArgumentError("vertex sets over different universes (" +
                        std::to_string(universe_) + " vs " +
                        std::to_string(other.universe_) + ")");
}

void VertexSet::trim() noexcept {
  if (universe_ == 0) {
    small_ = 0;
    return;
  }
  const std::size_t last = word_count() - 1;
  const std::size_t used = universe_ - last * 64;
  words()[last] &= low_mask(used);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < word_count(); ++i) words()[i] |= other.words()[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < word_count(); ++i) words()[i] &= other.words()[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < word_count(); ++i) words()[i] &= ~other.words()[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < word_count(); ++i) words()[i] ^= other.words()[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(*this);
  for (std::size_t i = 0; i < out.word_count(); ++i) out.words()[i] = ~out.words()[i];
  out.trim();
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < word_count(); ++i)
    if (words()[i] & ~other.words()[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(word_count(), other.word_count());
  for (std::size_t i = 0; i < n; ++i)
    if (words()[i] & other.words()[i]) return true;
  return false;
}

Vertex VertexSet::front() const noexcept {
  for (std::size_t i = 0; i < word_count(); ++i)
    if (words()[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words()[i]));
  return -1;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  if (a.universe_ != b.universe_) return false;
  for (std::size_t i = 0; i < a.word_count(); ++i)
    if (a.words()[i] != b.words()[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
  const std::size_t n = std::max(a.word_count(), b.word_count());
  for (std::size_t i = n; i-- > 0;) {
    const auto wa = a.word(i);
    const auto wb = b.word(i);
    if (wa != wb) return wa <=> wb;
  }
  return a.universe_ <=> b.universe_;
}

VertexSet::const_iterator::const_iterator(const VertexSet* set, Vertex start) noexcept
    : set_(set) {
  seek(static_cast<std::size_t>(start));
}

void VertexSet::const_iterator::seek(std::size_t from) noexcept {
  const std::size_t universe = set_->universe_;
  while (from < universe) {
    const std::size_t wi = from / 64;
    const std::uint64_t w = set_->words()[wi] >> (from % 64);
    if (w) {
      current_ = static_cast<Vertex>(from + std::countr_zero(w));
      return;
    }
    from = (wi + 1) * 64;
  }
  current_ = -1;
}

VertexSet::const_iterator& VertexSet::const_iterator::operator++() noexcept {
  seek(static_cast<std::size_t>(current_) + 1);
  return *this;
}

}  // namespace bindingfactor
