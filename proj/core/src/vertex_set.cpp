#include "smw/vertex_set.hpp"

#include <sstream>
#include <stdexcept>

namespace smw {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) insert(v);
}

VertexSet VertexSet::prefix(int n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= kCapacity) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, " +
                            std::to_string(kCapacity) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= kCapacity) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

Vertex VertexSet::max() const {
  for (int i = kWords - 1; i >= 0; --i) {
    if (words_[i] != 0) return i * 64 + 63 - std::countl_zero(words_[i]);
  }
  return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (int i = 0; i < kWords; ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (int i = 0; i < kWords; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
  return *this;
}

int VertexSet::next_from(int pos) const {
  if (pos >= kCapacity) return kCapacity;
  int word = pos >> 6;
  std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (pos & 63));
  while (true) {
    if (bits != 0) return word * 64 + std::countr_zero(bits);
    if (++word == kWords) return kCapacity;
    bits = words_[word];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  // The lowest differing id decides: the set holding it is smaller unless the
  // other set has nothing above it (then the other is a proper prefix).
  for (int i = 0; i < VertexSet::kWords; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    int bit = i * 64 + std::countr_zero(diff);
    const VertexSet& holder = a.contains(bit) ? a : b;
    const VertexSet& other = a.contains(bit) ? b : a;
    bool other_has_more = other.next_from(bit + 1) < VertexSet::kCapacity;
    bool holder_smaller = other_has_more;
    bool a_smaller = (&holder == &a) ? holder_smaller : !holder_smaller;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace smw
