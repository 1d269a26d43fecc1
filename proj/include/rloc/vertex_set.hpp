#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rloc {

/// Set of vertex indices over a fixed universe [0, n), packed into 64-bit
/// words. Equality, ordering and hashing are value-based, so VertexSet can
/// key memo tables and produce canonical tie-breaks.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  /// Lowest member strictly greater than v, or -1 when none.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(v) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + __builtin_ctzll(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  /// Orders sets by their lowest differing element (the set containing it
  /// comes first); gives the lexicographic order on sorted member lists.
  bool operator<(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return words_[i] & low;
      }
    }
    return false;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    return static_cast<std::size_t>(s.hash());
  }
};

}  // namespace rloc
