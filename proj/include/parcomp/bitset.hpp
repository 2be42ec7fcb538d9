#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace parcomp {

// Fixed-width dynamic bit set. Sized once at construction; used for value
// sets and for adjacency rows in query graphs.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset all(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  int size_bits() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void intersect_with(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  }

  void union_with(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  }

  // Removes every bit set in `other`.
  void subtract(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  int count_and(const Bitset& other) const {
    int n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      n += std::popcount(words_[k] & other.words_[k]);
    }
    return n;
  }

  // Lowest index in [0, limit) whose bit is clear, or `limit` if none is.
  int first_unset(int limit) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const std::uint64_t inv = ~words_[k];
      if (inv) {
        const int i = static_cast<int>(k << 6) + std::countr_zero(inv);
        return i < limit ? i : limit;
      }
    }
    return limit;
  }

  // Lowest set bit at or above `from`, or -1 when none remains.
  int next_set_bit(int from) const {
    if (from >= nbits_) return -1;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(k << 6) + std::countr_zero(w);
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  // Calls f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k << 6) + bit);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace parcomp
