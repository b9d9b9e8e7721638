#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monomatch {

/// Fixed-width (set at construction) bitset over vertex indices.
class DynamicBitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(int size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void fill() {
    for (Word& w : words_) w = ~Word{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Number of set bits shared with `other`.
  int intersection_count(const DynamicBitset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  bool is_subset_of(const DynamicBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  DynamicBitset& operator-=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// First set bit at index >= from, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return static_cast<int>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(static_cast<int>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

 private:
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace monomatch
