#pragma once

#include <bit>
#include <cstdint>

// Word-array bitset helpers for vertex sets and facet incidence masks.

namespace gridpoly::detail {

inline constexpr int kWordBits = 64;

inline int word_count(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline void set_bit(std::uint64_t* w, int i) { w[i / kWordBits] |= std::uint64_t(1) << (i % kWordBits); }

inline void clear_bit(std::uint64_t* w, int i) { w[i / kWordBits] &= ~(std::uint64_t(1) << (i % kWordBits)); }

inline bool test_bit(const std::uint64_t* w, int i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1;
}

inline int popcount(const std::uint64_t* w, int words) {
  int n = 0;
  for (int i = 0; i < words; ++i) n += std::popcount(w[i]);
  return n;
}

inline bool any(const std::uint64_t* w, int words) {
  for (int i = 0; i < words; ++i)
    if (w[i]) return true;
  return false;
}

// index of the lowest set bit, or -1
inline int lowest_bit(const std::uint64_t* w, int words) {
  for (int i = 0; i < words; ++i)
    if (w[i]) return i * kWordBits + std::countr_zero(w[i]);
  return -1;
}

inline bool is_subset(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool equal(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// sets come first in descending lex order when they hold the lowest
// differing bit (bit index 0 is the greatest vertex)
inline bool lex_precedes(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] != b[i]) {
      std::uint64_t diff = a[i] ^ b[i];
      return a[i] & (diff & ~(diff - 1));
    }
  return false;
}

}  // namespace gridpoly::detail
