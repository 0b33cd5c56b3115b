#ifndef D2C_BITOPS_HPP
#define D2C_BITOPS_HPP

#include <bit>
#include <cstdint>
#include <span>

namespace d2c {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

namespace bitops {

inline bool test(std::span<const Word> w, int i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & Word{1};
}

inline void set(std::span<Word> w, int i) {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> w, int i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline int count(std::span<const Word> w) {
  int c = 0;
  for (Word x : w) c += std::popcount(x);
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

inline bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Position of the lowest set bit, or -1 when empty.
inline int first(std::span<const Word> w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(w[i]);
  return -1;
}

// Calls fn(int) for every set bit in ascending order.
template <typename Fn>
inline void for_each(std::span<const Word> w, Fn&& fn) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w[i];
    while (x) {
      fn(static_cast<int>(i) * kWordBits + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

// Numeric comparison of equal-length masks, most significant word first.
inline bool mask_less(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace bitops
}  // namespace d2c

#endif
