#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace proplab::bits {

// Dense bitset indexed by subset masks of [arity]: bit B of the vector is the
// value at mask B. All transforms below are word-parallel over 64 masks at a
// time, which is what makes whole-lattice sweeps cheap up to arity ~24.
using SubsetBitset = std::vector<std::uint64_t>;

// Within a 64-mask word, positions whose coordinate i is 0 (i < 6).
inline constexpr std::uint64_t kCoordZero[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

inline std::size_t word_count(std::uint32_t arity) {
  return arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
}

// Valid-bit mask for the single word used when arity < 6.
inline std::uint64_t tail_mask(std::uint32_t arity) {
  return arity >= 6 ? ~0ull : ((1ull << (1u << arity)) - 1ull);
}

inline SubsetBitset make_subset_bitset(std::uint32_t arity) {
  return SubsetBitset(word_count(arity), 0);
}

inline bool get_bit(const SubsetBitset& s, std::uint64_t mask) {
  return (s[mask >> 6] >> (mask & 63)) & 1ull;
}

inline void set_bit(SubsetBitset& s, std::uint64_t mask, bool value) {
  if (value)
    s[mask >> 6] |= 1ull << (mask & 63);
  else
    s[mask >> 6] &= ~(1ull << (mask & 63));
}

// out[B] = in[B ^ shift]; re-centers the hypercube at `shift`.
inline void recenter(const SubsetBitset& in, std::uint64_t shift,
                     std::uint32_t arity, SubsetBitset& out) {
  const std::size_t words = word_count(arity);
  out.resize(words);
  const std::uint64_t word_xor = shift >> 6;
  for (std::size_t w = 0; w < words; ++w) out[w] = in[w ^ word_xor];
  const std::uint32_t low = static_cast<std::uint32_t>(shift & 63);
  for (std::uint32_t i = 0; i < 6 && i < arity; ++i) {
    if (!((low >> i) & 1u)) continue;
    const std::uint32_t d = 1u << i;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t v = out[w];
      out[w] = ((v & ~kCoordZero[i]) >> d) | ((v & kCoordZero[i]) << d);
    }
  }
}

// In place: set[B] |= set[A] for every A subset of B (OR closure over the
// subset lattice, one pass per coordinate).
inline void or_subset_closure(SubsetBitset& s, std::uint32_t arity) {
  const std::size_t words = word_count(arity);
  for (std::uint32_t i = 0; i < 6 && i < arity; ++i) {
    const std::uint32_t d = 1u << i;
    for (std::size_t w = 0; w < words; ++w)
      s[w] |= (s[w] & kCoordZero[i]) << d;
  }
  for (std::uint32_t i = 6; i < arity; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < words; ++w)
      if (w & step) s[w] |= s[w ^ step];
  }
}

// out[B] = OR over i in B of in[B \ {i}].
inline void parent_or(const SubsetBitset& in, std::uint32_t arity,
                      SubsetBitset& out) {
  const std::size_t words = word_count(arity);
  out.assign(words, 0);
  for (std::uint32_t i = 0; i < 6 && i < arity; ++i) {
    const std::uint32_t d = 1u << i;
    for (std::size_t w = 0; w < words; ++w)
      out[w] |= (in[w] & kCoordZero[i]) << d;
  }
  for (std::uint32_t i = 6; i < arity; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < words; ++w)
      if (w & step) out[w] |= in[w ^ step];
  }
}

}  // namespace proplab::bits
