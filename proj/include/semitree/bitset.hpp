#pragma once

#include <array>
#include <cassert>
#include <cstdint>

namespace semitree {

// Hard capacity for gap and seed bitstreams.  A conductor never exceeds
// twice the genus, so 256 bits covers trees explored to genus 127 -- well
// past the configured default bound.
inline constexpr uint32_t kMaxBits = 256;

// Packed fixed-capacity bitset.  Callers track their own logical length;
// the invariant throughout the library is that bits at and above that
// length stay zero, which keeps whole-word shifts and comparisons honest.
class Bitset {
 public:
  static constexpr uint32_t kWords = kMaxBits / 64;
  static constexpr uint32_t kNpos = UINT32_MAX;

  constexpr Bitset() = default;

  bool test(uint32_t i) const {
    assert(i < kMaxBits);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(uint32_t i) {
    assert(i < kMaxBits);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(uint32_t i) {
    assert(i < kMaxBits);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void assign(uint32_t i, bool v) { v ? set(i) : reset(i); }

  uint32_t count() const {
    uint32_t n = 0;
    for (uint64_t w : words_) n += static_cast<uint32_t>(__builtin_popcountll(w));
    return n;
  }

  // Number of set bits in [0, limit).
  uint32_t count_below(uint32_t limit) const {
    assert(limit <= kMaxBits);
    uint32_t n = 0;
    uint32_t full = limit >> 6;
    for (uint32_t w = 0; w < full; ++w)
      n += static_cast<uint32_t>(__builtin_popcountll(words_[w]));
    uint32_t rem = limit & 63;
    if (rem)
      n += static_cast<uint32_t>(
          __builtin_popcountll(words_[full] & ((uint64_t{1} << rem) - 1)));
    return n;
  }

  // Smallest set bit index >= from, or kNpos.
  uint32_t next_set(uint32_t from) const {
    if (from >= kMaxBits) return kNpos;
    uint32_t w = from >> 6;
    uint64_t cur = words_[w] & (~uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return (w << 6) + static_cast<uint32_t>(__builtin_ctzll(cur));
      if (++w == kWords) return kNpos;
      cur = words_[w];
    }
  }

  // Smallest clear bit index >= from, or kNpos.  Scans raw storage, so the
  // caller must bound the result against its logical length.
  uint32_t next_zero(uint32_t from) const {
    if (from >= kMaxBits) return kNpos;
    uint32_t w = from >> 6;
    uint64_t cur = ~words_[w] & (~uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return (w << 6) + static_cast<uint32_t>(__builtin_ctzll(cur));
      if (++w == kWords) return kNpos;
      cur = ~words_[w];
    }
  }

  // Clears [lo, hi).
  void clear_range(uint32_t lo, uint32_t hi) {
    if (lo >= hi) return;
    assert(hi <= kMaxBits);
    uint32_t wl = lo >> 6, wh = (hi - 1) >> 6;
    uint64_t ml = ~uint64_t{0} << (lo & 63);
    uint64_t mh = ~uint64_t{0} >> (63 - ((hi - 1) & 63));
    if (wl == wh) {
      words_[wl] &= ~(ml & mh);
    } else {
      words_[wl] &= ~ml;
      for (uint32_t w = wl + 1; w < wh; ++w) words_[w] = 0;
      words_[wh] &= ~mh;
    }
  }
  void clear_from(uint32_t pos) { clear_range(pos, kMaxBits); }

  // Whole-stream shift toward index zero: bit i of the result is bit i+k.
  Bitset shifted_down(uint32_t k) const {
    Bitset out;
    if (k >= kMaxBits) return out;
    uint32_t ws = k >> 6, bs = k & 63;
    if (bs == 0) {
      for (uint32_t i = 0; i + ws < kWords; ++i) out.words_[i] = words_[i + ws];
    } else {
      for (uint32_t i = 0; i + ws < kWords; ++i) {
        out.words_[i] = words_[i + ws] >> bs;
        if (i + ws + 1 < kWords) out.words_[i] |= words_[i + ws + 1] << (64 - bs);
      }
    }
    return out;
  }

  // this |= (src << k), truncated to [0, limit).  Assumes this already has
  // no bits at or above limit.
  void or_shifted_up(const Bitset& src, uint32_t k, uint32_t limit) {
    if (k >= limit) return;
    uint32_t ws = k >> 6, bs = k & 63;
    if (bs == 0) {
      for (uint32_t i = kWords; i-- > ws;) words_[i] |= src.words_[i - ws];
    } else {
      for (uint32_t i = kWords; i-- > ws;) {
        uint64_t v = src.words_[i - ws] << bs;
        if (i > ws) v |= src.words_[i - ws - 1] >> (64 - bs);
        words_[i] |= v;
      }
    }
    clear_from(limit);
  }

  // Complement of src restricted to [0, limit).
  static Bitset complement_below(const Bitset& src, uint32_t limit) {
    Bitset out;
    for (uint32_t i = 0; i < kWords; ++i) out.words_[i] = ~src.words_[i];
    out.clear_from(limit);
    return out;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset out;
    for (uint32_t i = 0; i < kWords; ++i) out.words_[i] = words_[i] & o.words_[i];
    return out;
  }

  // Position of the lowest differing bit against o, or kNpos if equal.
  uint32_t first_difference(const Bitset& o) const {
    for (uint32_t i = 0; i < kWords; ++i) {
      uint64_t d = words_[i] ^ o.words_[i];
      if (d) return (i << 6) + static_cast<uint32_t>(__builtin_ctzll(d));
    }
    return kNpos;
  }

  bool operator==(const Bitset&) const = default;

 private:
  std::array<uint64_t, kWords> words_{};
};

}  // namespace semitree
