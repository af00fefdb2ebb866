#include "semitree/gapset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "semitree/errors.hpp"

namespace semitree {

namespace {

// Sums of two nonzero elements, restricted to [0, conductor).
Bitset pairwise_sums_below_conductor(const Bitset& elems, uint32_t conductor,
                                     uint32_t multiplicity) {
  Bitset sums;
  for (uint32_t e = elems.next_set(0); e != Bitset::kNpos;
       e = elems.next_set(e + 1)) {
    if (e + multiplicity >= conductor) break;  // no further sum lands below c
    sums.or_shifted_up(elems, e, conductor);
  }
  return sums;
}

}  // namespace

GapBitstream GapBitstream::from_gaps(std::span<const uint32_t> gap_values) {
  GapBitstream g;
  if (gap_values.empty()) return g;  // no gaps: all nonnegative integers

  uint32_t max_gap = 0;
  for (uint32_t v : gap_values) {
    if (v == 0) throw NotASemigroup("0 cannot be a gap");
    if (v >= kMaxBits)
      throw CapacityExceeded("gap " + std::to_string(v) +
                             " exceeds supported conductor range");
    max_gap = std::max(max_gap, v);
  }
  g.conductor_ = max_gap + 1;
  for (uint32_t v : gap_values) g.bits_.set(v - 1);

  // Closure check: the sum of two nonzero elements below the conductor must
  // not be a gap.  Sums reaching the conductor are automatically inside.
  const uint32_t c = g.conductor_;
  for (uint32_t a = 1; a < c; ++a) {
    if (g.is_gap(a)) continue;
    for (uint32_t b = a; b < c - a; ++b) {
      if (g.is_gap(b)) continue;
      if (g.is_gap(a + b))
        throw NotASemigroup("complement not closed: " + std::to_string(a) +
                            " + " + std::to_string(b) + " = " +
                            std::to_string(a + b) + " is a gap");
    }
  }
  return g;
}

GapBitstream GapBitstream::from_generators(std::span<const uint32_t> gens,
                                           std::optional<uint32_t> cap) {
  if (gens.empty() && !cap)
    throw NotCofinite("no generators and no cap");
  for (uint32_t v : gens)
    if (v == 0) throw NotASemigroup("0 is not a valid generator");
  if (cap && *cap > kMaxBits)
    throw CapacityExceeded("cap " + std::to_string(*cap) +
                           " exceeds supported conductor range");

  uint32_t min_gen = UINT32_MAX;
  for (uint32_t v : gens) min_gen = std::min(min_gen, v);

  // Closure under addition, marked integer by integer.  Without a cap we
  // stop once min_gen consecutive members appear (everything beyond is
  // reachable by adding min_gen); hitting the capacity first means the
  // conductor would not fit.
  const uint32_t bound = cap ? *cap : kMaxBits + 1;
  std::vector<char> in(bound + 1, 0);
  in[0] = 1;
  uint32_t run = 0;
  uint32_t conductor = cap ? *cap : 0;
  bool closed = cap.has_value();
  for (uint32_t n = 1; n <= bound; ++n) {
    for (uint32_t v : gens) {
      if (v <= n && in[n - v]) {
        in[n] = 1;
        break;
      }
    }
    if (!cap) {
      run = in[n] ? run + 1 : 0;
      if (run == min_gen) {
        conductor = n - min_gen + 1;
        closed = true;
        break;
      }
    }
  }
  if (!closed) {
    // A finite conductor exists only for coprime generators.
    uint32_t d = 0;
    for (uint32_t v : gens) d = std::gcd(d, v);
    if (d != 1)
      throw NotCofinite("generators share common divisor " + std::to_string(d));
    throw CapacityExceeded("conductor exceeds supported range");
  }

  std::vector<uint32_t> gap_values;
  for (uint32_t n = 1; n < conductor; ++n)
    if (!in[n]) gap_values.push_back(n);
  return from_gaps(gap_values);
}

SemigroupStats GapBitstream::stats() const {
  SemigroupStats st;
  st.conductor = conductor_;
  st.genus = bits_.count();
  st.left_count = conductor_ - st.genus;
  // Smallest nonzero element: first clear bit (the bit before the conductor
  // is always clear, so the scan terminates in range).
  uint32_t z = bits_.next_zero(0);
  assert(z != Bitset::kNpos && z < conductor_);
  st.multiplicity = z + 1;
  return st;
}

std::vector<uint32_t> GapBitstream::gap_values() const {
  std::vector<uint32_t> out;
  for (uint32_t i = bits_.next_set(0); i != Bitset::kNpos && i < conductor_;
       i = bits_.next_set(i + 1))
    out.push_back(i + 1);
  return out;
}

std::vector<uint32_t> GapBitstream::left_elements() const {
  std::vector<uint32_t> out{0};
  for (uint32_t i = bits_.next_zero(0); i < conductor_ - 1;
       i = bits_.next_zero(i + 1))
    out.push_back(i + 1);
  return out;
}

Bitset GapBitstream::left_element_bits() const {
  if (conductor_ <= 1) return {};
  Bitset inv = Bitset::complement_below(bits_, conductor_ - 1);
  Bitset out;
  out.or_shifted_up(inv, 1, conductor_);
  return out;
}

Primitives GapBitstream::primitives() const {
  Primitives out;
  const uint32_t c = conductor_;
  const uint32_t m = stats().multiplicity;
  Bitset elems = left_element_bits();
  Bitset sums = pairwise_sums_below_conductor(elems, c, m);
  for (uint32_t e = elems.next_set(0); e != Bitset::kNpos;
       e = elems.next_set(e + 1))
    if (!sums.test(e)) out.left.push_back(e);

  // Right primitives all fall in [c, c + m): anything above decomposes as
  // m + (element >= c).  A nonzero addend of a sum below c + m is itself
  // below c, so scanning left elements suffices.
  for (uint32_t x = c; x < c + m; ++x) {
    bool prim = true;
    for (uint32_t a = elems.next_set(0); a != Bitset::kNpos && 2 * a <= x;
         a = elems.next_set(a + 1)) {
      if (contains(x - a)) {
        prim = false;
        break;
      }
    }
    if (prim) out.right.push_back(x);
  }
  return out;
}

uint32_t GapBitstream::left_primitive_count() const {
  Bitset elems = left_element_bits();
  Bitset sums =
      pairwise_sums_below_conductor(elems, conductor_, stats().multiplicity);
  return elems.count() - (elems & sums).count();
}

std::string GapBitstream::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const uint32_t nibbles = (conductor_ + 3) / 4;
  std::string out(nibbles, '0');
  for (uint32_t t = 0; t < nibbles; ++t) {
    uint32_t v = 0;
    for (uint32_t b = 0; b < 4; ++b) {
      uint32_t i = 4 * t + b;
      if (i < conductor_ && bits_.test(i)) v |= 8u >> b;
    }
    out[t] = digits[v];
  }
  return out;
}

GapBitstream GapBitstream::from_hex(uint32_t conductor, std::string_view hex) {
  if (conductor == 0 || conductor > kMaxBits)
    throw ParseError("conductor out of range", 0);
  if (hex.size() != (conductor + 3) / 4)
    throw ParseError("hex length does not match conductor", 0);

  Bitset bits;
  for (size_t t = 0; t < hex.size(); ++t) {
    char ch = hex[t];
    uint32_t v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = 10 + (ch - 'a');
    else if (ch >= 'A' && ch <= 'F') v = 10 + (ch - 'A');
    else throw ParseError("invalid hex digit", t);
    for (uint32_t b = 0; b < 4; ++b) {
      if (!(v & (8u >> b))) continue;
      uint32_t i = static_cast<uint32_t>(4 * t) + b;
      if (i >= conductor) throw ParseError("padding bits must be zero", t);
      bits.set(i);
    }
  }
  if (bits.test(conductor - 1))
    throw ParseError("the conductor itself cannot be a gap", 0);
  if (conductor >= 2 && !bits.test(conductor - 2))
    throw ParseError("bit before the conductor must be a gap", 0);

  std::vector<uint32_t> gap_values;
  for (uint32_t i = bits.next_set(0); i != Bitset::kNpos && i < conductor;
       i = bits.next_set(i + 1))
    gap_values.push_back(i + 1);
  return from_gaps(gap_values);  // revalidates closure
}

bool GapBitstream::canonical_less(const GapBitstream& a, const GapBitstream& b) {
  uint32_t ga = a.bits_.count(), gb = b.bits_.count();
  if (ga != gb) return ga < gb;
  uint32_t d = a.bits_.first_difference(b.bits_);
  if (d == Bitset::kNpos) return false;
  return a.bits_.test(d);
}

}  // namespace semitree
