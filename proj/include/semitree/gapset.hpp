#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semitree/bitset.hpp"

namespace semitree {

// Scalar statistics of a numerical semigroup.  Conventions: the conductor c
// is the smallest element with [c, inf) fully contained; the multiplicity m
// is the smallest nonzero element; left_count is the number of elements
// strictly below c (zero included).  For the full set of nonnegative
// integers we use the one-bit convention: c = m = left_count = 1, genus 0.
struct SemigroupStats {
  uint32_t genus = 0;
  uint32_t conductor = 1;
  uint32_t multiplicity = 1;
  uint32_t left_count = 1;

  uint32_t frobenius() const { return conductor - 1; }
  uint32_t q() const { return (conductor + multiplicity - 1) / multiplicity; }
  uint32_t rho() const { return q() * multiplicity - conductor; }
  bool operator==(const SemigroupStats&) const = default;
};

// Primitive elements: those that are not the sum of two smaller nonzero
// elements.  Every primitive >= c lies in [c, c + m).
struct Primitives {
  std::vector<uint32_t> left;   // primitives <  conductor
  std::vector<uint32_t> right;  // primitives >= conductor
};

// A numerical semigroup encoded by its gaps: bit i is set exactly when the
// integer i+1 is a gap.  The stream has conductor-many bits, so the last
// bit is always clear and (for conductor >= 2) the bit before it marks the
// Frobenius number.  Appending zero bits would not change the set encoded;
// this class keeps the canonical conductor-length form.
class GapBitstream {
 public:
  GapBitstream() = default;  // the full set of nonnegative integers

  // Builds from an explicit finite gap set; rejects non-semigroups.
  static GapBitstream from_gaps(std::span<const uint32_t> gap_values);

  // Smallest semigroup containing the generators, plus everything at and
  // above cap when one is given.  Without a cap the generators must be
  // coprime, otherwise NotCofinite is thrown.
  static GapBitstream from_generators(std::span<const uint32_t> gens,
                                      std::optional<uint32_t> cap = std::nullopt);

  uint32_t conductor() const { return conductor_; }
  bool gap_bit(uint32_t i) const { return bits_.test(i); }
  const Bitset& bits() const { return bits_; }

  bool is_gap(uint32_t n) const {
    return n >= 1 && n <= conductor_ && bits_.test(n - 1);
  }
  bool contains(uint32_t n) const { return !is_gap(n); }

  SemigroupStats stats() const;
  std::vector<uint32_t> gap_values() const;
  std::vector<uint32_t> left_elements() const;

  // Bit n marks a nonzero element n < conductor.
  Bitset left_element_bits() const;

  Primitives primitives() const;
  uint32_t left_primitive_count() const;

  // Lowercase hex, one nibble per four bits, bit 0 at the nibble's most
  // significant position, zero-padded to ceil(conductor / 4) digits.
  std::string to_hex() const;
  static GapBitstream from_hex(uint32_t conductor, std::string_view hex);

  bool operator==(const GapBitstream&) const = default;

  // Strict weak order: genus first, then the first differing position of
  // the gap streams with "gap before element".  Distinct semigroups always
  // compare unequal.
  static bool canonical_less(const GapBitstream& a, const GapBitstream& b);

 private:
  friend class SemigroupNode;

  Bitset bits_;
  uint32_t conductor_ = 1;
};

}  // namespace semitree
