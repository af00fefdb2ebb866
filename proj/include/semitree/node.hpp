#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitree/gapset.hpp"

namespace semitree {

// Flat seeds bitstream: conductor-many bits partitioned into one row per
// left element.  Row i spans the flat positions [l_i, l_{i+1}) where
// l_0 < l_1 < ... are the left elements and the sentinel l_L is the
// conductor; the bit at row i, column k says whether the element c + k is
// an order-i seed, i.e. c + k + l_i is not a sum l_j + l_h with
// i < j <= h < index(c + k).  Order-0 seeds are exactly the right
// primitives.  No row ever holds a seed at or beyond its own width, which
// is what makes the flat conductor-length layout lossless.
class SeedsTable {
 public:
  SeedsTable() = default;

  uint32_t size() const { return size_; }
  bool test(uint32_t pos) const { return bits_.test(pos); }
  const Bitset& bits() const { return bits_; }

  bool operator==(const SeedsTable&) const = default;

 private:
  friend class SemigroupNode;
  friend SeedsTable init_seeds_table(const GapBitstream& gaps);

  Bitset bits_;
  uint32_t size_ = 1;
};

// Definition-based construction by direct membership scans, quadratic in
// the conductor.  Used to root explorations at arbitrary nodes and as the
// slow half of the equivalence tests for the incremental update.
SeedsTable init_seeds_table(const GapBitstream& gaps);

// A tree node: gap stream, seeds stream and cached statistics.  Children
// remove one right primitive each, so the node at genus g has exactly one
// child per set bit in row 0.  Plain value type; descending copies the
// fixed-size payload and never allocates.
class SemigroupNode {
 public:
  SemigroupNode();  // the root: all nonnegative integers

  static SemigroupNode root() { return SemigroupNode(); }
  static SemigroupNode from_gaps(const GapBitstream& gaps);

  const GapBitstream& gaps() const { return gaps_; }
  const SeedsTable& seeds() const { return seeds_; }
  const SemigroupStats& stats() const { return stats_; }
  uint32_t genus() const { return stats_.genus; }

  // Width of row 0 = min(multiplicity, conductor).
  uint32_t row0_width() const;

  // Offsets k such that conductor + k is a right primitive, ascending.
  std::vector<uint32_t> right_primitive_offsets() const;
  uint32_t child_count() const { return seeds_.bits().count_below(row0_width()); }

  // The semigroup without the element conductor + offset.  The new table is
  // produced by the incremental update: surviving seeds shift down by
  // offset+1 within their rows, the removed element's order-(i+1) seed
  // promotes onto the last column of row i, and the rows created for the
  // new left elements carry a fixed three-bit tail pattern.
  SemigroupNode child(uint32_t offset) const;

  // Left elements followed by the conductor sentinel (left_count+1 values).
  std::vector<uint32_t> row_bounds() const;
  std::vector<std::string> seed_rows() const;   // '0'/'1' strings, one per row
  std::string render_seed_table() const;        // '#'/'.' rows for display

  bool operator==(const SemigroupNode&) const = default;

 private:
  GapBitstream gaps_;
  SeedsTable seeds_;
  SemigroupStats stats_;
};

}  // namespace semitree
