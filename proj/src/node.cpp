#include "semitree/node.hpp"

#include <algorithm>
#include <cassert>

#include "semitree/errors.hpp"

namespace semitree {

SemigroupNode::SemigroupNode() {
  // Root: no gaps, one-bit streams.  The single row says the element 1 is a
  // right primitive, so the only child removes it.
  seeds_.bits_.set(0);
  seeds_.size_ = 1;
}

SemigroupNode SemigroupNode::from_gaps(const GapBitstream& gaps) {
  SemigroupNode n;
  n.gaps_ = gaps;
  n.stats_ = gaps.stats();
  n.seeds_ = init_seeds_table(gaps);
  return n;
}

uint32_t SemigroupNode::row0_width() const {
  return std::min(stats_.multiplicity, stats_.conductor);
}

std::vector<uint32_t> SemigroupNode::right_primitive_offsets() const {
  std::vector<uint32_t> out;
  const uint32_t w = row0_width();
  for (uint32_t k = seeds_.bits_.next_set(0); k != Bitset::kNpos && k < w;
       k = seeds_.bits_.next_set(k + 1))
    out.push_back(k);
  return out;
}

std::vector<uint32_t> SemigroupNode::row_bounds() const {
  std::vector<uint32_t> bounds(stats_.left_count + 1);
  bounds[0] = 0;
  const Bitset& gb = gaps_.bits();
  for (uint32_t i = 1; i <= stats_.left_count; ++i)
    bounds[i] = gb.next_zero(bounds[i - 1]) + 1;
  assert(bounds[stats_.left_count] == stats_.conductor);
  return bounds;
}

SeedsTable init_seeds_table(const GapBitstream& gaps) {
  SeedsTable t;
  const uint32_t c = gaps.conductor();
  t.size_ = c;
  t.bits_ = Bitset{};

  uint32_t lam = 0;  // current left element
  for (uint32_t pos = 0; pos < c; ++pos) {
    // Row boundaries: position p starts the row of left element p whenever
    // p itself is an element.
    if (pos > 0 && gaps.contains(pos)) lam = pos;
    const uint32_t x = c + (pos - lam);  // candidate element for this column
    // x is an order-lam seed unless x + lam splits as u + v with elements
    // lam < u <= v < x; v < x is equivalent to u > lam, so scanning
    // u in (lam, (x + lam) / 2] covers every witness.
    bool seed = true;
    const uint32_t target = x + lam;
    for (uint32_t u = lam + 1; 2 * u <= target; ++u) {
      if (gaps.contains(u) && gaps.contains(target - u)) {
        seed = false;
        break;
      }
    }
    if (seed) t.bits_.set(pos);
  }
  return t;
}

SemigroupNode SemigroupNode::child(uint32_t offset) const {
  const uint32_t c = stats_.conductor;
  const uint32_t L = stats_.left_count;
  const uint32_t k = offset;
  if (k >= row0_width() || !seeds_.bits_.test(k))
    throw NotAPrimitive("offset " + std::to_string(k) +
                        " does not name a right primitive");
  const uint32_t cc = c + k + 1;
  if (cc > kMaxBits)
    throw CapacityExceeded("child conductor exceeds supported range");

  SemigroupNode out;
  out.gaps_ = gaps_;
  out.gaps_.bits_.set(c + k - 1);  // c + k becomes the new Frobenius gap
  out.gaps_.conductor_ = cc;

  out.stats_.genus = stats_.genus + 1;
  out.stats_.conductor = cc;
  out.stats_.left_count = L + k;
  // The multiplicity only moves when the removed element is the
  // multiplicity itself, which forces the shape {0} u [m, inf).
  out.stats_.multiplicity =
      (L == 1 && k == 0) ? stats_.multiplicity + 1 : stats_.multiplicity;

  // Row boundaries of the parent: left elements plus the conductor sentinel.
  uint32_t bounds[kMaxBits + 1];
  bounds[0] = 0;
  const Bitset& gb = gaps_.bits();
  for (uint32_t i = 1; i <= L; ++i) bounds[i] = gb.next_zero(bounds[i - 1]) + 1;
  assert(bounds[L] == c);

  // Surviving seeds keep their row and drop by k+1 columns.  The global
  // shift achieves that in one pass; the tail of each row then holds bits
  // leaked in from the next row, which the per-row clears remove.
  Bitset ns = seeds_.bits_.shifted_down(k + 1);
  for (uint32_t i = 0; i < L; ++i) {
    const uint32_t hi = bounds[i + 1];
    const uint32_t lo = hi > k + 1 ? std::max(bounds[i], hi - (k + 1)) : bounds[i];
    ns.clear_range(lo, hi);
  }
  // If the removed element c + k was an order-(i+1) seed, it reappears as
  // the last column of row i (the column of the removed element itself).
  for (uint32_t i = 0; i + 1 < L; ++i) {
    const uint32_t src = bounds[i + 1] + k;
    if (src < bounds[i + 2] && seeds_.bits_.test(src)) ns.set(bounds[i + 1] - 1);
  }
  // Fixed tail pattern.  The rows created for the new left elements
  // c .. c+k-1 are all zero except their last three flat positions: the
  // deepest row (two columns wide) always holds seeds for both of its
  // candidates, and the row before it holds one.  When k <= 1 part of that
  // tail falls on the last column of the old final row, which is likewise
  // always a seed.
  if (k == 0) {
    ns.set(c - 1);
    ns.set(c);
  } else if (k == 1) {
    ns.set(c - 1);
    ns.set(c);
    ns.set(c + 1);
  } else {
    ns.set(c + k - 2);
    ns.set(c + k - 1);
    ns.set(c + k);
  }
  out.seeds_.bits_ = ns;
  out.seeds_.size_ = cc;
  return out;
}

std::vector<std::string> SemigroupNode::seed_rows() const {
  std::vector<std::string> out;
  auto bounds = row_bounds();
  for (uint32_t i = 0; i + 1 < bounds.size(); ++i) {
    std::string row;
    for (uint32_t pos = bounds[i]; pos < bounds[i + 1]; ++pos)
      row.push_back(seeds_.bits_.test(pos) ? '1' : '0');
    out.push_back(std::move(row));
  }
  return out;
}

std::string SemigroupNode::render_seed_table() const {
  std::string out;
  auto bounds = row_bounds();
  for (uint32_t i = 0; i + 1 < bounds.size(); ++i) {
    for (uint32_t pos = bounds[i]; pos < bounds[i + 1]; ++pos)
      out.push_back(seeds_.bits_.test(pos) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

}  // namespace semitree
