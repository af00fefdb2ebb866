#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Slow reference implementations used only by tests.  Everything here works
// on explicit sorted integer lists and literal definition scans -- no bit
// packing, no incremental updates -- so it shares no machinery with the
// library it checks.
namespace oracle {

class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A semigroup is passed around as its sorted gap list; the empty list means
// every nonnegative integer.  conductor = largest gap + 1 (1 when gapless,
// matching the library's one-bit convention for the full set).
uint32_t conductor_of(const std::vector<uint32_t>& gaps);

bool member(const std::vector<uint32_t>& gaps, uint32_t n);

// Elements in ascending order, up to and including bound.
std::vector<uint32_t> elements_up_to(const std::vector<uint32_t>& gaps,
                                     uint32_t bound);

// Primitive elements (not a sum of two smaller nonzero elements) <= bound.
std::vector<uint32_t> primitive_elements(const std::vector<uint32_t>& gaps,
                                         uint32_t bound);

// The seeds table straight from the definition: one '0'/'1' string per left
// element l_i, one column per candidate c + k below the next left element,
// set when c + k + l_i is not l_j + l_h for any i < j <= h < index(c + k).
std::vector<std::string> seed_rows(const std::vector<uint32_t>& gaps);

// All order-i seeds up to the element bound (used to confirm that no seed
// ever falls outside its row in the table layout).
std::vector<uint32_t> order_seeds(const std::vector<uint32_t>& gaps,
                                  uint32_t order, uint32_t bound);

// Gap lists of the children (one per right primitive, ascending).
std::vector<std::vector<uint32_t>> children(const std::vector<uint32_t>& gaps);

// Number of semigroups per genus 0..max_genus by plain recursion; refuses
// anything past genus 18.
std::vector<uint64_t> count_by_genus(uint32_t max_genus);

}  // namespace oracle
