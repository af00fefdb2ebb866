#include "oracle.hpp"

#include <algorithm>

namespace oracle {

uint32_t conductor_of(const std::vector<uint32_t>& gaps) {
  uint32_t c = 1;
  for (uint32_t g : gaps) c = std::max(c, g + 1);
  return c;
}

bool member(const std::vector<uint32_t>& gaps, uint32_t n) {
  return std::find(gaps.begin(), gaps.end(), n) == gaps.end();
}

std::vector<uint32_t> elements_up_to(const std::vector<uint32_t>& gaps,
                                     uint32_t bound) {
  std::vector<uint32_t> out;
  for (uint32_t n = 0; n <= bound; ++n)
    if (member(gaps, n)) out.push_back(n);
  return out;
}

std::vector<uint32_t> primitive_elements(const std::vector<uint32_t>& gaps,
                                         uint32_t bound) {
  std::vector<uint32_t> elems = elements_up_to(gaps, bound);
  std::vector<uint32_t> out;
  for (uint32_t x : elems) {
    if (x == 0) continue;
    bool prim = true;
    for (uint32_t a : elems) {
      if (a == 0 || a > x - 1) continue;
      if (a <= x - a && member(gaps, x - a) && x - a >= 1 && x - a < x) {
        prim = false;
        break;
      }
    }
    if (prim) out.push_back(x);
  }
  return out;
}

std::vector<std::string> seed_rows(const std::vector<uint32_t>& gaps) {
  const uint32_t c = conductor_of(gaps);
  const std::vector<uint32_t> lam = elements_up_to(gaps, 2 * c + 2);
  // Left elements are those strictly below the conductor.
  size_t left = 0;
  while (left < lam.size() && lam[left] < c) ++left;

  std::vector<std::string> rows;
  for (size_t i = 0; i < left; ++i) {
    const uint32_t next = (i + 1 < left) ? lam[i + 1] : c;
    std::string row;
    for (uint32_t x = c; x < c + (next - lam[i]); ++x) {
      const size_t s = static_cast<size_t>(
          std::find(lam.begin(), lam.end(), x) - lam.begin());
      bool seed = true;
      for (size_t j = i + 1; j < s && seed; ++j)
        for (size_t h = j; h < s && seed; ++h)
          if (lam[j] + lam[h] == x + lam[i]) seed = false;
      row.push_back(seed ? '1' : '0');
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<uint32_t> order_seeds(const std::vector<uint32_t>& gaps,
                                  uint32_t order, uint32_t bound) {
  const uint32_t c = conductor_of(gaps);
  const std::vector<uint32_t> lam = elements_up_to(gaps, bound + c + 2);
  std::vector<uint32_t> out;
  for (size_t s = 0; s < lam.size(); ++s) {
    const uint32_t x = lam[s];
    if (x < c || x > bound) continue;
    bool seed = true;
    for (size_t j = order + 1; j < s && seed; ++j)
      for (size_t h = j; h < s && seed; ++h)
        if (lam[j] + lam[h] == x + lam[order]) seed = false;
    if (seed) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<uint32_t>> children(const std::vector<uint32_t>& gaps) {
  const uint32_t c = conductor_of(gaps);
  const std::vector<uint32_t> elems = elements_up_to(gaps, 2 * c + 2);
  // Multiplicity: smallest nonzero element.
  uint32_t m = elems[1];

  std::vector<std::vector<uint32_t>> out;
  for (uint32_t x = c; x < c + m; ++x) {
    bool prim = true;
    for (uint32_t a : elems) {
      if (a == 0 || 2 * a > x) continue;
      if (a < x && member(gaps, x - a)) {
        prim = false;
        break;
      }
    }
    if (!prim) continue;
    std::vector<uint32_t> child = gaps;
    child.push_back(x);
    std::sort(child.begin(), child.end());
    out.push_back(std::move(child));
  }
  return out;
}

namespace {

uint64_t count_rec(const std::vector<uint32_t>& gaps, uint32_t remaining,
                   std::vector<uint64_t>& per_genus, uint32_t genus) {
  per_genus[genus] += 1;
  if (remaining == 0) return 1;
  uint64_t total = 1;
  for (const auto& child : children(gaps))
    total += count_rec(child, remaining - 1, per_genus, genus + 1);
  return total;
}

}  // namespace

std::vector<uint64_t> count_by_genus(uint32_t max_genus) {
  if (max_genus > 18)
    throw BoundExceeded("refusing recursive count past genus 18");
  std::vector<uint64_t> per_genus(max_genus + 1, 0);
  count_rec({}, max_genus, per_genus, 0);
  return per_genus;
}

}  // namespace oracle
