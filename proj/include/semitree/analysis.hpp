#pragma once

#include <cstdint>
#include <optional>

#include "semitree/gapset.hpp"

namespace semitree {

// Ingredients of the constant E = p_left * L - q * (m - p_right) + rho,
// where L counts the left elements, p_left / p_right count the primitives
// below / at-or-above the conductor, q = ceil(c / m) and rho = q * m - c.
// E >= 0 is a sufficient condition for the Wilf inequality c <= L * p.
struct EliahouReport {
  uint32_t conductor = 0;
  uint32_t multiplicity = 0;
  uint32_t left_count = 0;
  uint32_t q = 0;
  uint32_t rho = 0;
  uint32_t p_left = 0;
  uint32_t p_right = 0;
  int64_t e = 0;

  uint32_t genus() const { return conductor - left_count; }
  bool operator==(const EliahouReport&) const = default;
};

EliahouReport eliahou_constant(const GapBitstream& gaps);

// Direct check of c <= L * p with p the total primitive count.
struct WilfReport {
  uint32_t conductor = 0;
  uint32_t left_count = 0;
  uint32_t primitive_count = 0;
  bool holds = true;
  int64_t slack = 0;  // L * p - c

  bool operator==(const WilfReport&) const = default;
};

WilfReport wilf_check(const GapBitstream& gaps);

// Three-generator family with a forced conductor: for even p >= 2,
// half = p / 2 and parameters (tau, i, j) the member <m, g, g+1> capped at
// c is given by
//   m = half^2 + 2p + tau * half + 2 + j * half
//   g = 2 half^2 + p tau + 7 half - tau + j (p - 1) + i m
//   c = 2 half^3 + 2 half^2 tau + 8 half^2 + 4 half - tau
//       + 2 j half^2 + i (half + 1) m.
struct DelgadoParams {
  uint32_t p = 0;
  uint32_t tau = 0;
  uint32_t i = 0;
  uint32_t j = 0;
  int64_t m = 0;
  int64_t g = 0;
  int64_t c = 0;

  bool operator==(const DelgadoParams&) const = default;
};

// Evaluates the family formulas; throws InvalidP unless p is even and > 0.
DelgadoParams delgado_params(uint32_t p, uint32_t tau, uint32_t i, uint32_t j);

// Decides whether <m, g2, g3> capped at c lies in the family: g3 must be
// g2 + 1, tau is pinned to rho(c, m), and for each even p up to
// 2 * ceil(sqrt(m)) + 2 the parameters j then i are solved exactly from the
// m- and g-equations and verified against the c-equation.
std::optional<DelgadoParams> is_delgado_member(int64_t m, int64_t g2,
                                               int64_t g3, int64_t c);

}  // namespace semitree
