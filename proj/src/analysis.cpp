#include "semitree/analysis.hpp"

#include "semitree/errors.hpp"

namespace semitree {

EliahouReport eliahou_constant(const GapBitstream& gaps) {
  const SemigroupStats st = gaps.stats();
  const Primitives prim = gaps.primitives();
  EliahouReport r;
  r.conductor = st.conductor;
  r.multiplicity = st.multiplicity;
  r.left_count = st.left_count;
  r.q = st.q();
  r.rho = st.rho();
  r.p_left = static_cast<uint32_t>(prim.left.size());
  r.p_right = static_cast<uint32_t>(prim.right.size());
  r.e = int64_t{r.p_left} * r.left_count -
        int64_t{r.q} * (int64_t{r.multiplicity} - r.p_right) + r.rho;
  return r;
}

WilfReport wilf_check(const GapBitstream& gaps) {
  const SemigroupStats st = gaps.stats();
  const Primitives prim = gaps.primitives();
  WilfReport r;
  r.conductor = st.conductor;
  r.left_count = st.left_count;
  r.primitive_count = static_cast<uint32_t>(prim.left.size() + prim.right.size());
  r.slack = int64_t{r.left_count} * r.primitive_count - r.conductor;
  r.holds = r.slack >= 0;
  return r;
}

DelgadoParams delgado_params(uint32_t p, uint32_t tau, uint32_t i, uint32_t j) {
  if (p == 0 || p % 2 != 0)
    throw InvalidP("p must be positive and even, got " + std::to_string(p));
  // The member polynomials are cubic in p/2 and multiply the indexes by m,
  // so keep every parameter far away from int64 overflow (worst term is
  // i*(p/2+1)*m ~ cap^4).
  constexpr uint32_t kParamCap = 1u << 15;
  if (p > kParamCap || tau > kParamCap || i > kParamCap || j > kParamCap)
    throw CapacityExceeded("family parameter exceeds supported range");
  const int64_t h = p / 2, t = tau, I = i, J = j;
  DelgadoParams out;
  out.p = p;
  out.tau = tau;
  out.i = i;
  out.j = j;
  out.m = h * h + 2 * p + t * h + 2 + J * h;
  out.g = 2 * h * h + p * t + 7 * h - t + J * (p - 1) + I * out.m;
  out.c = 2 * h * h * h + 2 * h * h * t + 8 * h * h + 4 * h - t +
          2 * J * h * h + I * (h + 1) * out.m;
  return out;
}

std::optional<DelgadoParams> is_delgado_member(int64_t m, int64_t g2,
                                               int64_t g3, int64_t c) {
  if (g3 != g2 + 1) return std::nullopt;
  if (m <= 0 || c <= 0 || g2 <= 0) return std::nullopt;
  // Same overflow reasoning as delgado_params: the verification polynomial
  // stays below 2^60 for inputs under 2^30.
  if (m > (int64_t{1} << 30) || g2 > (int64_t{1} << 30) ||
      c > (int64_t{1} << 30))
    throw CapacityExceeded("family membership inputs exceed supported range");

  const int64_t q = (c + m - 1) / m;
  const int64_t tau = q * m - c;  // rho of the capped semigroup

  int64_t root = 0;
  while (root * root < m) ++root;  // ceil(sqrt(m))

  for (int64_t p = 2; p <= 2 * root + 2; p += 2) {
    const int64_t h = p / 2;
    const int64_t rem_m = m - (h * h + 2 * p + tau * h + 2);
    if (rem_m < 0 || rem_m % h != 0) continue;
    const int64_t j = rem_m / h;
    const int64_t rem_g = g2 - (2 * h * h + p * tau + 7 * h - tau + j * (p - 1));
    if (rem_g < 0 || rem_g % m != 0) continue;
    const int64_t i = rem_g / m;
    const int64_t c_expect = 2 * h * h * h + 2 * h * h * tau + 8 * h * h +
                             4 * h - tau + 2 * j * h * h + i * (h + 1) * m;
    if (c_expect != c) continue;
    DelgadoParams out;
    out.p = static_cast<uint32_t>(p);
    out.tau = static_cast<uint32_t>(tau);
    out.i = static_cast<uint32_t>(i);
    out.j = static_cast<uint32_t>(j);
    out.m = m;
    out.g = g2;
    out.c = c;
    return out;
  }
  return std::nullopt;
}

}  // namespace semitree
