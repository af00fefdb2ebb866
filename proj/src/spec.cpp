#include "semitree/spec.hpp"

#include <algorithm>
#include <numeric>

#include "semitree/errors.hpp"

namespace semitree {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           ((text[pos] >= 'a' && text[pos] <= 'z') ||
            (text[pos] >= 'A' && text[pos] <= 'Z')))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  uint32_t number() {
    skip_ws();
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected a number", pos);
    uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > UINT32_MAX) throw ParseError("number too large", pos);
      ++pos;
    }
    return static_cast<uint32_t>(v);
  }
};

}  // namespace

SemigroupSpec SemigroupSpec::parse(std::string_view text) {
  Cursor cur{text};
  SemigroupSpec spec;

  const size_t key_pos = cur.pos;
  const std::string key = cur.word();
  if (key == "gens") {
    spec.kind = Kind::kGenerators;
  } else if (key == "gaps") {
    spec.kind = Kind::kGaps;
  } else {
    throw ParseError("expected 'gens' or 'gaps'", key_pos);
  }
  if (!cur.eat('=')) throw ParseError("expected '='", cur.pos);

  spec.values.push_back(cur.number());
  while (cur.eat(',')) spec.values.push_back(cur.number());

  if (cur.eat(';')) {
    const size_t cap_pos = cur.pos;
    if (cur.word() != "cap") throw ParseError("expected 'cap'", cap_pos);
    if (!cur.eat('=')) throw ParseError("expected '='", cur.pos);
    spec.cap = cur.number();
    if (spec.kind == Kind::kGaps)
      throw ParseError("cap only applies to generator specs", cap_pos);
  }
  if (!cur.done()) throw ParseError("trailing characters", cur.pos);
  return spec;
}

GapBitstream SemigroupSpec::to_semigroup() const {
  if (kind == Kind::kGaps) return GapBitstream::from_gaps(values);
  return GapBitstream::from_generators(values, cap);
}

SemigroupSpec SemigroupSpec::canonical(const GapBitstream& gaps) {
  const Primitives prim = gaps.primitives();
  SemigroupSpec spec;
  spec.kind = Kind::kGenerators;

  if (prim.left.empty()) {
    // {0} u [m, inf): generated by its right primitives m .. 2m-1.
    spec.values = prim.right;
    return spec;
  }

  spec.values = prim.left;
  // The left primitives alone generate the set exactly when their closure
  // already contains every element below the conductor and everything from
  // the conductor on.  The closure is checked up to c + m; covering that
  // whole window implies covering every larger value.
  const uint32_t c = gaps.conductor();
  uint32_t min_gen = prim.left.front();
  std::vector<char> in(c + min_gen + 1, 0);
  in[0] = 1;
  for (uint32_t n = 1; n <= c + min_gen; ++n)
    for (uint32_t v : prim.left) {
      if (v <= n && in[n - v]) {
        in[n] = 1;
        break;
      }
    }
  bool exact = true;
  for (uint32_t n = 1; n < c && exact; ++n)
    if (static_cast<bool>(in[n]) != gaps.contains(n)) exact = false;
  for (uint32_t n = c; n <= c + min_gen && exact; ++n)
    if (!in[n]) exact = false;
  if (!exact) spec.cap = c;
  return spec;
}

std::string SemigroupSpec::render() const {
  std::string out = kind == Kind::kGaps ? "gaps=" : "gens=";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  if (cap) out += ";cap=" + std::to_string(*cap);
  return out;
}

}  // namespace semitree
