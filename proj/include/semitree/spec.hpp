#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitree/gapset.hpp"

namespace semitree {

// Textual semigroup descriptor:
//   gens=14,22,23;cap=56     generators, everything >= cap added
//   gens=2,3                 plain generators (must be coprime)
//   gaps=1,2,4,5             explicit gap set
// Whitespace around tokens is ignored.  Parse failures throw ParseError
// with the byte offset of the offending character.
struct SemigroupSpec {
  enum class Kind { kGenerators, kGaps };

  Kind kind = Kind::kGenerators;
  std::vector<uint32_t> values;
  std::optional<uint32_t> cap;

  static SemigroupSpec parse(std::string_view text);

  GapBitstream to_semigroup() const;

  // Canonical descriptor: the left primitives as generators, with
  // ";cap=<conductor>" appended only when they alone generate a smaller
  // set.  Semigroups with no left primitives (the full set and the ones
  // of shape {0} u [m, inf)) are rendered by their right primitives.
  static SemigroupSpec canonical(const GapBitstream& gaps);

  std::string render() const;

  bool operator==(const SemigroupSpec&) const = default;
};

}  // namespace semitree
