#pragma once

#include <string>
#include <vector>

#include "burnlab/word.hpp"

namespace burnlab::fp {

struct Presentation {
  std::vector<std::string> gen_names;  // lowercase ASCII, distinct
  std::vector<Word> relators;          // each freely and cyclically reduced, nonempty

  int ngens() const { return static_cast<int>(gen_names.size()); }
};

// Parses the presentation text format:
//   gens: a b
//   a^7
//   b^2
//   (ab)^3
// First significant line declares generator names; every later line is one
// relator. Juxtaposition multiplies, ' inverts the preceding factor, ^k is an
// integer power (k may be negative), parentheses group, # starts a comment,
// whitespace inside relators is ignored. Multi-letter names are matched
// greedily (longest declared name first). ParseError carries line and column.
Presentation parse_presentation(const std::string& text);

// Renders a Presentation back to the same text format.
std::string presentation_to_string(const Presentation& p);

}  // namespace burnlab::fp
