#pragma once

#include <cstdint>
#include <vector>

#include "burnlab/coset_table.hpp"
#include "burnlab/word.hpp"

namespace burnlab::bg {

// Parameters for B(m, n): m generators, every element of exponent dividing n.
struct BurnsideSpec {
  int m = 2;
  int n = 2;
  int max_word_len = 6;
  std::int64_t max_cosets = 200000;
};

struct BurnsideResult {
  std::uint64_t order;
  int relator_len_used;   // the L at which enumeration closed and certified
  bool exponent_certified;
  fp::CosetTable table;
};

// One relator w^n for each equivalence class of freely and cyclically reduced
// words of length <= L over m generators, where classes identify cyclic
// rotations and inversion and proper powers are dropped. Representatives are
// the shortlex-least class members; output sorted by (|w|, lex).
std::vector<fp::Word> burnside_relators(int m, int n, int L);

// True iff every element of the group presented by the complete table t has
// order dividing n. Uses the regular action directly: the element attached to
// coset r has order equal to the first k with 0 * w_r^k = 0, where w_r is a
// word reaching r from coset 0.
bool regular_exponent_divides(const fp::CosetTable& t, int n);

// Sweeps L = 1..max_word_len; at each L that closes under max_cosets, checks
// the exponent. The first L that closes and certifies gives exactly |B(m,n)|:
// the enumerated group surjects onto B(m,n), and having exponent dividing n
// it is also a quotient of it. UndecidedError when no L within the cap both
// closes and certifies.
BurnsideResult compute_burnside(const BurnsideSpec& spec);

// Spreadsheet-style generator names: a..z, aa, ab, ...
std::string burnside_gen_name(int i);

}  // namespace burnlab::bg
