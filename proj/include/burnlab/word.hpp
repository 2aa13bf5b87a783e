#pragma once

#include <string>
#include <vector>

namespace burnlab::fp {

// A word over generators g1..gn: letters are nonzero signed integers, +i for
// the generator, -i for its inverse. The empty word is the identity.
using Word = std::vector<int>;

// Column index for a signed letter in a 2n-column table: g1, g1', g2, g2', ...
inline int col_of_letter(int letter) {
  int i = letter > 0 ? letter : -letter;
  return 2 * (i - 1) + (letter < 0 ? 1 : 0);
}

inline int letter_of_col(int col) {
  int i = col / 2 + 1;
  return (col % 2 == 0) ? i : -i;
}

inline int inverse_col(int col) { return col ^ 1; }

// Total order on letters: g1 < g1' < g2 < g2' < ...
inline int letter_rank(int letter) { return col_of_letter(letter); }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);  // expects a freely reduced input
Word invert_word(const Word& w);
Word word_pow(const Word& w, int k);  // k may be negative or zero
Word concat(const Word& a, const Word& b);
bool is_freely_reduced(const Word& w);

// Shortlex comparison under letter_rank.
bool word_less(const Word& a, const Word& b);

// Render with names[i-1] for generator i and a trailing ' for inverses.
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace burnlab::fp
