#include "burnlab/word.hpp"

namespace burnlab::fp {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_pow(const Word& w, int k) {
  Word base = k < 0 ? invert_word(w) : w;
  int reps = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * reps);
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (int l : w) {
    int i = l > 0 ? l : -l;
    out += names.at(static_cast<std::size_t>(i) - 1);
    if (l < 0) out += '\'';
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace burnlab::fp
