#include "burnlab/burnside.hpp"

#include <optional>

#include "burnlab/errors.hpp"

namespace burnlab::bg {

using fp::Word;

namespace {

// letters in rank order: a, a', b, b', ...
int letter_of_rank(int r) { return (r % 2 == 0) ? r / 2 + 1 : -(r / 2 + 1); }

bool lex_less(const Word& a, const Word& b) {
  // same length by construction; compare by letter rank
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = fp::letter_rank(a[i]), rb = fp::letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool is_canonical_class_rep(const Word& w) {
  const std::size_t len = w.size();
  Word inv = fp::invert_word(w);
  for (std::size_t s = 0; s < len; ++s) {
    Word rot;
    rot.reserve(len);
    for (std::size_t i = 0; i < len; ++i) rot.push_back(w[(s + i) % len]);
    if (s > 0 && lex_less(rot, w)) return false;
    rot.clear();
    for (std::size_t i = 0; i < len; ++i) rot.push_back(inv[(s + i) % len]);
    if (lex_less(rot, w)) return false;
  }
  return true;
}

bool is_proper_power(const Word& w) {
  const std::size_t len = w.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = w[i] == w[i % d];
    if (periodic) return true;
  }
  return false;
}

void collect_reps(int m, int len, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    if (len >= 2 && cur.front() == -cur.back()) return;  // not cyclically reduced
    if (is_proper_power(cur)) return;
    if (!is_canonical_class_rep(cur)) return;
    out.push_back(cur);
    return;
  }
  for (int r = 0; r < 2 * m; ++r) {
    int l = letter_of_rank(r);
    if (!cur.empty() && cur.back() == -l) continue;
    cur.push_back(l);
    collect_reps(m, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> burnside_relators(int m, int n, int L) {
  if (m < 1) throw DomainError("need at least one generator");
  if (n < 1) throw DomainError("exponent must be positive");
  if (L < 1) throw DomainError("max word length must be at least 1");
  std::vector<Word> rels;
  for (int len = 1; len <= L; ++len) {
    std::vector<Word> reps;
    Word cur;
    collect_reps(m, len, cur, reps);
    for (const Word& w : reps) rels.push_back(fp::word_pow(w, n));
  }
  return rels;
}

std::string burnside_gen_name(int i) {
  std::string name;
  int v = i;
  do {
    name.insert(name.begin(), static_cast<char>('a' + v % 26));
    v = v / 26 - 1;
  } while (v >= 0);
  return name;
}

bool regular_exponent_divides(const fp::CosetTable& t, int n) {
  if (!t.complete()) throw StateError("exponent check needs a complete coset table");
  if (n < 1) throw DomainError("exponent must be positive");
  const std::int64_t nr = t.nrows();
  // BFS words from coset 0. parent_letter[r] holds the column taken into r.
  std::vector<std::int32_t> parent(nr, -1);
  std::vector<int> parent_col(nr, -1);
  std::vector<std::int32_t> bfs;
  bfs.reserve(nr);
  std::vector<bool> seen(nr, false);
  seen[0] = true;
  bfs.push_back(0);
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::int32_t cur = bfs[qi];
    for (int c = 0; c < 2 * t.ngens(); ++c) {
      std::int32_t nxt = t.entry(cur, c);
      if (!seen[nxt]) {
        seen[nxt] = true;
        parent[nxt] = cur;
        parent_col[nxt] = c;
        bfs.push_back(nxt);
      }
    }
  }
  if (static_cast<std::int64_t>(bfs.size()) != nr)
    throw StateError("coset table action is not transitive");

  std::vector<int> cols;
  for (std::int64_t r = 1; r < nr; ++r) {
    cols.clear();
    for (std::int32_t x = static_cast<std::int32_t>(r); x != 0; x = parent[x])
      cols.push_back(parent_col[x]);
    // cols currently spells the word backwards; walk it back-to-front.
    std::int32_t pos = 0;
    int k = 0;
    do {
      for (auto it = cols.rbegin(); it != cols.rend(); ++it) pos = t.entry(pos, *it);
      ++k;
    } while (pos != 0);
    if (n % k != 0) return false;
  }
  return true;
}

BurnsideResult compute_burnside(const BurnsideSpec& spec) {
  if (spec.m < 1) throw DomainError("need at least one generator");
  if (spec.n < 2) throw DomainError("exponent must be at least 2");
  if (spec.max_word_len < 1) throw DomainError("max_word_len must be at least 1");
  if (spec.max_cosets < 1) throw DomainError("max_cosets must be positive");

  fp::Presentation p;
  for (int i = 0; i < spec.m; ++i) p.gen_names.push_back(burnside_gen_name(i));

  std::optional<std::uint64_t> prev_order;
  for (int L = 1; L <= spec.max_word_len; ++L) {
    p.relators = burnside_relators(spec.m, spec.n, L);
    std::optional<fp::CosetTable> table;
    try {
      table = fp::coset_enumerate(p, {}, spec.max_cosets);
    } catch (const CapacityError&) {
      continue;  // did not close at this L; enrich further
    }
    const std::uint64_t order = static_cast<std::uint64_t>(table->nrows());
    if (prev_order && order > *prev_order)
      throw StateError("enumerated order increased after adding relators");
    prev_order = order;
    if (regular_exponent_divides(*table, spec.n))
      return BurnsideResult{order, L, true, std::move(*table)};
  }
  throw UndecidedError("B(" + std::to_string(spec.m) + "," + std::to_string(spec.n) +
                       ") undecided with max_word_len=" + std::to_string(spec.max_word_len) +
                       " and max_cosets=" + std::to_string(spec.max_cosets));
}

}  // namespace burnlab::bg
