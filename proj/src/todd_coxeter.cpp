#include <cstdint>
#include <set>
#include <utility>

#include "burnlab/coset_table.hpp"
#include "burnlab/errors.hpp"

namespace burnlab::fp {

namespace {

using Cols = std::vector<int>;  // a word spelled as column indices

Cols word_to_cols(const Word& w) {
  Cols out;
  out.reserve(w.size());
  for (int l : w) out.push_back(col_of_letter(l));
  return out;
}

// Felsch-style enumerator: new table entries are created only at the first
// undefined position in row-major order, and every definition is immediately
// chased through all relator rotations that start with the defined letter.
// Coincidences are resolved by a union-find merge queue in the standard way
// (dead rows migrate their entries to the surviving representative).
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens, std::int64_t max_cosets)
      : pres_(p), max_(max_cosets), ncols_(2 * p.ngens()) {
    if (p.ngens() < 1) throw DomainError("presentation has no generators");
    if (max_cosets < 1) throw DomainError("max_cosets must be positive");
    for (const Word& r : p.relators) validate_word(r, "relator");
    for (const Word& w : subgens) validate_word(w, "subgroup generator");
    build_buckets();
    for (const Word& r : p.relators) rel_cols_.push_back(word_to_cols(r));
    for (const Word& w : subgens) subgens_.push_back(word_to_cols(w));
    new_coset();
  }

  CosetTable run() {
    for (const Cols& w : subgens_) {
      scan_and_fill(rep(0), w);
      process_deductions();
    }
    for (;;) {
      auto [row, col] = find_undefined();
      if (row >= 0) {
        std::int32_t n = new_coset();
        set_entry(row, col, n);
        process_deductions();
        continue;
      }
      if (!verify_pass()) break;
    }
    return finish();
  }

 private:
  void validate_word(const Word& w, const char* what) const {
    for (int l : w) {
      int i = l > 0 ? l : -l;
      if (i < 1 || i > pres_.ngens())
        throw DomainError(std::string(what) + " uses generator index out of range");
    }
  }

  // Bucket relator rotations (of each relator and its inverse) by first
  // column so that a newly defined entry is scanned against exactly the
  // rotations that begin with its letter. Duplicate rotations are dropped.
  void build_buckets() {
    buckets_.assign(ncols_, {});
    std::set<Word> seen;
    for (const Word& r : pres_.relators) {
      for (const Word& v : {r, invert_word(r)}) {
        for (std::size_t s = 0; s < v.size(); ++s) {
          Word rot(v.begin() + s, v.end());
          rot.insert(rot.end(), v.begin(), v.begin() + s);
          if (!seen.insert(rot).second) continue;
          buckets_[col_of_letter(rot[0])].push_back(word_to_cols(rot));
        }
      }
    }
  }

  std::int32_t& tab(std::int32_t r, int c) { return table_[static_cast<std::size_t>(r) * ncols_ + c]; }
  std::int32_t tab_at(std::int32_t r, int c) const {
    return table_[static_cast<std::size_t>(r) * ncols_ + c];
  }

  std::int32_t total_rows() const { return static_cast<std::int32_t>(uf_.size()); }
  bool live(std::int32_t r) const { return uf_[r] == r; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (uf_[r] != r) r = uf_[r];
    while (uf_[c] != r) {
      std::int32_t nxt = uf_[c];
      uf_[c] = r;
      c = nxt;
    }
    return r;
  }

  std::int32_t new_coset() {
    if (alive_ >= max_)
      throw CapacityError("coset enumeration exceeded max_cosets=" + std::to_string(max_) +
                          " live cosets (index may be infinite or the bound too small)");
    if (total_rows() >= 5 * max_ + 1000)
      throw CapacityError("coset enumeration exceeded the total row budget with " +
                          std::to_string(alive_) + " live cosets");
    std::int32_t n = total_rows();
    table_.resize(table_.size() + static_cast<std::size_t>(ncols_), -1);
    uf_.push_back(n);
    ++alive_;
    return n;
  }

  void push_deduction(std::int32_t r, int c) { dstack_.emplace_back(r, c); }

  void set_entry(std::int32_t r, int c, std::int32_t t) {
    tab(r, c) = t;
    tab(t, c ^ 1) = r;
    ++mutations_;
    push_deduction(r, c);
    rewind_cursor(r);
    rewind_cursor(t);
  }

  void rewind_cursor(std::int32_t r) {
    if (r < cursor_row_) {
      cursor_row_ = r;
      cursor_col_ = 0;
    } else if (r == cursor_row_) {
      cursor_col_ = 0;
    }
  }

  // Scan relator w from coset a: walk forward while defined, backward while
  // defined; a one-entry gap becomes a deduction, a full meeting with
  // disagreeing endpoints becomes a coincidence.
  void scan(std::int32_t a, const Cols& w) {
    const int m = static_cast<int>(w.size());
    std::int32_t f = a;
    int i = 0;
    while (i < m && tab_at(f, w[i]) >= 0) f = tab_at(f, w[i++]);
    if (i == m) {
      if (f != a) coincidence(f, a);
      return;
    }
    std::int32_t b = a;
    int j = m - 1;
    while (j >= i && tab_at(b, w[j] ^ 1) >= 0) b = tab_at(b, w[j--] ^ 1);
    if (j < i) {
      if (f != b) coincidence(f, b);
    } else if (j == i) {
      set_entry(f, w[i], b);
    }
  }

  // Scan w from a, creating cosets to fill every gap (used for the subgroup
  // generators, which must close from the subgroup coset).
  void scan_and_fill(std::int32_t a, const Cols& w) {
    const int m = static_cast<int>(w.size());
    std::int32_t f = a;
    int i = 0;
    std::int32_t b = a;
    int j = m - 1;
    for (;;) {
      while (i <= j && tab_at(f, w[i]) >= 0) f = tab_at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab_at(b, w[j] ^ 1) >= 0) b = tab_at(b, w[j--] ^ 1);
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {
        set_entry(f, w[i], b);
        return;
      }
      std::int32_t n = new_coset();
      set_entry(f, w[i], n);
      f = n;
      ++i;
    }
  }

  void merge(std::int32_t a, std::int32_t b) {
    std::int32_t x = rep(a), y = rep(b);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    uf_[y] = x;
    --alive_;
    ++mutations_;
    mq_.push_back(y);
    rewind_cursor(x);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    mq_.clear();
    merge(a, b);
    std::size_t qi = 0;
    while (qi < mq_.size()) {
      std::int32_t g = mq_[qi++];
      for (int c = 0; c < ncols_; ++c) {
        std::int32_t d = tab_at(g, c);
        if (d < 0) continue;
        if (tab_at(d, c ^ 1) == g) {
          tab(d, c ^ 1) = -1;
          rewind_cursor(d);
        }
        tab(g, c) = -1;
        std::int32_t mu = rep(g), nu = rep(d);
        std::int32_t via_mu = tab_at(mu, c);
        if (via_mu >= 0) {
          merge(nu, via_mu);
        } else {
          std::int32_t via_nu = tab_at(nu, c ^ 1);
          if (via_nu >= 0)
            merge(mu, via_nu);
          else
            set_entry(mu, c, nu);
        }
      }
    }
    mq_.clear();
  }

  void process_deductions() {
    while (!dstack_.empty()) {
      auto [r, c] = dstack_.back();
      dstack_.pop_back();
      if (!live(r)) continue;
      if (tab_at(r, c) < 0) continue;
      for (const Cols& w : buckets_[c]) {
        scan(r, w);
        if (!live(r)) break;  // r died in a coincidence; its entries were re-pushed
      }
      if (!live(r)) continue;
      std::int32_t t = tab_at(r, c);
      if (t >= 0 && live(t)) {
        for (const Cols& w : buckets_[c ^ 1]) {
          scan(t, w);
          if (!live(t)) break;
        }
      }
    }
  }

  // Row-major sweep for the first undefined entry among live rows.
  std::pair<std::int32_t, int> find_undefined() {
    for (std::int32_t r = cursor_row_; r < total_rows(); ++r) {
      int c0 = (r == cursor_row_) ? cursor_col_ : 0;
      if (live(r)) {
        for (int c = c0; c < ncols_; ++c) {
          if (tab_at(r, c) < 0) {
            cursor_row_ = r;
            cursor_col_ = c;
            return {r, c};
          }
        }
      }
      cursor_row_ = r + 1;
      cursor_col_ = 0;
    }
    return {-1, 0};
  }

  // With the table complete, re-scan every relator from every live coset and
  // the subgroup generators from the subgroup coset. Returns true if anything
  // changed (the caller then resumes the main loop).
  bool verify_pass() {
    const std::uint64_t before = mutations_;
    for (std::int32_t r = 0; r < total_rows(); ++r) {
      if (!live(r)) continue;
      for (const Cols& w : rel_cols_) {
        scan(r, w);
        if (!live(r)) break;
      }
    }
    for (const Cols& w : subgens_) scan(rep(0), w);
    process_deductions();
    return mutations_ != before;
  }

  CosetTable finish() {
    // Compact live rows, then renumber in breadth-first order from the
    // subgroup coset so identical inputs give identical tables.
    std::vector<std::int32_t> compact(total_rows(), -1);
    std::vector<std::int32_t> live_rows;
    for (std::int32_t r = 0; r < total_rows(); ++r)
      if (live(r)) {
        compact[r] = static_cast<std::int32_t>(live_rows.size());
        live_rows.push_back(r);
      }
    const std::int32_t n = static_cast<std::int32_t>(live_rows.size());

    std::vector<std::int32_t> order(n, -1);  // compact index -> BFS index
    std::vector<std::int32_t> bfs;
    bfs.reserve(n);
    std::int32_t root = compact[rep(0)];
    order[root] = 0;
    bfs.push_back(root);
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      std::int32_t cur = bfs[qi];
      for (int c = 0; c < ncols_; ++c) {
        std::int32_t t = tab_at(live_rows[cur], c);
        if (t < 0) throw StateError("incomplete table after enumeration finished");
        std::int32_t ct = compact[rep(t)];
        if (order[ct] < 0) {
          order[ct] = static_cast<std::int32_t>(bfs.size());
          bfs.push_back(ct);
        }
      }
    }
    if (static_cast<std::int32_t>(bfs.size()) != n)
      throw StateError("coset action is not transitive after enumeration");

    std::vector<std::int32_t> action(static_cast<std::size_t>(n) * ncols_, -1);
    for (std::int32_t ci = 0; ci < n; ++ci) {
      std::int32_t newr = order[ci];
      for (int c = 0; c < ncols_; ++c)
        action[static_cast<std::size_t>(newr) * ncols_ + c] =
            order[compact[rep(tab_at(live_rows[ci], c))]];
    }
    return CosetTable(pres_.ngens(), pres_.gen_names, std::move(action), true);
  }

  const Presentation& pres_;
  std::int64_t max_;
  int ncols_;
  std::vector<Cols> rel_cols_;
  std::vector<Cols> subgens_;
  std::vector<std::vector<Cols>> buckets_;

  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> uf_;
  std::int64_t alive_ = 0;
  std::vector<std::pair<std::int32_t, int>> dstack_;
  std::vector<std::int32_t> mq_;
  std::int32_t cursor_row_ = 0;
  int cursor_col_ = 0;
  std::uint64_t mutations_ = 0;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgens,
                           std::int64_t max_cosets) {
  Enumerator e(p, subgens, max_cosets);
  return e.run();
}

}  // namespace burnlab::fp
