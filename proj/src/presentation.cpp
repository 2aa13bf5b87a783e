#include "burnlab/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "burnlab/errors.hpp"

namespace burnlab::fp {

namespace {

constexpr std::size_t kMaxRelatorLetters = 1u << 20;

// One relator line, parsed by recursive descent.
class RelatorParser {
 public:
  RelatorParser(const std::string& line, int line_no, const std::vector<std::string>& names)
      : s_(line), line_(line_no), names_(names) {}

  Word parse() {
    Word w = parse_seq();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  int col() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col(), msg); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // seq := factor*   (stops at ')' or end of line)
  Word parse_seq() {
    Word out;
    for (;;) {
      skip_ws();
      if (at_end() || s_[pos_] == ')') return out;
      Word f = parse_factor();
      if (out.size() + f.size() > kMaxRelatorLetters) fail("relator expands beyond the size cap");
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  // factor := atom postfix*   with postfix := ' | ^int
  Word parse_factor() {
    Word w = parse_atom();
    for (;;) {
      skip_ws();
      if (!at_end() && s_[pos_] == '\'') {
        ++pos_;
        w = invert_word(w);
      } else if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        int k = parse_exponent();
        if (w.size() * static_cast<std::size_t>(k < 0 ? -k : k) > kMaxRelatorLetters)
          fail("relator expands beyond the size cap");
        w = word_pow(w, k);
      } else {
        return w;
      }
    }
  }

  Word parse_atom() {
    skip_ws();
    if (at_end()) fail("expected a generator or '('");
    if (s_[pos_] == '(') {
      ++pos_;
      Word inner = parse_seq();
      skip_ws();
      if (at_end() || s_[pos_] != ')') fail("unbalanced parentheses: expected ')'");
      ++pos_;
      return inner;
    }
    // Greedy longest match against declared generator names.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& n = names_[i];
      if (n.size() > best_len && s_.compare(pos_, n.size(), n) == 0) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) fail("unknown generator name");
    pos_ += best_len;
    return Word{best + 1};
  }

  int parse_exponent() {
    skip_ws();
    bool neg = false;
    if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer exponent");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > static_cast<long>(kMaxRelatorLetters)) fail("exponent too large");
      ++pos_;
    }
    if (v == 0) fail("zero exponent");
    return static_cast<int>(neg ? -v : v);
  }

  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& names_;
};

bool is_lower_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);

  Presentation p;
  bool have_header = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string line = lines[li];
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const int line_no = static_cast<int>(li) + 1;
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;

    if (!have_header) {
      const std::string kHeader = "gens:";
      if (line.compare(first, kHeader.size(), kHeader) != 0)
        throw ParseError(line_no, static_cast<int>(first) + 1,
                         "expected header line starting with 'gens:'");
      std::size_t pos = first + kHeader.size();
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        std::string name = line.substr(pos, end - pos);
        if (!is_lower_name(name))
          throw ParseError(line_no, static_cast<int>(pos) + 1,
                           "generator names must be lowercase ASCII letters: '" + name + "'");
        if (std::find(p.gen_names.begin(), p.gen_names.end(), name) != p.gen_names.end())
          throw ParseError(line_no, static_cast<int>(pos) + 1, "duplicate generator name '" + name + "'");
        p.gen_names.push_back(name);
        pos = end;
      }
      if (p.gen_names.empty())
        throw ParseError(line_no, static_cast<int>(first) + 1, "header declares no generators");
      have_header = true;
      continue;
    }

    RelatorParser rp(line, line_no, p.gen_names);
    Word w = free_reduce(rp.parse());
    if (w.empty())
      throw ParseError(line_no, static_cast<int>(first) + 1, "relator reduces to the empty word");
    w = cyclic_reduce(w);
    if (w.empty())
      throw ParseError(line_no, static_cast<int>(first) + 1, "relator reduces to the empty word");
    p.relators.push_back(std::move(w));
  }
  if (!have_header) throw ParseError(1, 1, "missing 'gens:' header line");
  return p;
}

std::string presentation_to_string(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& n : p.gen_names) {
    out += ' ';
    out += n;
  }
  out += '\n';
  for (const Word& r : p.relators) {
    out += word_to_string(r, p.gen_names);
    out += '\n';
  }
  return out;
}

}  // namespace burnlab::fp
