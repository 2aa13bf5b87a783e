#include <doctest.h>

#include <algorithm>
#include <vector>

#include "burnlab/burnside.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/perm.hpp"
#include "burnlab/presentation.hpp"
#include "burnlab/word.hpp"

using namespace burnlab;
using namespace burnlab::bg;
using fp::Word;
using fp::perm_order;
using fp::word_pow;

TEST_CASE("relator instantiation: length-1 classes only") {
  std::vector<Word> rels = burnside_relators(2, 3, 1);
  REQUIRE(rels.size() == 2);
  CHECK(rels[0] == Word{1, 1, 1});
  CHECK(rels[1] == Word{2, 2, 2});
}

TEST_CASE("relator instantiation: length-2 classes add ab and ab'") {
  std::vector<Word> rels = burnside_relators(2, 3, 2);
  REQUIRE(rels.size() == 4);
  CHECK(rels[0] == Word{1, 1, 1});
  CHECK(rels[1] == Word{2, 2, 2});
  CHECK(rels[2] == word_pow(Word{1, 2}, 3));
  CHECK(rels[3] == word_pow(Word{1, -2}, 3));
}

TEST_CASE("relator instantiation: one generator collapses to a single class") {
  std::vector<Word> rels = burnside_relators(1, 5, 3);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0] == Word{1, 1, 1, 1, 1});
}

TEST_CASE("relator classes exclude rotations, inverses, and proper powers") {
  // At L=3 over two generators the classes of length 3 are aab, abb, aab',
  // ab'b' (aaa = a proper power, aba ~ rotation of aab, etc.).
  std::vector<Word> rels = burnside_relators(2, 2, 3);
  std::vector<Word> bases;
  for (const Word& r : rels) {
    // each relator is w^2; recover w as the first half
    bases.emplace_back(r.begin(), r.begin() + static_cast<long>(r.size() / 2));
  }
  std::vector<Word> expected = {{1},      {2},      {1, 2},      {1, -2},
                                {1, 1, 2}, {1, 1, -2}, {1, 2, 2}, {1, -2, -2}};
  CHECK(bases == expected);
}

TEST_CASE("burnside orders match the letter values") {
  BurnsideSpec spec;

  spec.m = 2;
  spec.n = 2;
  BurnsideResult b22 = compute_burnside(spec);
  CHECK(b22.order == 4);
  CHECK(b22.exponent_certified);

  spec.m = 2;
  spec.n = 3;
  BurnsideResult b23 = compute_burnside(spec);
  CHECK(b23.order == 27);
  CHECK(b23.exponent_certified);

  spec.m = 3;
  spec.n = 3;
  BurnsideResult b33 = compute_burnside(spec);
  CHECK(b33.order == 2187);
  CHECK(b33.exponent_certified);

  spec.m = 2;
  spec.n = 4;
  BurnsideResult b24 = compute_burnside(spec);
  CHECK(b24.order == 4096);
  CHECK(b24.exponent_certified);
}

TEST_CASE("one-generator burnside groups are cyclic of order n") {
  for (int n : {2, 3, 5, 9}) {
    BurnsideSpec spec;
    spec.m = 1;
    spec.n = n;
    BurnsideResult r = compute_burnside(spec);
    CHECK(r.order == static_cast<std::uint64_t>(n));
    CHECK(r.exponent_certified);
  }
}

TEST_CASE("certification soundness: every regular element satisfies g^n = 1") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    BurnsideSpec spec;
    spec.m = m;
    spec.n = n;
    BurnsideResult r = compute_burnside(spec);
    REQUIRE(r.exponent_certified);
    fp::PermGroupView g = fp::regular_representation(r.table);
    std::vector<fp::Perm> elements = fp::perm_group_elements(g, 5000);
    CHECK(elements.size() == r.order);
    for (const fp::Perm& e : elements) CHECK(n % perm_order(e) == 0);
  }
}

TEST_CASE("B(2,3) is non-abelian of exponent 3") {
  BurnsideSpec spec;
  spec.m = 2;
  spec.n = 3;
  BurnsideResult r = compute_burnside(spec);
  fp::PermGroupView g = fp::regular_representation(r.table);
  CHECK(fp::perm_group_exponent(g, 5000) == 3);
  CHECK(!fp::perm_gens_commute(g));
}

TEST_CASE("order is invariant under permuting generator labels") {
  // Relabel generators 1 <-> 2 in every relator and re-enumerate.
  std::vector<Word> rels = burnside_relators(2, 3, 2);
  fp::Presentation p;
  p.gen_names = {"a", "b"};
  for (Word w : rels) {
    for (int& l : w) l = (l > 0) ? 3 - l : -(3 - (-l));
    p.relators.push_back(w);
  }
  fp::CosetTable t = fp::coset_enumerate(p, {});
  CHECK(t.nrows() == 27);
}

TEST_CASE("undecided cases raise the distinct error") {
  BurnsideSpec spec;
  spec.m = 2;
  spec.n = 5;
  spec.max_word_len = 3;
  spec.max_cosets = 20000;
  CHECK_THROWS_AS(compute_burnside(spec), UndecidedError);
}

TEST_CASE("spec validation") {
  BurnsideSpec spec;
  spec.m = 0;
  CHECK_THROWS_AS(compute_burnside(spec), DomainError);
  spec.m = 2;
  spec.n = 1;
  CHECK_THROWS_AS(compute_burnside(spec), DomainError);
}

TEST_CASE("generator names extend spreadsheet-style") {
  CHECK(burnside_gen_name(0) == "a");
  CHECK(burnside_gen_name(25) == "z");
  CHECK(burnside_gen_name(26) == "aa");
  CHECK(burnside_gen_name(27) == "ab");
}

TEST_CASE("regular exponent check on a hand-built cyclic table") {
  fp::Presentation p = fp::parse_presentation("gens: a\na^6\n");
  fp::CosetTable t = fp::coset_enumerate(p, {});
  CHECK(regular_exponent_divides(t, 6));
  CHECK(regular_exponent_divides(t, 12));
  CHECK(!regular_exponent_divides(t, 3));
  CHECK(!regular_exponent_divides(t, 2));
}
