#include <doctest.h>

#include <map>
#include <numeric>
#include <vector>

#include "burnlab/algebra.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/perm.hpp"
#include "burnlab/presentation.hpp"
#include "burnlab/psl.hpp"
#include "oracles.hpp"

using namespace burnlab;
using namespace burnlab::psl;

namespace {

const char* k504Text =
    "gens: a b\n"
    "a^7\n"
    "b^2\n"
    "(ab)^3\n"
    "(a^3 b a^5 b a^3 b)^2\n";

algebra::FiniteField field_q(unsigned q) {
  switch (q) {
    case 2: return algebra::FiniteField::prime_field(2);
    case 3: return algebra::FiniteField::prime_field(3);
    case 4: return algebra::FiniteField(2, 2, {1, 1, 1});
    case 5: return algebra::FiniteField::prime_field(5);
    case 7: return algebra::FiniteField::prime_field(7);
    case 8: return algebra::FiniteField::gf8();
    default: throw std::logic_error("unexpected q");
  }
}

std::uint64_t psl_order_formula(std::uint64_t q) {
  return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

}  // namespace

TEST_CASE("group sizes match q(q^2-1)/gcd(2,q-1)") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    algebra::FiniteField f = field_q(q);
    std::vector<ProjMat2> g = build_psl2(f);
    CHECK(g.size() == psl_order_formula(q));
  }
}

TEST_CASE("q=2 gives the 6-element group, exhaustively verified") {
  algebra::FiniteField f = field_q(2);
  std::vector<ProjMat2> g = build_psl2(f);
  REQUIRE(g.size() == 6);
  // Independent oracle: count all det-1 matrices over GF(2) directly.
  int count = 0;
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 2; ++c)
        for (std::uint32_t d = 0; d < 2; ++d)
          if ((a * d + b * c) % 2 == 1) ++count;  // char 2: ad - bc = ad + bc
  CHECK(count == 6);
  // It is nonabelian of exponent lcm(1,2,3) = 6 (isomorphic to the symmetric
  // group on 3 letters).
  std::map<std::uint64_t, int> hist;
  for (const ProjMat2& m : g) ++hist[proj_element_order(m, 10)];
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 2);
}

TEST_CASE("q=3 gives the 12-element group, exhaustively verified") {
  algebra::FiniteField f = field_q(3);
  std::vector<ProjMat2> g = build_psl2(f);
  REQUIRE(g.size() == 12);
  // Independent oracle: det-1 matrices over GF(3) modulo +-I.
  int count = 0;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c)
        for (std::uint32_t d = 0; d < 3; ++d)
          if ((3 + a * d % 3 - b * c % 3) % 3 == 1) ++count;
  CHECK(count / 2 == 12);  // scalars {I, -I} identified
  // Element-order histogram of the 12-element rotation group: 1,2,3 with
  // multiplicities 1,3,8.
  std::map<std::uint64_t, int> hist;
  for (const ProjMat2& m : g) ++hist[proj_element_order(m, 10)];
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 8);
}

TEST_CASE("PSL(2,8) has 504 elements with the frozen class sizes") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> g = build_psl2(f);
  REQUIRE(g.size() == oracles::kPsl28Order);
  ConjClassReport report = conj_classes(g);
  CHECK(report.order == oracles::kPsl28Order);
  CHECK(report.class_sizes == oracles::kPsl28ClassSizes);
  // Class sizes divide the group order (orbit-stabilizer).
  for (std::uint64_t s : report.class_sizes) CHECK(report.order % s == 0);
}

TEST_CASE("PSL(2,8) element orders divide 2, 3, 7, or 9") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> g = build_psl2(f);
  std::map<std::uint64_t, std::uint64_t> hist;
  std::uint64_t exponent = 1;
  for (const ProjMat2& m : g) {
    std::uint64_t ord = proj_element_order(m, 504);
    bool divides_one = (2 % ord == 0) || (3 % ord == 0) || (7 % ord == 0) || (9 % ord == 0);
    CHECK(divides_one);
    ++hist[ord];
    exponent = std::lcm(exponent, ord);
  }
  CHECK(hist == oracles::kPsl28OrderHistogram);
  CHECK(126 % exponent == 0);  // lcm of orders divides 2 * 3^2 * 7
}

TEST_CASE("simplicity by class equation") {
  algebra::FiniteField f = field_q(8);
  ConjClassReport psl28 = conj_classes(build_psl2(f));
  CHECK(is_simple_by_class_equation(psl28));

  ConjClassReport c4;
  c4.order = 4;
  c4.class_sizes = {1, 1, 1, 1};
  CHECK(!is_simple_by_class_equation(c4));

  ConjClassReport s3;
  s3.order = 6;
  s3.class_sizes = {1, 2, 3};
  CHECK(!is_simple_by_class_equation(s3));

  ConjClassReport trivial;
  trivial.order = 1;
  trivial.class_sizes = {1};
  CHECK(is_simple_by_class_equation(trivial));
}

TEST_CASE("conjugacy classes of an abelian matrix group are singletons") {
  // C4 generated by [[2,0],[0,3]] over Z/5Z.
  algebra::ModRing r(5);
  std::vector<algebra::ModMat2> gens = {
      algebra::ModMat2(r.make(2), r.make(0), r.make(0), r.make(3))};
  std::vector<algebra::ModMat2> c4 = algebra::group_closure(gens);
  REQUIRE(c4.size() == 4);
  ConjClassReport report = conj_classes(c4);
  CHECK(report.class_sizes == std::vector<std::uint64_t>{1, 1, 1, 1});
}

TEST_CASE("conj_classes rejects non-closed input") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> g = build_psl2(f);
  g.erase(g.begin() + 10, g.end());  // a closure-violating subset
  CHECK_THROWS_AS(conj_classes(g), DomainError);
}

TEST_CASE("presentation homomorphism verification") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> group = build_psl2(f);
  fp::Presentation p = fp::parse_presentation(k504Text);

  auto witness = search_presentation_images(p, group);
  REQUIRE(witness.has_value());
  REQUIRE(witness->size() == 2);
  CHECK(verify_presentation_hom(p, *witness, group));
  CHECK(proj_element_order((*witness)[0], 10) == 7);
  CHECK(proj_element_order((*witness)[1], 10) == 2);

  // Trivial images satisfy the relators but do not generate.
  std::vector<ProjMat2> trivial = {ProjMat2::identity(f), ProjMat2::identity(f)};
  CHECK(!verify_presentation_hom(p, trivial, group));

  // An image of the wrong order violates the first relator.
  std::vector<ProjMat2> wrong = {(*witness)[1], (*witness)[1]};
  CHECK(!verify_presentation_hom(p, wrong, group));

  std::vector<ProjMat2> short_list = {(*witness)[0]};
  CHECK_THROWS_AS(verify_presentation_hom(p, short_list, group), DomainError);
}

TEST_CASE("witness search respects order constraints") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> group = build_psl2(f);

  // 5 does not divide 504, so no element of order 5 exists.
  fp::Presentation a5 = fp::parse_presentation("gens: a\na^5\n");
  CHECK(!search_presentation_images(a5, group).has_value());

  // With generation required, a^7 has no witness: a single element generates
  // a cyclic subgroup, never all 504. Dropping the requirement, a witness
  // exists (the canonical-first one is the identity, whose order divides 7),
  // and order-7 witnesses exist too.
  fp::Presentation a7 = fp::parse_presentation("gens: a\na^7\n");
  CHECK(!search_presentation_images(a7, group).has_value());
  auto w = search_presentation_images(a7, group, false);
  REQUIRE(w.has_value());
  CHECK(7 % proj_element_order((*w)[0], 10) == 0);
  std::size_t order7 = 0;
  for (const ProjMat2& m : group)
    if (proj_element_order(m, 504) == 7) ++order7;
  CHECK(order7 == 216);
}

TEST_CASE("isomorphism cross-check: identical order and exponent") {
  algebra::FiniteField f = field_q(8);
  std::vector<ProjMat2> group = build_psl2(f);
  fp::Presentation p = fp::parse_presentation(k504Text);
  fp::CosetTable t = fp::coset_enumerate(p, {});
  REQUIRE(t.nrows() == static_cast<std::int64_t>(group.size()));

  std::uint64_t psl_exponent = 1;
  for (const ProjMat2& m : group)
    psl_exponent = std::lcm(psl_exponent, proj_element_order(m, 504));
  fp::PermGroupView g = fp::regular_representation(t);
  CHECK(fp::perm_group_exponent(g, 5000) == psl_exponent);
}

TEST_CASE("projective matrices reject non-unit determinants") {
  algebra::FiniteField f = field_q(8);
  algebra::FFElem g = f.generator();
  CHECK_THROWS_AS(ProjMat2(algebra::FFMat2(g, f.zero(), f.zero(), f.one())), DomainError);
}

TEST_CASE("odd-characteristic projective equality identifies scalar multiples") {
  algebra::FiniteField f = field_q(7);
  // -I and I are the same projective element.
  algebra::FFElem m1 = -f.one();
  ProjMat2 minus_i(algebra::FFMat2(m1, f.zero(), f.zero(), m1));
  CHECK(minus_i == ProjMat2::identity(f));
  CHECK(minus_i.is_identity());
}
