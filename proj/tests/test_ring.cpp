#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gril/ring.hpp"

using namespace gril;

namespace {

RingPresentation z18i_pres() {
  // Z_18[X]/(X^2 + 1)
  return RingPresentation::poly(RingPresentation::zmod(18), {Elem{1}, Elem{0}});
}

RingPresentation z50x_pres() {
  // Z_50[X]/(X^3)
  return RingPresentation::truncated(RingPresentation::zmod(50), 3);
}

}  // namespace

TEST_CASE("residue ring arithmetic") {
  BasisRing r(RingPresentation::zmod(18));
  CHECK(r.size() == 18);
  CHECK(r.mul(Elem{9}, Elem{9}) == Elem{9});
  CHECK(r.add(Elem{13}, Elem{7}) == Elem{2});
  CHECK(r.sub(Elem{3}, Elem{5}) == Elem{16});
  CHECK(r.neg(Elem{1}) == Elem{17});
  CHECK(r.scalar(-1) == Elem{17});
  CHECK(r.scalar(20) == Elem{2});
  CHECK(r.show(Elem{9}) == "9");
  CHECK(r.parse("9") == Elem{9});
  CHECK(r.parse("-1") == Elem{17});
}

TEST_CASE("enumeration order: residue ring counts upward") {
  BasisRing r(RingPresentation::zmod(4));
  for (uint64_t i = 0; i < 4; ++i) {
    CHECK(r.show(r.element_at(i)) == std::to_string(i));
    CHECK(r.index_of(r.element_at(i)) == i);
  }
}

TEST_CASE("enumeration order: first product factor is most significant") {
  BasisRing r(RingPresentation::product(
      {RingPresentation::zmod(2), RingPresentation::zmod(2)}));
  CHECK(r.size() == 4);
  CHECK(r.show(r.element_at(0)) == "(0, 0)");
  CHECK(r.show(r.element_at(1)) == "(0, 1)");
  CHECK(r.show(r.element_at(2)) == "(1, 0)");
  CHECK(r.show(r.element_at(3)) == "(1, 1)");
}

TEST_CASE("enumeration order: higher polynomial degree is more significant") {
  BasisRing r(z18i_pres());
  CHECK(r.size() == 324);
  CHECK(r.show(r.element_at(0)) == "0");
  CHECK(r.show(r.element_at(1)) == "1");
  CHECK(r.show(r.element_at(18)) == "X");
  CHECK(r.show(r.element_at(19)) == "1 + X");
  CHECK(r.index_of(r.parse("5 + X")) == 23);

  BasisRing t(z50x_pres());
  CHECK(t.size() == 125000);
  CHECK(t.show(t.element_at(50)) == "X");
  CHECK(t.show(t.element_at(2500)) == "X^2");
  CHECK(t.show(t.element_at(2551)) == "1 + X + X^2");
}

TEST_CASE("quadratic quotient multiplies with the folded relation") {
  BasisRing r(z18i_pres());
  Elem i = r.parse("X");
  CHECK(i == Elem{0, 1});
  CHECK(r.mul(i, i) == Elem{17, 0});  // X^2 = -1
  Elem a = r.parse("2 + 3*X");
  Elem b = r.parse("4 + 5*X");
  // (2+3i)(4+5i) = 8 + 22i + 15 i^2 = -7 + 22i = 11 + 4i mod 18
  CHECK(r.show(r.mul(a, b)) == "11 + 4*X");
}

TEST_CASE("truncated quotient kills high powers") {
  BasisRing r(z50x_pres());
  Elem x = r.parse("X");
  CHECK(r.show(r.mul(x, x)) == "X^2");
  CHECK(r.is_zero(r.mul(r.mul(x, x), x)));
  Elem a = r.parse("1 + 2*X + 3*X^2");
  Elem b = r.parse("5 + 7*X");
  // (1+2X+3X^2)(5+7X) = 5 + 17X + 29X^2 + (dropped)
  CHECK(r.show(r.mul(a, b)) == "5 + 17*X + 29*X^2");
}

TEST_CASE("product ring multiplies factorwise") {
  BasisRing r(RingPresentation::product(
      {RingPresentation::zmod(2), RingPresentation::zmod(3)}));
  CHECK(r.size() == 6);
  Elem a = r.parse("(1, 2)");
  Elem b = r.parse("(1, 2)");
  CHECK(r.show(r.mul(a, b)) == "(1, 1)");
  CHECK(r.one() == r.parse("(1, 1)"));
  CHECK(r.scalar(5) == r.parse("(1, 2)"));
}

TEST_CASE("structural unit test agrees with the inverse scan") {
  std::vector<RingPresentation> rings;
  rings.push_back(RingPresentation::zmod(12));
  rings.push_back(z18i_pres());
  rings.push_back(RingPresentation::product(
      {RingPresentation::zmod(4), RingPresentation::zmod(9)}));
  rings.push_back(RingPresentation::poly(RingPresentation::zmod(3), {Elem{1}, Elem{0}}));
  rings.push_back(RingPresentation::truncated(RingPresentation::zmod(8), 2));
  for (const auto& pres : rings) {
    BasisRing r(pres);
    for (uint64_t i = 0; i < r.size(); ++i) {
      Elem a = r.element_at(i);
      CHECK(r.is_unit(a) == r.is_unit_scan(a));
    }
  }
}

TEST_CASE("unit counts of reference rings") {
  BasisRing z18(RingPresentation::zmod(18));
  uint64_t count = 0;
  for (uint64_t i = 0; i < z18.size(); ++i)
    if (z18.is_unit(z18.element_at(i))) ++count;
  CHECK(count == 6);  // phi(18)

  BasisRing f9(RingPresentation::poly(RingPresentation::zmod(3), {Elem{1}, Elem{0}}));
  count = 0;
  for (uint64_t i = 0; i < f9.size(); ++i)
    if (f9.is_unit(f9.element_at(i))) ++count;
  CHECK(count == 8);  // field with 9 elements

  BasisRing t(z50x_pres());
  count = 0;
  for (uint64_t i = 0; i < t.size(); ++i)
    if (t.is_unit(t.element_at(i))) ++count;
  CHECK(count == 50000);  // phi(50) * 50 * 50
  CHECK_FALSE(t.is_unit(t.parse("X")));
  CHECK(t.is_unit(t.parse("1 + X")));
  CHECK_FALSE(t.is_unit(t.parse("2")));
}

TEST_CASE("element classification") {
  BasisRing z18(RingPresentation::zmod(18));
  ElemClass c9 = z18.classify_element(Elem{9});
  CHECK(c9.idempotent);
  CHECK_FALSE(c9.unit);
  CHECK(c9.zero_divisor);
  CHECK(z18.is_nilpotent(Elem{6}));
  CHECK_FALSE(z18.is_nilpotent(Elem{9}));
  CHECK(z18.annihilator(Elem{9}).size() == 9);  // even residues

  BasisRing t(z50x_pres());
  CHECK(t.is_nilpotent(t.parse("X")));
  CHECK(t.is_nilpotent(t.parse("10 + X")));
  CHECK_FALSE(t.is_nilpotent(t.parse("2")));

  BasisRing p(RingPresentation::product(
      {RingPresentation::zmod(2), RingPresentation::zmod(3)}));
  CHECK(p.is_idempotent(p.parse("(1, 0)")));
  CHECK(p.is_idempotent(p.parse("(0, 1)")));
  CHECK_FALSE(p.is_idempotent(p.parse("(1, 2)")));
}

TEST_CASE("parse rejects malformed literals") {
  BasisRing z12(RingPresentation::zmod(12));
  CHECK_THROWS_AS(z12.parse("(1, 2)"), Error);
  CHECK_THROWS_AS(z12.parse("X"), Error);
  CHECK_THROWS_AS(z12.parse(""), Error);

  BasisRing p(RingPresentation::product(
      {RingPresentation::zmod(2), RingPresentation::zmod(3)}));
  CHECK_THROWS_AS(p.parse("(1, 2, 3)"), Error);

  BasisRing q(z18i_pres());
  CHECK_THROWS_AS(q.parse("Y + 1"), Error);
  CHECK(q.parse("X^2") == Elem{17, 0});  // reduced by the relation
  CHECK(q.parse("X - 1") == Elem{17, 1});
  CHECK(q.parse("-X") == Elem{0, 17});
}

TEST_CASE("show and parse round-trip") {
  std::vector<RingPresentation> rings;
  rings.push_back(RingPresentation::zmod(9));
  rings.push_back(z18i_pres());
  rings.push_back(RingPresentation::product(
      {RingPresentation::zmod(4), RingPresentation::zmod(9)}));
  rings.push_back(RingPresentation::truncated(RingPresentation::zmod(4), 3));
  for (const auto& pres : rings) {
    BasisRing r(pres);
    for (uint64_t i = 0; i < r.size(); ++i) {
      Elem a = r.element_at(i);
      CHECK(r.parse(r.show(a)) == a);
    }
  }
}

TEST_CASE("ring axioms hold on reference rings") {
  CHECK_FALSE(check_ring_axioms(BasisRing(RingPresentation::zmod(12))).has_value());
  CHECK_FALSE(check_ring_axioms(BasisRing(z18i_pres())).has_value());
  CHECK_FALSE(check_ring_axioms(BasisRing(z50x_pres())).has_value());
  CHECK_FALSE(check_ring_axioms(BasisRing(RingPresentation::product(
                  {RingPresentation::zmod(2), RingPresentation::zmod(3)})))
                  .has_value());
}

TEST_CASE("size limit is enforced") {
  Limits lim;
  lim.max_ring_size = 100;
  CHECK_THROWS_AS(BasisRing(RingPresentation::zmod(101), lim), Error);
  try {
    BasisRing r(RingPresentation::zmod(101), lim);
  } catch (const Error& e) {
    CHECK(e.code() == Err::SizeExceeded);
  }
  CHECK_THROWS_AS(BasisRing(RingPresentation::zmod(1)), Error);
}
