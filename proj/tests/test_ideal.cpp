#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gril/ideal.hpp"

using namespace gril;

namespace {

std::shared_ptr<const GradedRing> zmod_trivial(uint32_t n) {
  auto r = std::make_shared<BasisRing>(RingPresentation::zmod(n));
  return std::make_shared<GradedRing>(r, GradingGroup::trivial(), std::vector<uint32_t>{0});
}

std::shared_ptr<const GradedRing> z18i_c2() {
  auto r = std::make_shared<BasisRing>(
      RingPresentation::poly(RingPresentation::zmod(18), {Elem{1}, Elem{0}}));
  return std::make_shared<GradedRing>(r, GradingGroup::cyclic(2), std::vector<uint32_t>{0, 1});
}

std::shared_ptr<const GradedRing> z50x_graded() {
  auto r = std::make_shared<BasisRing>(RingPresentation::truncated(RingPresentation::zmod(50), 3));
  return std::make_shared<GradedRing>(r, GradingGroup::bounded_integer(2),
                                      std::vector<uint32_t>{0, 1, 2});
}

std::shared_ptr<const GradedRing> f9_graded() {
  auto r = std::make_shared<BasisRing>(
      RingPresentation::poly(RingPresentation::zmod(3), {Elem{1}, Elem{0}}));
  return std::make_shared<GradedRing>(r, GradingGroup::cyclic(2), std::vector<uint32_t>{0, 1});
}

std::shared_ptr<const GradedRing> z2xz2_trivial() {
  auto r = std::make_shared<BasisRing>(
      RingPresentation::product({RingPresentation::zmod(2), RingPresentation::zmod(2)}));
  return std::make_shared<GradedRing>(r, GradingGroup::trivial(), std::vector<uint32_t>{0, 0});
}

std::shared_ptr<const GradedRing> z2p4_trivial() {
  RingPresentation z2 = RingPresentation::zmod(2);
  auto r = std::make_shared<BasisRing>(RingPresentation::product({z2, z2, z2, z2}));
  return std::make_shared<GradedRing>(r, GradingGroup::trivial(), std::vector<uint32_t>{0, 0, 0, 0});
}

uint64_t idx(const GradedRing& g, const std::string& text) {
  return g.ring().index_of(g.ring().parse(text));
}

GradedIdeal gen(const std::shared_ptr<const GradedRing>& g,
                const std::vector<std::string>& texts) {
  std::vector<uint64_t> xs;
  for (const std::string& t : texts) xs.push_back(idx(*g, t));
  return generate_graded_ideal(g, xs);
}

}  // namespace

TEST_CASE("principal ideal elements in the quadratic extension") {
  auto g = z18i_c2();
  GradedIdeal i9 = gen(g, {"9"});
  CHECK(i9.elements() == std::vector<uint64_t>{0, 9, 162, 171});
  CHECK(i9.size() == 4);
  CHECK(i9.contains(idx(*g, "9 + 9*X")));
  CHECK_FALSE(i9.contains(idx(*g, "3")));
  CHECK(i9.proper());
  CHECK_FALSE(i9.is_zero_ideal());
  CHECK(i9.show() == "(9)");

  GradedIdeal sq = ideal_product(i9, i9);
  CHECK(sq.same_elements(i9));

  CHECK(GradedIdeal::zero_ideal(g).is_zero_ideal());
  CHECK(GradedIdeal::zero_ideal(g).size() == 1);
  CHECK_FALSE(GradedIdeal::whole_ring(g).proper());
  CHECK(GradedIdeal::whole_ring(g).size() == 324);

  CHECK_THROWS_AS(gen(g, {"1 + X"}), Error);
}

TEST_CASE("ideal powers collapse in a chain ring") {
  auto g = zmod_trivial(8);
  GradedIdeal i2 = gen(g, {"2"});
  CHECK(ideal_power(i2, 2).elements() == std::vector<uint64_t>{0, 4});
  CHECK(ideal_power(i2, 2).same_elements(gen(g, {"4"})));
  CHECK(ideal_power(i2, 3).is_zero_ideal());
  CHECK(ideal_power(i2, 1).same_elements(i2));
  CHECK_THROWS_AS(ideal_power(i2, 0), Error);
}

TEST_CASE("sum, intersection and inclusion") {
  auto g = zmod_trivial(18);
  GradedIdeal i2 = gen(g, {"2"});
  GradedIdeal i3 = gen(g, {"3"});
  CHECK_FALSE(ideal_sum(i2, i3).proper());
  CHECK(ideal_intersection(i2, i3).same_elements(gen(g, {"6"})));
  CHECK(gen(g, {"6"}).subset_of(i2));
  CHECK(gen(g, {"6"}).subset_of(i3));
  CHECK_FALSE(i2.subset_of(i3));

  auto other = zmod_trivial(18);
  CHECK_THROWS_AS((void)ideal_sum(i2, gen(other, {"2"})), Error);
}

TEST_CASE("colon operations") {
  auto g = zmod_trivial(18);
  GradedIdeal i9 = gen(g, {"9"});
  CHECK(colon_ideal(i9, idx(*g, "6")).same_elements(gen(g, {"3"})));
  CHECK_FALSE(colon_ideal(i9, 0).proper());
  CHECK(colon_component(i9, idx(*g, "6"), 0) == std::vector<uint64_t>{0, 3, 6, 9, 12, 15});
  CHECK(colon_set(i9, idx(*g, "6")) == std::vector<uint64_t>{0, 3, 6, 9, 12, 15});

  auto t = z50x_graded();
  GradedIdeal i = gen(t, {"X", "25"});
  GradedIdeal a = colon_ideal(i, idx(*t, "10"));
  CHECK(a.contains(idx(*t, "5 + X")));
  CHECK(a.contains(idx(*t, "5")));
  CHECK_FALSE(a.contains(idx(*t, "1")));
  CHECK_FALSE(i.contains(idx(*t, "5 + X")));

  auto q = z18i_c2();
  CHECK_THROWS_AS((void)colon_ideal(gen(q, {"9"}), idx(*q, "1 + X")), Error);
  // scan colon agrees with the componentwise one on homogeneous divisors
  GradedIdeal qi = gen(q, {"9"});
  CHECK(colon_set(qi, idx(*q, "9")) == colon_ideal(qi, idx(*q, "9")).elements());
}

TEST_CASE("graded ideal enumeration counts and order") {
  CHECK(enumerate_graded_ideals(zmod_trivial(6)).size() == 4);
  CHECK(enumerate_graded_ideals(z18i_c2()).size() == 6);
  CHECK(enumerate_graded_ideals(f9_graded()).size() == 2);
  CHECK(enumerate_graded_ideals(z2xz2_trivial()).size() == 4);
  CHECK(enumerate_graded_ideals(z50x_graded()).size() == 40);
  CHECK(enumerate_graded_ideals(z2p4_trivial()).size() == 16);

  auto z4xz9 = std::make_shared<GradedRing>(
      std::make_shared<BasisRing>(
          RingPresentation::product({RingPresentation::zmod(4), RingPresentation::zmod(9)})),
      GradingGroup::trivial(), std::vector<uint32_t>{0, 0});
  CHECK(enumerate_graded_ideals(z4xz9).size() == 9);

  auto g = zmod_trivial(6);
  const std::vector<GradedIdeal>& all = enumerate_graded_ideals(g);
  CHECK(&all == &enumerate_graded_ideals(g));  // memoized
  CHECK(all[0].is_zero_ideal());
  CHECK_FALSE(all[3].proper());
  CHECK(all[1].size() <= all[2].size());
  for (const GradedIdeal& i : all)
    for (uint64_t x : i.elements())
      for (uint64_t r = 0; r < g->size(); ++r) CHECK(i.contains(g->mul(r, x)));
}

TEST_CASE("graded spectrum") {
  SpectrumInfo z8 = graded_spectrum(zmod_trivial(8));
  CHECK(z8.is_graded_local);
  CHECK(z8.unique_maximal->size() == 4);
  CHECK(z8.unique_maximal->contains(2));

  SpectrumInfo z18 = graded_spectrum(zmod_trivial(18));
  CHECK(z18.graded_maximal.size() == 2);
  CHECK_FALSE(z18.is_graded_local);
  CHECK(!z18.unique_maximal.has_value());
  std::vector<uint64_t> sizes;
  for (const GradedIdeal& m : z18.graded_maximal) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<uint64_t>{6, 9});

  SpectrumInfo t = graded_spectrum(z50x_graded());
  CHECK(t.graded_maximal.size() == 2);
  CHECK_FALSE(t.is_graded_local);
}

TEST_CASE("quotient by a principal ideal") {
  auto g = z18i_c2();
  auto q = QuotientRing::create(g, gen(g, {"9"}));
  CHECK(q->size() == 81);
  CHECK(q->rep(0) == 0);
  CHECK(q->project(0) == 0);
  CHECK(q->project(idx(*g, "9")) == 0);
  CHECK(q->project(idx(*g, "9 + 9*X")) == 0);
  CHECK(q->show(q->one()) == "1");

  uint64_t units = 0;
  for (uint64_t a = 0; a < q->size(); ++a) units += q->is_unit(a);
  CHECK(units == 72);

  // projection respects both operations on a sample
  for (uint64_t a = 0; a < g->size(); a += 7)
    for (uint64_t b = 0; b < g->size(); b += 11) {
      CHECK(q->add(q->project(a), q->project(b)) == q->project(g->add(a, b)));
      CHECK(q->mul(q->project(a), q->project(b)) == q->project(g->mul(a, b)));
    }

  // grading survives: components partition, decompose is consistent
  CHECK(q->realized_degrees() == std::vector<uint32_t>{0, 1});
  CHECK(q->component_indices(0).size() * q->component_indices(1).size() == q->size());
  for (uint64_t a = 0; a < q->size(); ++a) {
    uint64_t back = 0;
    for (const auto& [d, part] : q->decompose(a)) {
      CHECK(q->in_component(part, d));
      back = q->add(back, part);
    }
    CHECK(back == a);
  }
}

TEST_CASE("quotient of the integers mod 6") {
  auto g = zmod_trivial(6);
  auto q = QuotientRing::create(g, gen(g, {"3"}));
  REQUIRE(q->size() == 3);
  CHECK(q->rep(1) == 1);
  CHECK(q->rep(2) == 2);
  CHECK_FALSE(q->is_unit(0));
  CHECK(q->is_unit(1));
  CHECK(q->is_unit(2));
  CHECK(q->mul(2, 2) == 1);

  // (2, 3) = (1), and the zero ring is not a valid quotient
  CHECK_FALSE(gen(g, {"2", "3"}).proper());
  CHECK_THROWS_AS(QuotientRing::create(g, gen(g, {"2", "3"})), Error);
  CHECK_THROWS_AS(QuotientRing::create(g, GradedIdeal::whole_ring(g)), Error);
}

TEST_CASE("quotient by the zero ideal mirrors the base ring") {
  auto g = z18i_c2();
  auto q = QuotientRing::create(g, GradedIdeal::zero_ideal(g));
  REQUIRE(q->size() == g->size());
  for (uint64_t a = 0; a < q->size(); ++a) {
    CHECK(q->rep(a) == a);
    CHECK(q->is_unit(a) == g->is_unit(a));
  }
}

TEST_CASE("ideal correspondence through a quotient") {
  auto g = z18i_c2();
  GradedIdeal j = gen(g, {"9"});
  auto q = QuotientRing::create(g, j);

  const std::vector<GradedIdeal>& down = enumerate_graded_ideals(q);
  CHECK(down.size() == 3);  // ideals of the base containing (9): (9), (3), (1)

  size_t over = 0;
  for (const GradedIdeal& i : enumerate_graded_ideals(g)) {
    if (!j.subset_of(i)) continue;
    ++over;
    GradedIdeal lifted = q->lift_ideal(q->project_ideal(i));
    CHECK(lifted.same_elements(i));
  }
  CHECK(over == down.size());

  GradedIdeal i3 = gen(g, {"3"});
  GradedIdeal img = q->project_ideal(i3);
  CHECK(img.size() == 9);
  CHECK(img.contains(q->project(idx(*g, "3"))));
  CHECK(q->lift_ideal(img).same_elements(i3));
}

TEST_CASE("localization as a quotient by the kernel") {
  auto g = zmod_trivial(6);
  Localization loc = localize(g, {idx(*g, "1"), idx(*g, "3")});
  CHECK(loc.kernel.elements() == std::vector<uint64_t>{0, 2, 4});
  CHECK(loc.ring->size() == 2);
  CHECK(loc.ring->project(idx(*g, "3")) == loc.ring->one());
  CHECK(!localization_oracle_mismatch(*g, {idx(*g, "1"), idx(*g, "3")}, *loc.ring).has_value());

  Localization triv = localize(g, {idx(*g, "1")});
  CHECK(triv.kernel.is_zero_ideal());
  CHECK(triv.ring->size() == 6);
  CHECK(!localization_oracle_mismatch(*g, {idx(*g, "1")}, *triv.ring).has_value());

  // mismatched model is reported
  CHECK(localization_oracle_mismatch(*g, {idx(*g, "1"), idx(*g, "3")}, *triv.ring).has_value());
}

TEST_CASE("localizing at homogeneous units changes nothing") {
  auto g = z18i_c2();
  std::vector<uint64_t> units;
  for (uint64_t x : g->homogeneous_indices())
    if (g->is_unit(x)) units.push_back(x);
  CHECK(units.size() == 12);
  Localization loc = localize(g, units);
  CHECK(loc.kernel.is_zero_ideal());
  CHECK(loc.ring->size() == 324);
}

TEST_CASE("multiplicative set validation") {
  auto g = zmod_trivial(6);
  CHECK_THROWS_AS(localize(g, {idx(*g, "3")}), Error);                  // no 1
  CHECK_THROWS_AS(localize(g, {idx(*g, "1"), 0}), Error);               // has 0
  CHECK_THROWS_AS(localize(g, {idx(*g, "1"), idx(*g, "2")}), Error);    // not closed
  auto q = z18i_c2();
  CHECK_THROWS_AS(localize(q, {idx(*q, "1"), idx(*q, "1 + X")}), Error);  // not homogeneous
}

TEST_CASE("multiplicative set enumeration") {
  auto g = zmod_trivial(6);
  std::vector<std::vector<uint64_t>> all = enumerate_multiplicative_sets(g, false);
  CHECK(all.size() == 7);
  for (const std::vector<uint64_t>& s : all) {
    CHECK(std::binary_search(s.begin(), s.end(), g->one()));
    CHECK(!std::binary_search(s.begin(), s.end(), uint64_t{0}));
    Localization loc = localize(g, s);
    CHECK(!localization_oracle_mismatch(*g, s, *loc.ring).has_value());
  }
  std::vector<std::vector<uint64_t>> dedup = enumerate_multiplicative_sets(g, true);
  CHECK(dedup.size() == 3);
}

TEST_CASE("product construction and product ideals") {
  auto a = zmod_trivial(4);
  auto b = zmod_trivial(9);
  std::shared_ptr<const GradedRing> p = product_construction(*a, *b);
  CHECK(p->size() == 36);
  CHECK(p->ring().show(p->ring().element_at(1)) == "(0, 1)");
  CHECK(p->ring().show(p->ring().element_at(9)) == "(1, 0)");

  GradedIdeal i = product_ideal(p, gen(a, {"2"}), GradedIdeal::whole_ring(b));
  CHECK(i.size() == 18);
  CHECK(i.contains(p->ring().index_of(p->ring().parse("(2, 7)"))));
  CHECK_FALSE(i.contains(p->ring().index_of(p->ring().parse("(1, 0)"))));

  GradedIdeal z = product_ideal(p, GradedIdeal::zero_ideal(a), GradedIdeal::zero_ideal(b));
  CHECK(z.is_zero_ideal());
  CHECK_FALSE(product_ideal(p, GradedIdeal::whole_ring(a), GradedIdeal::whole_ring(b)).proper());

  CHECK_THROWS_AS((void)product_construction(*a, *z18i_c2()), Error);

  // a graded product: both factors graded by parity
  auto f = f9_graded();
  auto q = z18i_c2();
  std::shared_ptr<const GradedRing> fp = product_construction(*q, *f);
  CHECK(fp->size() == 324 * 9);
  CHECK(fp->realized_degrees() == std::vector<uint32_t>{0, 1});
  GradedIdeal m = product_ideal(fp, gen(q, {"9"}), GradedIdeal::zero_ideal(f));
  CHECK(m.size() == 4);
  CHECK(ideal_product(m, m).same_elements(m));
}
