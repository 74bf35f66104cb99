#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gril/grading.hpp"

using namespace gril;

namespace {

std::shared_ptr<const BasisRing> make_ring(const RingPresentation& p) {
  return std::make_shared<BasisRing>(p);
}

GradedRing z18i_c2() {
  auto r = make_ring(RingPresentation::poly(RingPresentation::zmod(18), {Elem{1}, Elem{0}}));
  return GradedRing(r, GradingGroup::cyclic(2), {0, 1});
}

GradedRing z50x_graded() {
  auto r = make_ring(RingPresentation::truncated(RingPresentation::zmod(50), 3));
  return GradedRing(r, GradingGroup::bounded_integer(2), {0, 1, 2});
}

}  // namespace

TEST_CASE("degree label algebra") {
  GradingGroup c2 = GradingGroup::cyclic(2);
  CHECK(c2.label_count() == 2);
  CHECK(c2.compose(1, 1) == 0u);
  CHECK(c2.inverse(1) == 1u);

  GradingGroup b2 = GradingGroup::bounded_integer(2);
  CHECK(b2.label_count() == 3);
  CHECK(b2.compose(1, 1) == 2u);
  CHECK_FALSE(b2.compose(1, 2).has_value());
  CHECK(b2.inverse(0) == 0u);
  CHECK_FALSE(b2.inverse(1).has_value());

  GradingGroup tr = GradingGroup::trivial();
  CHECK(tr.label_count() == 1);
  CHECK(tr.compose(0, 0) == 0u);

  CHECK_THROWS_AS(GradingGroup::cyclic(1), Error);
}

TEST_CASE("quadratic extension graded by parity validates") {
  GradedRing g = z18i_c2();
  CHECK(g.validate().outcome == Outcome::Pass);
  CHECK(g.component_size(0) == 18);
  CHECK(g.component_size(1) == 18);
  CHECK(g.homogeneous_count() == 35);
  CHECK(g.homogeneous().size() == 35);
  CHECK(g.component(1).size() == 18);
  CHECK(g.in_component(g.ring().parse("X"), 1));
  CHECK(g.in_component(g.ring().parse("0"), 1));
  CHECK_FALSE(g.in_component(g.ring().parse("1 + X"), 1));
  CHECK(g.realized_degrees() == std::vector<uint32_t>{0, 1});
}

TEST_CASE("wrong degree group is rejected with a product witness") {
  auto r = make_ring(RingPresentation::poly(RingPresentation::zmod(18), {Elem{1}, Elem{0}}));
  GradedRing g(r, GradingGroup::cyclic(3), {0, 1});
  CHECK(g.validate().outcome == Outcome::Fail);
  REQUIRE(g.validate().witness.size() == 2);
  CHECK(g.validate().witness[0].shown == "X");
  CHECK(g.validate().witness[1].shown == "X");
  CHECK_THROWS_AS(g.require_valid(), Error);
}

TEST_CASE("unity must sit in the identity component") {
  auto r = make_ring(RingPresentation::poly(RingPresentation::zmod(18), {Elem{1}, Elem{0}}));
  GradedRing g(r, GradingGroup::cyclic(2), {1, 0});
  CHECK(g.validate().outcome == Outcome::Fail);
  CHECK(g.validate().witness[0].role == "unity");

  auto p = make_ring(RingPresentation::product({RingPresentation::zmod(2), RingPresentation::zmod(2)}));
  GradedRing gp(p, GradingGroup::cyclic(2), {0, 1});
  CHECK(gp.validate().outcome == Outcome::Fail);
}

TEST_CASE("homogeneous decomposition splits along slots") {
  GradedRing g = z18i_c2();
  Elem a = g.ring().parse("3 + 4*X");
  auto parts = g.decompose(a);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0) == g.ring().parse("3"));
  CHECK(parts.at(1) == g.ring().parse("4*X"));
  Elem sum = g.ring().add(parts.at(0), parts.at(1));
  CHECK(sum == a);
  CHECK(g.decompose(g.ring().zero()).empty());
  CHECK(g.degree_of(g.ring().parse("4*X")) == 1u);
  CHECK_FALSE(g.degree_of(a).has_value());
  CHECK(g.is_homogeneous(g.ring().zero()));
  CHECK_FALSE(g.is_homogeneous(a));
}

TEST_CASE("truncated ring under the bounded integer grading") {
  GradedRing g = z50x_graded();
  CHECK(g.validate().outcome == Outcome::Pass);
  CHECK(g.component_size(0) == 50);
  CHECK(g.component_size(1) == 50);
  CHECK(g.component_size(2) == 50);
  CHECK(g.homogeneous_count() == 148);
  CHECK(g.realized_degrees() == std::vector<uint32_t>{0, 1, 2});
  CHECK(g.in_component(g.ring().parse("7*X"), 1));

  // the bound only accepts a matching truncation
  auto z = make_ring(RingPresentation::zmod(8));
  CHECK_THROWS_AS(GradedRing(z, GradingGroup::bounded_integer(2), {0}), Error);
  auto nt = make_ring(RingPresentation::poly(RingPresentation::zmod(3), {Elem{1}, Elem{0}}));
  CHECK_THROWS_AS(GradedRing(nt, GradingGroup::bounded_integer(1), {0, 1}), Error);
}

TEST_CASE("trivial grading always validates and holds everything in R_e") {
  auto r = make_ring(RingPresentation::product(
      {RingPresentation::zmod(2), RingPresentation::zmod(2), RingPresentation::zmod(2),
       RingPresentation::zmod(2)}));
  GradedRing g(r, GradingGroup::trivial(), {0, 0, 0, 0});
  CHECK(g.validate().outcome == Outcome::Pass);
  CHECK(g.component(0).size() == 16);
  CHECK(g.homogeneous().size() == 16);
}

TEST_CASE("graded field detection") {
  auto f9 = make_ring(RingPresentation::poly(RingPresentation::zmod(3), {Elem{1}, Elem{0}}));
  GradedRing gf9(f9, GradingGroup::cyclic(2), {0, 1});
  CHECK(gf9.validate().outcome == Outcome::Pass);
  CHECK(gf9.is_graded_field());

  CHECK_FALSE(z18i_c2().is_graded_field());

  auto z2 = make_ring(RingPresentation::zmod(2));
  GradedRing gz2(z2, GradingGroup::trivial(), {0});
  CHECK(gz2.is_graded_field());
}

TEST_CASE("components are sorted by enumeration index and cached") {
  GradedRing g = z18i_c2();
  const auto& c1 = g.component(1);
  for (size_t i = 1; i < c1.size(); ++i)
    CHECK(g.ring().index_of(c1[i - 1]) < g.ring().index_of(c1[i]));
  CHECK(&g.component(1) == &c1);
}

TEST_CASE("degree map shape errors") {
  auto r = make_ring(RingPresentation::zmod(6));
  CHECK_THROWS_AS(GradedRing(r, GradingGroup::trivial(), {0, 0}), Error);
  CHECK_THROWS_AS(GradedRing(r, GradingGroup::cyclic(2), {5}), Error);
}
