#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gril/phi.hpp"

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

std::vector<PhiMap> family() {
  return {PhiMap::empty_map(), PhiMap::zero_map(),  PhiMap::omega(),   PhiMap::power(4),
          PhiMap::power(3),   PhiMap::power(2),     PhiMap::identity()};
}

}  // namespace

TEST_CASE("map family on a chain ring") {
  auto g = zmod_trivial(8);
  GradedIdeal i2 = gen(g, {"2"});

  CHECK(apply_phi(PhiMap::empty_map(), i2).is_empty_set());
  CHECK_FALSE(apply_phi(PhiMap::empty_map(), i2).contains(0));
  CHECK(apply_phi(PhiMap::zero_map(), i2).ideal->is_zero_ideal());
  CHECK(apply_phi(PhiMap::identity(), i2).ideal->same_elements(i2));
  CHECK(apply_phi(PhiMap::power(2), i2).ideal->same_elements(gen(g, {"4"})));
  CHECK(apply_phi(PhiMap::power(3), i2).ideal->is_zero_ideal());
  CHECK(apply_phi(PhiMap::omega(), i2).ideal->is_zero_ideal());

  CHECK_THROWS_AS(PhiMap::power(1), Error);
  CHECK_THROWS_AS(PhiMap::power(0), Error);
}

TEST_CASE("stable power of an idempotent ideal is the ideal") {
  auto g = z2p4_trivial();
  GradedIdeal i = gen(g, {"(1, 0, 0, 0)"});
  CHECK(apply_phi(PhiMap::omega(), i).ideal->same_elements(i));
  CHECK(apply_phi(PhiMap::power(5), i).ideal->same_elements(i));
}

TEST_CASE("selector parsing") {
  CHECK(PhiMap::parse("empty")->kind() == PhiMap::Kind::Empty);
  CHECK(PhiMap::parse("zero")->kind() == PhiMap::Kind::Zero);
  CHECK(PhiMap::parse("identity")->kind() == PhiMap::Kind::Identity);
  CHECK(PhiMap::parse("omega")->kind() == PhiMap::Kind::Omega);
  CHECK(PhiMap::parse("power:2")->power_exponent() == 2);
  CHECK(PhiMap::parse("power:17")->power_exponent() == 17);
  CHECK_FALSE(PhiMap::parse("power:1").has_value());
  CHECK_FALSE(PhiMap::parse("power:").has_value());
  CHECK_FALSE(PhiMap::parse("power:x").has_value());
  CHECK_FALSE(PhiMap::parse("phi").has_value());
  CHECK(PhiMap::parse("power:3")->show() == "power:3");
  CHECK(PhiMap::parse("omega")->show() == "omega");
}

TEST_CASE("every map value sits inside its argument") {
  for (auto g : {zmod_trivial(8), zmod_trivial(12)})
    for (const GradedIdeal& i : enumerate_graded_ideals(g))
      for (const PhiMap& phi : family()) {
        PhiResult r = apply_phi(phi, i);
        if (!r.is_empty_set()) CHECK(r.ideal->subset_of(i));
      }
  auto q = z18i_c2();
  for (const GradedIdeal& i : enumerate_graded_ideals(q)) {
    PhiResult r = apply_phi(PhiMap::omega(), i);
    CHECK(r.ideal->subset_of(i));
  }
}

TEST_CASE("map order chain") {
  std::vector<PhiMap> chain = family();
  for (auto g : {zmod_trivial(8), zmod_trivial(12)})
    for (size_t k = 0; k + 1 < chain.size(); ++k)
      CHECK(phi_leq(chain[k], chain[k + 1], g).outcome == Outcome::Pass);
  auto q = z18i_c2();
  for (size_t k = 0; k + 1 < chain.size(); ++k)
    CHECK(phi_leq(chain[k], chain[k + 1], q).outcome == Outcome::Pass);

  CHECK(phi_leq(PhiMap::zero_map(), PhiMap::omega(), zmod_trivial(12)).outcome == Outcome::Pass);
  CHECK(phi_leq(PhiMap::power(3), PhiMap::power(2), zmod_trivial(8)).outcome == Outcome::Pass);

  Verdict bad = phi_leq(PhiMap::identity(), PhiMap::power(2), zmod_trivial(8));
  CHECK(bad.outcome == Outcome::Fail);
  REQUIRE(bad.witness.size() == 1);
  CHECK(bad.witness[0].role == "ideal");
  CHECK(bad.witness[0].shown == "(4)");
}

TEST_CASE("induced map on a quotient") {
  auto g = zmod_trivial(8);
  auto q = QuotientRing::create(g, gen(g, {"4"}));
  REQUIRE(q->size() == 4);
  GradedIdeal iq = generate_graded_ideal(q, {q->project(idx(*g, "2"))});
  CHECK(iq.size() == 2);

  PhiMap pq2 = PhiMap::induced_quotient(PhiMap::power(2), q);
  CHECK(pq2.show() == "quotient[power:2]");
  CHECK(apply_phi(pq2, iq).ideal->is_zero_ideal());

  PhiMap pqe = PhiMap::induced_quotient(PhiMap::empty_map(), q);
  CHECK(apply_phi(pqe, iq).is_empty_set());

  PhiMap pq1 = PhiMap::induced_quotient(PhiMap::identity(), q);
  CHECK(apply_phi(pq1, iq).ideal->same_elements(iq));

  CHECK_THROWS_AS(apply_phi(pq2, gen(g, {"2"})), Error);
}

TEST_CASE("induced map on a localization") {
  auto g = zmod_trivial(6);
  Localization loc = localize(g, {idx(*g, "1"), idx(*g, "3")});
  PhiMap ps = PhiMap::induced_localized(PhiMap::identity(), loc.ring);
  CHECK(ps.show() == "localized[identity]");

  GradedIdeal z = GradedIdeal::zero_ideal(loc.ring);
  CHECK(apply_phi(ps, z).ideal->is_zero_ideal());
  GradedIdeal whole = GradedIdeal::whole_ring(loc.ring);
  CHECK_FALSE(apply_phi(ps, whole).ideal->proper());
}

TEST_CASE("pairwise map on a product") {
  auto a = zmod_trivial(4);
  auto b = zmod_trivial(9);
  auto p = product_construction(*a, *b);
  GradedIdeal l = product_ideal(p, gen(a, {"2"}), GradedIdeal::whole_ring(b));

  PhiMap t20 = PhiMap::product_theta(PhiMap::power(2), PhiMap::zero_map(), a, b);
  CHECK(t20.show() == "theta[power:2, zero]");
  CHECK(apply_phi(t20, l).ideal->is_zero_ideal());

  PhiMap t11 = PhiMap::product_theta(PhiMap::identity(), PhiMap::identity(), a, b);
  CHECK(apply_phi(t11, l).ideal->same_elements(l));

  PhiMap te1 = PhiMap::product_theta(PhiMap::empty_map(), PhiMap::identity(), a, b);
  CHECK(apply_phi(te1, l).is_empty_set());

  // every genuine ideal of a product splits: (2, 1) generates <2> x Z_4
  auto a2 = zmod_trivial(4);
  auto p44 = product_construction(*a, *a2);
  GradedIdeal gen21 =
      generate_graded_ideal(p44, {p44->ring().index_of(p44->ring().parse("(2, 1)"))});
  CHECK(gen21.size() == 8);
  PhiMap t44 = PhiMap::product_theta(PhiMap::identity(), PhiMap::identity(), a, a2);
  CHECK(apply_phi(t44, gen21).ideal->same_elements(gen21));

  // a raw component set that is no product of one-sided pieces is refused
  GradedIdeal fake(p44, {{0, {0, 5}}});  // the diagonal through (1, 1)
  CHECK(fake.size() == 2);
  CHECK_THROWS_AS(apply_phi(t44, fake), Error);
  CHECK_THROWS_AS(apply_phi(t44, l), Error);  // wrong ambient size
}
