#include "gril/fixtures.hpp"

namespace gril {

namespace {

std::shared_ptr<const GradedRing> zmod_trivial(uint32_t n) {
  auto r = std::make_shared<BasisRing>(RingPresentation::zmod(n));
  return std::make_shared<GradedRing>(r, GradingGroup::trivial(), std::vector<uint32_t>{0});
}

// Z_n[i] with i^2 = -1 and deg(i) = 1 over the two element group.
std::shared_ptr<const GradedRing> quad_ext(uint32_t n) {
  auto r = std::make_shared<BasisRing>(
      RingPresentation::poly(RingPresentation::zmod(n), {Elem{1}, Elem{0}}));
  return std::make_shared<GradedRing>(r, GradingGroup::cyclic(2), std::vector<uint32_t>{0, 1});
}

std::shared_ptr<const GradedRing> boolean_ring(uint32_t k) {
  std::vector<RingPresentation> parts(k, RingPresentation::zmod(2));
  auto r = std::make_shared<BasisRing>(RingPresentation::product(parts));
  return std::make_shared<GradedRing>(r, GradingGroup::trivial(),
                                      std::vector<uint32_t>(k, 0));
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

Fixture make(std::string name, std::shared_ptr<const GradedRing> ring,
             std::vector<std::pair<std::string, std::vector<std::string>>> ideal_gens,
             Provenance prov, std::string notes) {
  Fixture f;
  f.name = std::move(name);
  f.ring = std::move(ring);
  for (auto& [iname, gens] : ideal_gens) f.ideals.emplace_back(iname, gen(f.ring, gens));
  f.phis = standard_phis();
  f.provenance = prov;
  f.notes = std::move(notes);
  return f;
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;

  out.push_back(make("z18i-q9", quad_ext(18), {{"q2", {"9"}}}, Provenance::Paper,
                     "quadratic extension Z_18[i], graded by Z_2 with deg(i) = 1; "
                     "parameters p = 2, q = 3"));
  out.push_back(make("z12i-q4", quad_ext(12), {{"q2", {"4"}}}, Provenance::Paper,
                     "quadratic extension Z_12[i], graded by Z_2 with deg(i) = 1; "
                     "parameters p = 3, q = 2"));
  out.push_back(make("boolean-z2p4", boolean_ring(4), {{"axis", {"(1, 0, 0, 0)"}}},
                     Provenance::Paper, "Z_2^4, trivially graded Boolean ring"));
  {
    auto r = std::make_shared<BasisRing>(RingPresentation::truncated(RingPresentation::zmod(50), 3));
    auto ring = std::make_shared<GradedRing>(r, GradingGroup::bounded_integer(2),
                                             std::vector<uint32_t>{0, 1, 2});
    Fixture f = make("z50x-trunc", ring, {{"x25", {"X", "25"}}}, Provenance::Paper,
                     "synthetic-adapted model of Z_50[X]: truncated at X^3 = 0 with "
                     "deg(X) = 1; degree-0 units are exactly the units of Z_50 and "
                     "higher-degree homogeneous elements are nilpotent, so "
                     "homogeneous unit status agrees with the untruncated ring");
    // the full reducer sweep is far too slow on 125000 elements; zero is the
    // map the recorded counterexample needs
    f.phis = {PhiMap::zero_map()};
    out.push_back(std::move(f));
  }

  out.push_back(make("z2-boolean", zmod_trivial(2), {{"zero", {}}}, Provenance::Synthetic,
                     "the two element field, trivially graded; Boolean and a graded field"));
  {
    auto r = std::make_shared<BasisRing>(RingPresentation::truncated(RingPresentation::zmod(2), 2));
    auto ring = std::make_shared<GradedRing>(r, GradingGroup::cyclic(2),
                                             std::vector<uint32_t>{0, 1});
    out.push_back(make("z2eps", ring, {{"eps", {"X"}}}, Provenance::Synthetic,
                       "Z_2[X]/(X^2) with deg(X) = 1 over Z_2: the smallest "
                       "nontrivially graded local fixture"));
  }
  out.push_back(make("zmod4", zmod_trivial(4), {{"m", {"2"}}}, Provenance::Synthetic,
                     "Z_4, trivially graded local ring"));
  out.push_back(make("zmod6", zmod_trivial(6), {{"e2", {"2"}}, {"e3", {"3"}}},
                     Provenance::Synthetic,
                     "Z_6, trivially graded von Neumann regular ring"));
  out.push_back(make("zmod8", zmod_trivial(8), {{"m", {"2"}}, {"m2", {"4"}}},
                     Provenance::Synthetic,
                     "Z_8, trivially graded local ring whose maximal ideal cubes to zero"));
  out.push_back(make("zmod9", zmod_trivial(9), {{"m", {"3"}}}, Provenance::Synthetic,
                     "Z_9, trivially graded local ring"));
  out.push_back(make("zmod12", zmod_trivial(12), {{"e2", {"2"}}, {"e3", {"3"}}},
                     Provenance::Synthetic, "Z_12, trivially graded"));
  out.push_back(make("zmod18", zmod_trivial(18), {{"q2", {"9"}}, {"p", {"2"}}, {"s", {"6"}}},
                     Provenance::Synthetic,
                     "Z_18, trivially graded; q2 = (9) mirrors the degree zero part of z18i-q9"));
  out.push_back(make("f9-graded", quad_ext(3), {{"zero", {}}}, Provenance::Synthetic,
                     "the nine element field graded by Z_2 with deg(i) = 1: a graded field"));
  out.push_back(make("boolean-z2p2", boolean_ring(2), {{"axis", {"(1, 0)"}}},
                     Provenance::Synthetic, "Z_2^2, trivially graded Boolean ring"));
  out.push_back(make("boolean-z2p3", boolean_ring(3), {{"axis", {"(1, 0, 0)"}}},
                     Provenance::Synthetic, "Z_2^3, trivially graded Boolean ring"));
  {
    auto r = std::make_shared<BasisRing>(
        RingPresentation::product({RingPresentation::zmod(2), RingPresentation::zmod(3)}));
    auto ring = std::make_shared<GradedRing>(r, GradingGroup::trivial(),
                                             std::vector<uint32_t>{0, 0});
    out.push_back(make("z2xz3", ring, {{"left", {"(1, 0)"}}}, Provenance::Synthetic,
                       "Z_2 x Z_3, trivially graded product"));
  }
  {
    auto r = std::make_shared<BasisRing>(
        RingPresentation::product({RingPresentation::zmod(4), RingPresentation::zmod(9)}));
    auto ring = std::make_shared<GradedRing>(r, GradingGroup::trivial(),
                                             std::vector<uint32_t>{0, 0});
    out.push_back(make("z4xz9", ring, {{"left", {"(1, 0)"}}, {"m2x3", {"(2, 3)"}}},
                       Provenance::Synthetic,
                       "Z_4 x Z_9, trivially graded product of two local rings"));
  }

  return out;
}

}  // namespace

std::string provenance_name(Provenance p) {
  return p == Provenance::Paper ? "paper" : "synthetic";
}

std::vector<PhiMap> standard_phis() {
  return {PhiMap::empty_map(), PhiMap::zero_map(), PhiMap::power(2), PhiMap::power(3),
          PhiMap::omega()};
}

const GradedIdeal* Fixture::find_ideal(std::string_view ideal_name) const {
  for (const auto& [n, ideal] : ideals)
    if (n == ideal_name) return &ideal;
  return nullptr;
}

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : fixture_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace gril
