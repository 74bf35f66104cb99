#pragma once

#include "gril/phi.hpp"

namespace gril {

/// Everything the classifier can test an ideal for. The map-parameterized
/// kinds carry a PhiMap; the per-degree kinds restrict all quantifiers to one
/// component and additionally carry that degree.
struct PredicateId {
  enum class Kind {
    Prime,
    WeaklyPrime,
    AlmostPrime,
    PhiPrime,
    TwoAbsorbing,
    WeaklyTwoAbsorbing,
    OneAbsorbing,
    WeaklyOneAbsorbing,
    PhiOneAbsorbing,
    ComponentPhiOneAbsorbing,
    ComponentPhiPrime
  };

  Kind kind = Kind::Prime;
  std::optional<PhiMap> phi;
  std::optional<uint32_t> degree;

  static PredicateId prime() { return {Kind::Prime, {}, {}}; }
  static PredicateId weakly_prime() { return {Kind::WeaklyPrime, {}, {}}; }
  static PredicateId almost_prime() { return {Kind::AlmostPrime, {}, {}}; }
  static PredicateId phi_prime(PhiMap p) { return {Kind::PhiPrime, std::move(p), {}}; }
  static PredicateId two_absorbing() { return {Kind::TwoAbsorbing, {}, {}}; }
  static PredicateId weakly_two_absorbing() { return {Kind::WeaklyTwoAbsorbing, {}, {}}; }
  static PredicateId one_absorbing() { return {Kind::OneAbsorbing, {}, {}}; }
  static PredicateId weakly_one_absorbing() { return {Kind::WeaklyOneAbsorbing, {}, {}}; }
  static PredicateId phi_one_absorbing(PhiMap p) {
    return {Kind::PhiOneAbsorbing, std::move(p), {}};
  }
  static PredicateId component_phi_one_absorbing(uint32_t g, PhiMap p) {
    return {Kind::ComponentPhiOneAbsorbing, std::move(p), g};
  }
  static PredicateId component_phi_prime(uint32_t g, PhiMap p) {
    return {Kind::ComponentPhiPrime, std::move(p), g};
  }

  bool needs_phi() const;
  bool needs_degree() const;
  std::string show() const;

  /// CLI-facing names; phi/degree arrive via their own flags.
  static const std::vector<std::string>& names();
  static std::optional<PredicateId> parse(const std::string& name, std::optional<PhiMap> phi,
                                          std::optional<uint32_t> degree);
};

/// Exhaustive check of one predicate on one ideal. Pair predicates quantify
/// over all homogeneous pairs, triple predicates over nonunit homogeneous
/// triples (per-degree kinds over the named component). FAIL carries the
/// first violating tuple in ascending element order; VACUOUS signals an empty
/// hypothesis set and counts as a pass.
Verdict classify_ideal(const GradedIdeal& ideal, const PredicateId& pred);

/// The boundary triples of a per-degree absorbing ideal: nonunits a, b, c of
/// the component with abc absorbed by the map image while ab and c stay
/// outside the ideal.
struct TripleZero {
  uint64_t a = 0, b = 0, c = 0;
  friend bool operator==(const TripleZero&, const TripleZero&) = default;
};
std::vector<TripleZero> find_triple_zeros(const GradedIdeal& ideal, uint32_t degree,
                                          const PhiMap& phi);

/// The six equivalent-or-chained characterizations of the absorbing property:
/// k = 1 is the predicate itself, k = 2 and 3 are colon-set conditions over
/// nonunit pairs, k = 4..6 quantify over graded ideals. Without a degree the
/// global forms are checked (colon equality, proper ideals); with a degree
/// the component forms (colon containment, component-proper ideals).
Verdict theorem1_condition(uint32_t k, const GradedIdeal& ideal, const PhiMap& phi,
                           std::optional<uint32_t> degree = std::nullopt);

/// Regularity survey: for every homogeneous a, the least x in the
/// inverse-degree component with a = a*a*x.
struct VnrInfo {
  bool is_vnr = false;
  std::map<uint64_t, uint64_t> witness;
  std::string notes;
};
VnrInfo vnr_suite(const std::shared_ptr<const GradedUniverse>& ring);

/// In a regular ring, the idempotent generating the same principal ideal as
/// x (namely x*y for the regularity witness y). Throws NotVnr when x has no
/// witness.
uint64_t principal_to_idempotent(const GradedUniverse& ring, uint64_t x);

/// The splitting (Rx, R(1-a)) induced by that idempotent: the pair sums to
/// the whole ring and meets in zero.
std::pair<GradedIdeal, GradedIdeal> vnr_decomposition(
    const std::shared_ptr<const GradedUniverse>& ring, uint64_t x);

/// Sorted homogeneous nonunits, the quantification domain of the triple
/// predicates.
std::vector<uint64_t> nonunit_homogeneous(const GradedUniverse& ring);

}  // namespace gril
