#pragma once

#include "gril/ideal.hpp"

namespace gril {

/// Value of a reducer map on an ideal: either a graded subideal or the empty
/// set. The empty set contains nothing, so I minus an EMPTY result is I.
struct PhiResult {
  std::optional<GradedIdeal> ideal;  // nullopt marks the EMPTY_SET result

  bool is_empty_set() const { return !ideal.has_value(); }
  bool contains(uint64_t x) const { return ideal && ideal->contains(x); }
};

/// The reducer family on graded ideals: constant maps (empty, zero), identity,
/// ideal powers, the stable power, and the maps induced on quotients,
/// localizations and products. Selector syntax matches the CLI:
/// empty | zero | identity | power:<n> | omega.
class PhiMap {
 public:
  enum class Kind {
    Empty,
    Zero,
    Identity,
    Power,
    Omega,
    InducedQuotient,
    InducedLocalized,
    ProductTheta
  };

  static PhiMap empty_map();
  static PhiMap zero_map();
  static PhiMap identity();
  static PhiMap power(uint32_t n);  // n >= 2; power:1 is spelled identity
  static PhiMap omega();
  /// Map on R/J ideals: lift, apply the base map, push back down.
  static PhiMap induced_quotient(PhiMap base, std::shared_ptr<const QuotientRing> quotient);
  /// Same mechanism on a localization (which is realized as a quotient).
  static PhiMap induced_localized(PhiMap base, std::shared_ptr<const QuotientRing> localization);
  /// Componentwise pair on ideals I x J of a product ring.
  static PhiMap product_theta(PhiMap left, PhiMap right,
                              std::shared_ptr<const GradedUniverse> left_ring,
                              std::shared_ptr<const GradedUniverse> right_ring);

  struct Inner;  // defined out of line; PhiMaps are built through the factories

  Kind kind() const;
  uint32_t power_exponent() const;  // Power only
  std::string show() const;

  /// Parse a CLI selector; the induced forms are not spellable from the CLI.
  static std::optional<PhiMap> parse(const std::string& selector);

  friend PhiResult apply_phi(const PhiMap& phi, const GradedIdeal& ideal);

 private:
  explicit PhiMap(std::shared_ptr<const Inner> inner) : inner_(std::move(inner)) {}
  std::shared_ptr<const Inner> inner_;
};

/// Result is always a subset of the argument (or EMPTY_SET).
PhiResult apply_phi(const PhiMap& phi, const GradedIdeal& ideal);

/// phi <= psi pointwise over every enumerated graded ideal of the ring;
/// EMPTY_SET is below everything. FAIL carries the first violating ideal in
/// canonical enumeration order.
Verdict phi_leq(const PhiMap& phi, const PhiMap& psi,
                std::shared_ptr<const GradedUniverse> ring);

}  // namespace gril
