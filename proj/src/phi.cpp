#include "gril/phi.hpp"

namespace gril {

struct PhiMap::Inner {
  Kind kind = Kind::Empty;
  uint32_t n = 0;
  std::shared_ptr<const QuotientRing> quotient;            // induced forms
  std::shared_ptr<const GradedUniverse> left, right;       // product form
  std::vector<PhiMap> sub;                                 // base map(s)
};

namespace {

std::shared_ptr<PhiMap::Inner> make_inner(PhiMap::Kind kind, uint32_t n = 0) {
  auto inner = std::make_shared<PhiMap::Inner>();
  inner->kind = kind;
  inner->n = n;
  return inner;
}

}  // namespace

PhiMap PhiMap::empty_map() { return PhiMap(make_inner(Kind::Empty)); }
PhiMap PhiMap::zero_map() { return PhiMap(make_inner(Kind::Zero)); }
PhiMap PhiMap::identity() { return PhiMap(make_inner(Kind::Identity)); }
PhiMap PhiMap::omega() { return PhiMap(make_inner(Kind::Omega)); }

PhiMap PhiMap::power(uint32_t n) {
  if (n < 2)
    throw Error(Err::ValidationError, "power maps start at exponent 2; use identity for 1");
  return PhiMap(make_inner(Kind::Power, n));
}

PhiMap PhiMap::induced_quotient(PhiMap base, std::shared_ptr<const QuotientRing> quotient) {
  auto inner = std::make_shared<Inner>();
  inner->kind = Kind::InducedQuotient;
  inner->quotient = std::move(quotient);
  inner->sub.push_back(std::move(base));
  return PhiMap(std::move(inner));
}

PhiMap PhiMap::induced_localized(PhiMap base, std::shared_ptr<const QuotientRing> localization) {
  auto inner = std::make_shared<Inner>();
  inner->kind = Kind::InducedLocalized;
  inner->quotient = std::move(localization);
  inner->sub.push_back(std::move(base));
  return PhiMap(std::move(inner));
}

PhiMap PhiMap::product_theta(PhiMap left, PhiMap right,
                             std::shared_ptr<const GradedUniverse> left_ring,
                             std::shared_ptr<const GradedUniverse> right_ring) {
  auto inner = std::make_shared<Inner>();
  inner->kind = Kind::ProductTheta;
  inner->left = std::move(left_ring);
  inner->right = std::move(right_ring);
  inner->sub.push_back(std::move(left));
  inner->sub.push_back(std::move(right));
  return PhiMap(std::move(inner));
}

PhiMap::Kind PhiMap::kind() const { return inner_->kind; }

uint32_t PhiMap::power_exponent() const {
  if (inner_->kind != Kind::Power)
    throw Error(Err::ValidationError, "only power maps carry an exponent");
  return inner_->n;
}

std::string PhiMap::show() const {
  switch (inner_->kind) {
    case Kind::Empty: return "empty";
    case Kind::Zero: return "zero";
    case Kind::Identity: return "identity";
    case Kind::Power: return "power:" + std::to_string(inner_->n);
    case Kind::Omega: return "omega";
    case Kind::InducedQuotient: return "quotient[" + inner_->sub[0].show() + "]";
    case Kind::InducedLocalized: return "localized[" + inner_->sub[0].show() + "]";
    case Kind::ProductTheta:
      return "theta[" + inner_->sub[0].show() + ", " + inner_->sub[1].show() + "]";
  }
  return "?";
}

std::optional<PhiMap> PhiMap::parse(const std::string& selector) {
  if (selector == "empty") return empty_map();
  if (selector == "zero") return zero_map();
  if (selector == "identity") return identity();
  if (selector == "omega") return omega();
  if (selector.rfind("power:", 0) == 0) {
    const std::string tail = selector.substr(6);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    unsigned long n = std::stoul(tail);
    if (n < 2 || n > 64) return std::nullopt;
    return power(static_cast<uint32_t>(n));
  }
  return std::nullopt;
}

namespace {

GradedIdeal stable_power(const GradedIdeal& ideal) {
  GradedIdeal cur = ideal;
  uint64_t bound = ideal.size() + 2;
  for (uint64_t step = 0; step < bound; ++step) {
    GradedIdeal next = ideal_product(cur, ideal);
    if (next.same_elements(cur)) return cur;
    cur = std::move(next);
  }
  throw Error(Err::ValidationError, "power sequence failed to stabilize");
}

// split a product-ring ideal back into its factors; nullopt if it is not a
// componentwise product
std::optional<std::pair<GradedIdeal, GradedIdeal>> split_product_ideal(
    const GradedIdeal& ideal, const std::shared_ptr<const GradedUniverse>& left,
    const std::shared_ptr<const GradedUniverse>& right) {
  uint64_t nr = right->size();
  std::map<uint32_t, std::vector<uint64_t>> lcomp, rcomp;
  for (const auto& [g, c] : ideal.comps()) {
    std::vector<uint64_t>&l = lcomp[g], &r = rcomp[g];
    for (uint64_t x : c) {
      if (x % nr == 0) l.push_back(x / nr);
      if (x / nr == 0) r.push_back(x % nr);
    }
    if (l.size() * r.size() != c.size()) return std::nullopt;
  }
  return std::make_pair(GradedIdeal(left, std::move(lcomp)),
                        GradedIdeal(right, std::move(rcomp)));
}

}  // namespace

PhiResult apply_phi(const PhiMap& phi, const GradedIdeal& ideal) {
  switch (phi.inner_->kind) {
    case PhiMap::Kind::Empty:
      return PhiResult{std::nullopt};
    case PhiMap::Kind::Zero:
      return PhiResult{GradedIdeal::zero_ideal(ideal.ambient())};
    case PhiMap::Kind::Identity:
      return PhiResult{ideal};
    case PhiMap::Kind::Power:
      return PhiResult{ideal_intersection(ideal_power(ideal, phi.inner_->n), ideal)};
    case PhiMap::Kind::Omega:
      return PhiResult{ideal_intersection(stable_power(ideal), ideal)};
    case PhiMap::Kind::InducedQuotient:
    case PhiMap::Kind::InducedLocalized: {
      const std::shared_ptr<const QuotientRing>& q = phi.inner_->quotient;
      if (ideal.ambient().get() != q.get())
        throw Error(Err::AmbientMismatch, "ideal does not live in the induced map's ring");
      GradedIdeal lifted = q->lift_ideal(ideal);
      PhiResult base = apply_phi(phi.inner_->sub[0], lifted);
      if (base.is_empty_set()) return PhiResult{std::nullopt};
      GradedIdeal down = q->project_ideal(*base.ideal);
      return PhiResult{ideal_intersection(std::move(down), ideal)};
    }
    case PhiMap::Kind::ProductTheta: {
      const auto& left = phi.inner_->left;
      const auto& right = phi.inner_->right;
      if (ideal.ambient()->size() != left->size() * right->size())
        throw Error(Err::AmbientMismatch, "ideal does not live in the declared product ring");
      auto parts = split_product_ideal(ideal, left, right);
      if (!parts)
        throw Error(Err::ValidationError,
                    "ideal " + ideal.show() + " is not a product of one-sided ideals");
      PhiResult lres = apply_phi(phi.inner_->sub[0], parts->first);
      PhiResult rres = apply_phi(phi.inner_->sub[1], parts->second);
      if (lres.is_empty_set() || rres.is_empty_set()) return PhiResult{std::nullopt};
      GradedIdeal prod = product_ideal(ideal.ambient(), *lres.ideal, *rres.ideal);
      return PhiResult{ideal_intersection(std::move(prod), ideal)};
    }
  }
  throw Error(Err::ValidationError, "unknown map kind");
}

Verdict phi_leq(const PhiMap& phi, const PhiMap& psi,
                std::shared_ptr<const GradedUniverse> ring) {
  for (const GradedIdeal& ideal : enumerate_graded_ideals(std::move(ring))) {
    PhiResult a = apply_phi(phi, ideal);
    if (a.is_empty_set()) continue;
    PhiResult b = apply_phi(psi, ideal);
    bool ok = !b.is_empty_set() && a.ideal->subset_of(*b.ideal);
    if (!ok)
      return Verdict::fail({WitnessPart{"ideal", {}, ideal.show()}},
                           phi.show() + "(" + ideal.show() + ") is not contained in " +
                               psi.show() + "(" + ideal.show() + ")");
  }
  return Verdict::pass();
}

}  // namespace gril
