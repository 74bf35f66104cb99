#include "gril/ideal.hpp"

#include <algorithm>
#include <set>

namespace gril {

namespace {

bool sorted_contains(const std::vector<uint64_t>& v, uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// {a + b : a in A, b in B} for additive subgroups A, B (already closed)
std::vector<uint64_t> sumset(const GradedUniverse& r, const std::vector<uint64_t>& a,
                             const std::vector<uint64_t>& b) {
  std::set<uint64_t> out;
  for (uint64_t x : a)
    for (uint64_t y : b) out.insert(r.add(x, y));
  return std::vector<uint64_t>(out.begin(), out.end());
}

// additive subgroup generated by S
std::vector<uint64_t> additive_closure(const GradedUniverse& r, const std::vector<uint64_t>& gens) {
  std::set<uint64_t> h{0};
  for (uint64_t g : gens) {
    if (h.count(g)) continue;
    std::vector<uint64_t> base(h.begin(), h.end());
    uint64_t m = g;
    while (!h.count(m)) {
      for (uint64_t x : base) h.insert(r.add(x, m));
      m = r.add(m, g);
    }
  }
  return std::vector<uint64_t>(h.begin(), h.end());
}

void check_same_ambient(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ambient() != b.ambient())
    throw Error(Err::MixedRings, "ideals live in different rings");
}

}  // namespace

GradedIdeal::GradedIdeal(std::shared_ptr<const GradedUniverse> ambient,
                         std::map<uint32_t, std::vector<uint64_t>> comps,
                         std::vector<uint64_t> gens)
    : amb_(std::move(ambient)), comps_(std::move(comps)), gens_(std::move(gens)) {
  if (!amb_) throw Error(Err::ValidationError, "ideal needs an ambient ring");
  for (uint32_t g : amb_->realized_degrees()) comps_.try_emplace(g, std::vector<uint64_t>{0});
  for (auto& [g, c] : comps_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty() || c[0] != 0) c.insert(c.begin(), 0);
  }
}

GradedIdeal GradedIdeal::zero_ideal(std::shared_ptr<const GradedUniverse> ambient) {
  return GradedIdeal(std::move(ambient), {});
}

GradedIdeal GradedIdeal::whole_ring(std::shared_ptr<const GradedUniverse> ambient) {
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : ambient->realized_degrees()) comps[g] = ambient->component_indices(g);
  return GradedIdeal(std::move(ambient), std::move(comps), {});
}

const std::vector<uint64_t>& GradedIdeal::component(uint32_t g) const {
  static const std::vector<uint64_t> kZero{0};
  auto it = comps_.find(g);
  return it == comps_.end() ? kZero : it->second;
}

uint64_t GradedIdeal::size() const {
  uint64_t n = 1;
  for (const auto& [g, c] : comps_) n *= c.size();
  return n;
}

bool GradedIdeal::is_zero_ideal() const { return size() == 1; }

bool GradedIdeal::proper() const {
  for (const auto& [g, c] : comps_)
    if (c.size() < amb_->component_indices(g).size()) return true;
  return false;
}

bool GradedIdeal::contains(uint64_t x) const {
  for (const auto& [g, part] : amb_->decompose(x)) {
    auto it = comps_.find(g);
    if (it == comps_.end() || !sorted_contains(it->second, part)) return false;
  }
  return true;
}

bool GradedIdeal::subset_of(const GradedIdeal& other) const {
  check_same_ambient(*this, other);
  for (const auto& [g, c] : comps_) {
    const std::vector<uint64_t>& o = other.component(g);
    if (!std::includes(o.begin(), o.end(), c.begin(), c.end())) return false;
  }
  return true;
}

bool GradedIdeal::same_elements(const GradedIdeal& other) const {
  check_same_ambient(*this, other);
  return comps_ == other.comps_;
}

std::vector<uint64_t> GradedIdeal::elements() const {
  if (size() > amb_->limits().max_set_expansion)
    throw Error(Err::SizeExceeded, "ideal has " + std::to_string(size()) +
                                       " elements, expansion limit is " +
                                       std::to_string(amb_->limits().max_set_expansion));
  std::vector<uint64_t> out{0};
  for (const auto& [g, c] : comps_) {
    if (c.size() == 1) continue;
    std::vector<uint64_t> next;
    next.reserve(out.size() * c.size());
    for (uint64_t x : out)
      for (uint64_t p : c) next.push_back(amb_->add(x, p));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint64_t> GradedIdeal::signature() const {
  std::vector<uint64_t> out;
  for (const auto& [g, c] : comps_) {
    out.push_back(g);
    out.push_back(c.size());
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::string GradedIdeal::show() const {
  if (!gens_.empty()) {
    std::string out = "(";
    for (size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + amb_->show(gens_[i]);
    return out + ")";
  }
  uint64_t n = size();
  std::string out = "{";
  if (n <= 8) {
    std::vector<uint64_t> el = elements();
    for (size_t i = 0; i < el.size(); ++i) out += (i ? ", " : "") + amb_->show(el[i]);
    return out + "}";
  }
  size_t shown = 0;
  for (const auto& [g, c] : comps_)
    for (uint64_t x : c) {
      if (x == 0) continue;
      if (shown == 5) return out + ", ...} (" + std::to_string(n) + " elements)";
      out += (shown ? ", " : "") + amb_->show(x);
      ++shown;
    }
  return out + "}";
}

GradedIdeal generate_graded_ideal(std::shared_ptr<const GradedUniverse> ambient,
                                  const std::vector<uint64_t>& hom_gens) {
  const GradedUniverse& r = *ambient;
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : r.realized_degrees()) comps[g] = {0};
  for (uint64_t x : hom_gens) {
    if (x == 0) continue;
    std::optional<uint32_t> d = r.degree_of(x);
    if (!d)
      throw Error(Err::NonHomogeneousGenerator,
                  "generator " + r.show(x) + " is not homogeneous");
    for (uint32_t h : r.realized_degrees()) {
      std::optional<uint32_t> tgt = r.group().compose(h, *d);
      std::set<uint64_t> prods;
      for (uint64_t s : r.component_indices(h)) prods.insert(r.mul(s, x));
      if (!tgt) {
        if (prods.size() != 1 || *prods.begin() != 0)
          throw Error(Err::ValidationError, "degree overflow product is nonzero");
        continue;
      }
      comps[*tgt] = sumset(r, comps[*tgt], std::vector<uint64_t>(prods.begin(), prods.end()));
    }
  }
  return GradedIdeal(std::move(ambient), std::move(comps), hom_gens);
}

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b) {
  check_same_ambient(a, b);
  const GradedUniverse& r = *a.ambient();
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (const auto& [g, c] : a.comps()) comps[g] = sumset(r, c, b.component(g));
  std::vector<uint64_t> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return GradedIdeal(a.ambient(), std::move(comps), std::move(gens));
}

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b) {
  check_same_ambient(a, b);
  const GradedUniverse& r = *a.ambient();
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : r.realized_degrees()) comps[g] = {0};
  for (const auto& [g, ca] : a.comps()) {
    for (const auto& [h, cb] : b.comps()) {
      std::optional<uint32_t> tgt = r.group().compose(g, h);
      std::set<uint64_t> prods;
      for (uint64_t x : ca)
        for (uint64_t y : cb) prods.insert(r.mul(x, y));
      if (!tgt) {
        if (prods.size() != 1 || *prods.begin() != 0)
          throw Error(Err::ValidationError, "degree overflow product is nonzero");
        continue;
      }
      std::vector<uint64_t> span =
          additive_closure(r, std::vector<uint64_t>(prods.begin(), prods.end()));
      comps[*tgt] = sumset(r, comps[*tgt], span);
    }
  }
  return GradedIdeal(a.ambient(), std::move(comps));
}

GradedIdeal ideal_power(const GradedIdeal& a, uint32_t n) {
  if (n == 0) throw Error(Err::ValidationError, "ideal power 0 is rejected");
  GradedIdeal out = a;
  for (uint32_t k = 1; k < n; ++k) out = ideal_product(out, a);
  return out;
}

GradedIdeal ideal_intersection(const GradedIdeal& a, const GradedIdeal& b) {
  check_same_ambient(a, b);
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (const auto& [g, ca] : a.comps()) {
    const std::vector<uint64_t>& cb = b.component(g);
    std::vector<uint64_t> c;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(c));
    comps[g] = std::move(c);
  }
  return GradedIdeal(a.ambient(), std::move(comps));
}

GradedIdeal colon_ideal(const GradedIdeal& ideal, uint64_t x) {
  const GradedUniverse& r = *ideal.ambient();
  if (x == 0) return GradedIdeal::whole_ring(ideal.ambient());
  std::optional<uint32_t> d = r.degree_of(x);
  if (!d)
    throw Error(Err::ValidationError,
                "componentwise colon needs a homogeneous divisor, got " + r.show(x));
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : r.realized_degrees()) {
    std::optional<uint32_t> tgt = r.group().compose(g, *d);
    const std::vector<uint64_t>& comp = r.component_indices(g);
    if (!tgt) {
      comps[g] = comp;  // overflow forces rx = 0, which lies in the ideal
      continue;
    }
    std::vector<uint64_t> c;
    const std::vector<uint64_t>& icomp = ideal.component(*tgt);
    for (uint64_t s : comp)
      if (sorted_contains(icomp, r.mul(s, x))) c.push_back(s);
    comps[g] = std::move(c);
  }
  return GradedIdeal(ideal.ambient(), std::move(comps));
}

std::vector<uint64_t> colon_component(const GradedIdeal& ideal, uint64_t x, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint64_t> out;
  for (uint64_t s : r.component_indices(g))
    if (ideal.contains(r.mul(s, x))) out.push_back(s);
  return out;
}

std::vector<uint64_t> colon_set(const GradedIdeal& ideal, uint64_t x) {
  const GradedUniverse& r = *ideal.ambient();
  if (r.size() > r.limits().max_set_expansion)
    throw Error(Err::SizeExceeded, "colon scan over a ring of " + std::to_string(r.size()) +
                                       " elements exceeds the expansion limit");
  std::vector<uint64_t> out;
  for (uint64_t s = 0; s < r.size(); ++s)
    if (ideal.contains(r.mul(s, x))) out.push_back(s);
  return out;
}

const std::vector<GradedIdeal>& enumerate_graded_ideals(
    std::shared_ptr<const GradedUniverse> ambient) {
  std::shared_ptr<void>& slot = ideal_cache_slot(*ambient);
  if (slot) return *std::static_pointer_cast<std::vector<GradedIdeal>>(slot);

  const GradedUniverse& r = *ambient;
  const std::vector<uint64_t>& hom = r.homogeneous_indices();

  std::map<uint64_t, GradedIdeal> principal;
  for (uint64_t x : hom)
    if (x != 0) principal.emplace(x, generate_graded_ideal(ambient, {x}));

  std::vector<GradedIdeal> found{GradedIdeal::zero_ideal(ambient)};
  std::set<std::vector<uint64_t>> seen{found[0].signature()};
  // frontier closure: every graded ideal is reachable by repeatedly adjoining
  // one homogeneous element
  for (size_t at = 0; at < found.size(); ++at) {
    if (found.size() > r.limits().max_enum_homogeneous)
      throw Error(Err::SizeExceeded, "graded ideal count exceeds the enumeration limit");
    GradedIdeal base = found[at];
    for (uint64_t x : hom) {
      if (x == 0 || base.contains(x)) continue;
      GradedIdeal next = ideal_sum(base, principal.at(x));
      if (seen.insert(next.signature()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const GradedIdeal& a, const GradedIdeal& b) {
    uint64_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.signature() < b.signature();
  });
  auto cache = std::make_shared<std::vector<GradedIdeal>>(std::move(found));
  slot = cache;
  return *cache;
}

SpectrumInfo graded_spectrum(std::shared_ptr<const GradedUniverse> ambient) {
  const std::vector<GradedIdeal>& all = enumerate_graded_ideals(std::move(ambient));
  SpectrumInfo info;
  for (const GradedIdeal& i : all) {
    if (!i.proper()) continue;
    bool maximal = true;
    for (const GradedIdeal& j : all) {
      if (!j.proper() || j.same_elements(i)) continue;
      if (i.subset_of(j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) info.graded_maximal.push_back(i);
  }
  info.is_graded_local = info.graded_maximal.size() == 1;
  if (info.is_graded_local) info.unique_maximal = info.graded_maximal[0];
  return info;
}

QuotientRing::QuotientRing(std::shared_ptr<const GradedUniverse> base, GradedIdeal modulus)
    : base_(std::move(base)), mod_(std::move(modulus)) {
  if (mod_.ambient().get() != base_.get())
    throw Error(Err::AmbientMismatch, "modulus ideal lives in a different ring");
  if (!mod_.proper()) throw Error(Err::ImproperIdeal, "cannot quotient by the whole ring");
  std::vector<uint64_t> jel = mod_.elements();
  uint64_t n = base_->size();
  cosets_.assign(n, UINT32_MAX);
  for (uint64_t i = 0; i < n; ++i) {
    if (cosets_[i] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(reps_.size());
    reps_.push_back(i);
    for (uint64_t j : jel) cosets_[base_->add(i, j)] = id;
  }
  one_ = cosets_[base_->one()];
  for (uint32_t g : base_->realized_degrees()) {
    std::set<uint64_t> c;
    for (uint64_t i : base_->component_indices(g)) c.insert(cosets_[i]);
    comps_[g] = std::vector<uint64_t>(c.begin(), c.end());
  }
}

std::shared_ptr<const QuotientRing> QuotientRing::create(
    std::shared_ptr<const GradedUniverse> base, const GradedIdeal& modulus) {
  return std::shared_ptr<const QuotientRing>(new QuotientRing(std::move(base), modulus));
}

uint64_t QuotientRing::project(uint64_t base_elem) const { return cosets_.at(base_elem); }

uint64_t QuotientRing::add(uint64_t a, uint64_t b) const {
  return cosets_[base_->add(reps_[a], reps_[b])];
}

uint64_t QuotientRing::neg(uint64_t a) const { return cosets_[base_->neg(reps_[a])]; }

uint64_t QuotientRing::mul(uint64_t a, uint64_t b) const {
  return cosets_[base_->mul(reps_[a], reps_[b])];
}

bool QuotientRing::is_unit(uint64_t a) const {
  if (mod_.size() == 1) return base_->is_unit(reps_[a]);
  if (unit_mask_.empty()) {
    uint64_t n = reps_.size();
    if (n > 5000)
      throw Error(Err::SizeExceeded, "unit scan over a quotient of " + std::to_string(n) +
                                         " cosets is out of budget");
    unit_mask_.assign(n, 0);
    for (uint64_t x = 0; x < n; ++x) {
      if (unit_mask_[x]) continue;
      for (uint64_t y = x; y < n; ++y) {
        if (mul(x, y) == one_) {
          unit_mask_[x] = unit_mask_[y] = 1;
          break;
        }
      }
    }
  }
  return unit_mask_[a] != 0;
}

std::string QuotientRing::show(uint64_t a) const { return base_->show(reps_[a]); }

const std::vector<uint64_t>& QuotientRing::component_indices(uint32_t g) const {
  auto it = comps_.find(g);
  if (it == comps_.end())
    throw Error(Err::ValidationError, "degree " + group().show(g) + " is not realized");
  return it->second;
}

bool QuotientRing::in_component(uint64_t a, uint32_t g) const {
  auto it = comps_.find(g);
  return it != comps_.end() && sorted_contains(it->second, a);
}

std::map<uint32_t, uint64_t> QuotientRing::decompose(uint64_t a) const {
  std::map<uint32_t, uint64_t> out;
  for (const auto& [g, part] : base_->decompose(reps_[a])) {
    uint64_t p = cosets_[part];
    if (p != 0) out.emplace(g, p);
  }
  return out;
}

std::string QuotientRing::describe() const {
  return "(" + base_->describe() + ") / " + mod_.show();
}

GradedIdeal QuotientRing::project_ideal(const GradedIdeal& ideal) const {
  if (ideal.ambient().get() != base_.get())
    throw Error(Err::AmbientMismatch, "ideal lives in a different ring");
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (const auto& [g, c] : ideal.comps()) {
    std::set<uint64_t> img;
    for (uint64_t i : c) img.insert(cosets_[i]);
    comps[g] = std::vector<uint64_t>(img.begin(), img.end());
  }
  std::vector<uint64_t> gens;
  for (uint64_t x : ideal.generators())
    if (cosets_[x] != 0) gens.push_back(cosets_[x]);
  return GradedIdeal(shared_from_this(), std::move(comps), std::move(gens));
}

GradedIdeal QuotientRing::lift_ideal(const GradedIdeal& ideal) const {
  if (ideal.ambient().get() != this)
    throw Error(Err::AmbientMismatch, "ideal lives in a different ring");
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : base_->realized_degrees()) {
    const std::vector<uint64_t>& qc = ideal.component(g);
    std::vector<uint64_t> c;
    for (uint64_t i : base_->component_indices(g))
      if (sorted_contains(qc, cosets_[i])) c.push_back(i);
    comps[g] = std::move(c);
  }
  return GradedIdeal(base_, std::move(comps));
}

Localization localize(std::shared_ptr<const GradedUniverse> ambient,
                      const std::vector<uint64_t>& mult_set) {
  const GradedUniverse& r = *ambient;
  std::vector<uint64_t> s(mult_set);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || !sorted_contains(s, r.one()))
    throw Error(Err::BadMultiplicativeSet, "set must contain 1");
  if (sorted_contains(s, 0)) throw Error(Err::BadMultiplicativeSet, "set must not contain 0");
  for (uint64_t x : s)
    if (!r.is_homogeneous(x))
      throw Error(Err::BadMultiplicativeSet, r.show(x) + " is not homogeneous");
  for (uint64_t x : s)
    for (uint64_t y : s)
      if (!sorted_contains(s, r.mul(x, y)))
        throw Error(Err::BadMultiplicativeSet, "set is not closed: " + r.show(x) + " * " +
                                                   r.show(y) + " = " + r.show(r.mul(x, y)) +
                                                   " is missing");
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : r.realized_degrees()) {
    std::vector<uint64_t> c;
    for (uint64_t x : r.component_indices(g)) {
      for (uint64_t t : s) {
        if (r.mul(t, x) == 0) {
          c.push_back(x);
          break;
        }
      }
    }
    comps[g] = std::move(c);
  }
  GradedIdeal kernel(ambient, std::move(comps));
  std::shared_ptr<const QuotientRing> q = QuotientRing::create(ambient, kernel);
  for (uint64_t x : s)
    if (!q->is_unit(q->project(x)))
      throw Error(Err::ValidationError,
                  "image of " + r.show(x) + " is not a unit in the localization");
  return Localization{std::move(q), std::move(kernel)};
}

std::optional<std::string> localization_oracle_mismatch(const GradedUniverse& ring,
                                                        const std::vector<uint64_t>& mult_set,
                                                        const QuotientRing& loc) {
  if (ring.size() > ring.limits().max_oracle_ring)
    throw Error(Err::SizeExceeded, "formal-fraction oracle is limited to rings of size " +
                                       std::to_string(ring.limits().max_oracle_ring));
  std::vector<uint64_t> s(mult_set);
  std::sort(s.begin(), s.end());
  auto equivalent = [&](uint64_t a, uint64_t sa, uint64_t b, uint64_t sb) {
    uint64_t cross = ring.sub(ring.mul(a, sb), ring.mul(b, sa));
    for (uint64_t u : s)
      if (ring.mul(u, cross) == 0) return true;
    return false;
  };
  // canonical class per pair, classes keyed by first-seen representative
  std::vector<std::pair<uint64_t, uint64_t>> reps;
  auto class_of = [&](uint64_t a, uint64_t sa) -> size_t {
    for (size_t k = 0; k < reps.size(); ++k)
      if (equivalent(a, sa, reps[k].first, reps[k].second)) return k;
    reps.emplace_back(a, sa);
    return reps.size() - 1;
  };
  for (uint64_t a = 0; a < ring.size(); ++a)
    for (uint64_t t : s) class_of(a, t);

  if (reps.size() != loc.size())
    return "fraction count " + std::to_string(reps.size()) + " differs from quotient size " +
           std::to_string(loc.size());

  auto inv = [&](uint64_t x) -> uint64_t {
    for (uint64_t y = 0; y < loc.size(); ++y)
      if (loc.mul(x, y) == loc.one()) return y;
    throw Error(Err::ValidationError, "image of the multiplicative set is not invertible");
  };
  std::vector<uint64_t> to_loc(reps.size());
  std::vector<uint8_t> hit(loc.size(), 0);
  for (size_t k = 0; k < reps.size(); ++k) {
    to_loc[k] = loc.mul(loc.project(reps[k].first), inv(loc.project(reps[k].second)));
    if (hit[to_loc[k]]++)
      return "fraction map is not injective at " + ring.show(reps[k].first) + "/" +
             ring.show(reps[k].second);
  }
  // well-defined on every pair, not just representatives
  for (uint64_t a = 0; a < ring.size(); ++a)
    for (uint64_t t : s) {
      size_t k = class_of(a, t);
      uint64_t direct = loc.mul(loc.project(a), inv(loc.project(t)));
      if (direct != to_loc[k])
        return "fraction map is ill-defined at " + ring.show(a) + "/" + ring.show(t);
    }
  for (size_t k1 = 0; k1 < reps.size(); ++k1)
    for (size_t k2 = 0; k2 < reps.size(); ++k2) {
      auto [a, sa] = reps[k1];
      auto [b, sb] = reps[k2];
      size_t ks = class_of(ring.add(ring.mul(a, sb), ring.mul(b, sa)), ring.mul(sa, sb));
      if (to_loc[ks] != loc.add(to_loc[k1], to_loc[k2]))
        return "addition disagrees at " + ring.show(a) + "/" + ring.show(sa) + " + " +
               ring.show(b) + "/" + ring.show(sb);
      size_t kp = class_of(ring.mul(a, b), ring.mul(sa, sb));
      if (to_loc[kp] != loc.mul(to_loc[k1], to_loc[k2]))
        return "multiplication disagrees at " + ring.show(a) + "/" + ring.show(sa) + " * " +
               ring.show(b) + "/" + ring.show(sb);
    }
  for (uint64_t a = 0; a < ring.size(); ++a) {
    size_t k = class_of(a, ring.one());
    if (to_loc[k] != loc.project(a))
      return "canonical maps disagree at " + ring.show(a);
  }
  return std::nullopt;
}

std::vector<std::vector<uint64_t>> enumerate_multiplicative_sets(
    std::shared_ptr<const GradedUniverse> ambient, bool dedup_by_kernel) {
  const GradedUniverse& r = *ambient;
  const std::vector<uint64_t>& hom = r.homogeneous_indices();

  // multiplicative closure of a candidate set; nullopt if it swallows 0
  auto closure = [&](std::set<uint64_t> s) -> std::optional<std::vector<uint64_t>> {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<uint64_t> cur(s.begin(), s.end());
      for (uint64_t x : cur)
        for (uint64_t y : cur) {
          uint64_t p = r.mul(x, y);
          if (p == 0) return std::nullopt;
          if (s.insert(p).second) grew = true;
        }
    }
    return std::vector<uint64_t>(s.begin(), s.end());
  };

  std::vector<std::vector<uint64_t>> found;
  std::set<std::vector<uint64_t>> seen;
  std::optional<std::vector<uint64_t>> start = closure({r.one()});
  found.push_back(*start);
  seen.insert(*start);
  for (size_t at = 0; at < found.size(); ++at) {
    std::vector<uint64_t> base = found[at];
    for (uint64_t x : hom) {
      if (x == 0 || sorted_contains(base, x)) continue;
      std::set<uint64_t> cand(base.begin(), base.end());
      cand.insert(x);
      std::optional<std::vector<uint64_t>> ext = closure(std::move(cand));
      if (!ext) continue;
      if (seen.insert(*ext).second) found.push_back(std::move(*ext));
    }
  }
  std::sort(found.begin(), found.end());
  if (!dedup_by_kernel) return found;

  std::vector<std::vector<uint64_t>> out;
  std::set<std::vector<uint64_t>> kernels;
  for (const std::vector<uint64_t>& s : found) {
    std::vector<uint64_t> kernel;
    for (uint64_t x : hom) {
      for (uint64_t t : s)
        if (r.mul(t, x) == 0) {
          kernel.push_back(x);
          break;
        }
    }
    if (kernels.insert(kernel).second) out.push_back(s);
  }
  return out;
}

std::shared_ptr<const GradedRing> product_construction(const GradedRing& left,
                                                       const GradedRing& right) {
  if (!(left.group() == right.group()))
    throw Error(Err::GroupMismatch, "factors use different grading groups");
  RingPresentation pres =
      RingPresentation::product({left.ring().presentation(), right.ring().presentation()});
  auto ring = std::make_shared<BasisRing>(pres, left.limits());
  std::vector<uint32_t> degs = left.slot_degrees();
  degs.insert(degs.end(), right.slot_degrees().begin(), right.slot_degrees().end());
  auto out = std::make_shared<GradedRing>(ring, left.group(), std::move(degs), left.limits());
  out->require_valid();
  return out;
}

GradedIdeal product_ideal(std::shared_ptr<const GradedUniverse> product,
                          const GradedIdeal& left_ideal, const GradedIdeal& right_ideal) {
  uint64_t nl = left_ideal.ambient()->size();
  uint64_t nr = right_ideal.ambient()->size();
  if (product->size() != nl * nr)
    throw Error(Err::AmbientMismatch, "product ring size does not match the factors");
  std::map<uint32_t, std::vector<uint64_t>> comps;
  for (uint32_t g : product->realized_degrees()) {
    std::vector<uint64_t> c;
    for (uint64_t a : left_ideal.component(g))
      for (uint64_t b : right_ideal.component(g)) c.push_back(a * nr + b);
    comps[g] = std::move(c);
  }
  return GradedIdeal(std::move(product), std::move(comps));
}

}  // namespace gril
