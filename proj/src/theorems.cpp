#include "gril/theorems.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "gril/classify.hpp"
#include "gril/expectations.hpp"

namespace gril {
namespace {

constexpr uint64_t kNone = UINT64_MAX;

std::string render_witness(const Verdict& v) {
  std::string out;
  for (const WitnessPart& w : v.witness) {
    if (!out.empty()) out += ", ";
    out += w.role + " = " + w.shown;
  }
  if (!v.notes.empty()) {
    if (!out.empty()) out += "; ";
    out += v.notes;
  }
  return out;
}

std::vector<std::string> shown_of(const Verdict& v) {
  std::vector<std::string> out;
  out.reserve(v.witness.size());
  for (const WitnessPart& w : v.witness) out.push_back(w.shown);
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

std::string describe_verdict(const Verdict& v) {
  std::string out = outcome_name(v.outcome);
  std::string w = render_witness(v);
  if (!w.empty()) out += " (" + w + ")";
  return out;
}

// Accumulates one CheckReport. Every premise-passing case goes through
// exactly one of pass/vac/expected/fail, so the bucket sum always equals
// instances.
struct Tally {
  CheckReport rep;

  Tally(std::string id, std::string fixture) {
    rep.check_id = std::move(id);
    rep.fixture = std::move(fixture);
  }

  void pass() {
    ++rep.instances;
    ++rep.passed;
  }
  void vac() {
    ++rep.instances;
    ++rep.vacuous;
  }
  void expected() {
    ++rep.instances;
    ++rep.expected_counterexamples;
  }
  void fail(std::string instance, std::string witness) {
    ++rep.instances;
    rep.failures.push_back({std::move(instance), std::move(witness)});
  }
  // Conclusion of an implication whose premise already passed.
  void conclude(const std::string& instance, const Verdict& v) {
    if (v.outcome == Outcome::Fail)
      fail(instance, render_witness(v));
    else if (v.outcome == Outcome::Vacuous)
      vac();
    else
      pass();
  }
  void require(const std::string& instance, bool ok, const std::string& witness) {
    if (ok)
      pass();
    else
      fail(instance, witness);
  }
  void equivalent(const std::string& instance, const Verdict& lhs, const Verdict& rhs,
                  const std::string& lhs_name, const std::string& rhs_name) {
    if (lhs.ok() != rhs.ok())
      fail(instance, lhs_name + " " + describe_verdict(lhs) + ", " + rhs_name + " " +
                         describe_verdict(rhs));
    else if (lhs.outcome == Outcome::Vacuous && rhs.outcome == Outcome::Vacuous)
      vac();
    else
      pass();
  }
  void note(const std::string& n) {
    if (std::find(rep.notes.begin(), rep.notes.end(), n) == rep.notes.end())
      rep.notes.push_back(n);
  }
};

// Proper graded ideals a sweep quantifies over. Rings beyond the enumeration
// budget fall back to zero, the anchor ideals and one round of their reducer
// images.
std::vector<GradedIdeal> sweep_ideals(const Fixture& f, Tally* t) {
  std::vector<GradedIdeal> out;
  if (f.ring->size() <= 1000) {
    for (const GradedIdeal& i : enumerate_graded_ideals(f.ring))
      if (i.proper()) out.push_back(i);
    return out;
  }
  if (t)
    t->note("ideal sweep restricted to zero, the anchor ideals and their reducer images");
  auto push_unique = [&out](GradedIdeal i) {
    for (const GradedIdeal& seen : out)
      if (seen.same_elements(i)) return;
    out.push_back(std::move(i));
  };
  push_unique(GradedIdeal::zero_ideal(f.ring));
  for (const auto& [name, ideal] : f.ideals) push_unique(ideal);
  size_t seeds = out.size();
  for (size_t k = 0; k < seeds; ++k)
    for (const PhiMap& phi : f.phis) {
      PhiResult img = apply_phi(phi, out[k]);
      if (img.ideal && img.ideal->proper()) push_unique(*img.ideal);
    }
  return out;
}

std::string ideal_label(const Fixture& f, const GradedIdeal& i) {
  for (const auto& [name, named] : f.ideals)
    if (named.same_elements(i)) return name;
  if (i.is_zero_ideal()) return "0";
  return i.show();
}

uint64_t parse_idx(const Fixture& f, const std::string& text) {
  return f.ring->ring().index_of(f.ring->ring().parse(text));
}

bool slice_full(const GradedUniverse& r, const GradedIdeal& i, uint32_t g) {
  return i.component(g).size() == r.component_indices(g).size();
}

// ---------------------------------------------------------------------------
// Hierarchy of the reducer family

void check_p11(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("P1.1", f.name);
  const std::vector<PhiMap> ladder = {PhiMap::empty_map(), PhiMap::zero_map(), PhiMap::omega(),
                                      PhiMap::power(3),   PhiMap::power(2),  PhiMap::identity()};
  for (const GradedIdeal& i : sweep_ideals(f, &t)) {
    std::vector<Verdict> v;
    std::vector<PhiResult> img;
    for (const PhiMap& phi : ladder) {
      v.push_back(classify_ideal(i, PredicateId::phi_one_absorbing(phi)));
      img.push_back(apply_phi(phi, i));
    }
    std::string base = "I=" + ideal_label(f, i);
    for (size_t k = 0; k + 1 < ladder.size(); ++k) {
      std::string pair = ladder[k].show() + " <= " + ladder[k + 1].show();
      bool leq = img[k].is_empty_set() ||
                 (!img[k + 1].is_empty_set() && img[k].ideal->subset_of(*img[k + 1].ideal));
      t.require(base + " order " + pair, leq,
                leq ? "" : "the smaller map escapes the larger one on this ideal");
      if (!leq || !v[k].ok()) continue;
      std::string label = base + " transfer " + pair;
      if (v[k + 1].ok())
        v[k + 1].outcome == Outcome::Vacuous ? t.vac() : t.pass();
      else
        t.fail(label, render_witness(v[k + 1]));
    }
  }
  out.push_back(std::move(t.rep));
}

void check_p12(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("P1.2", f.name);
  const std::vector<std::pair<std::string, PredicateId>> chain = {
      {"plain", PredicateId::one_absorbing()},
      {"weak", PredicateId::weakly_one_absorbing()},
      {"omega", PredicateId::phi_one_absorbing(PhiMap::omega())},
      {"power:4", PredicateId::phi_one_absorbing(PhiMap::power(4))},
      {"power:3", PredicateId::phi_one_absorbing(PhiMap::power(3))},
      {"power:2", PredicateId::phi_one_absorbing(PhiMap::power(2))},
  };
  for (const GradedIdeal& i : sweep_ideals(f, &t)) {
    std::vector<Verdict> v;
    for (const auto& [name, pred] : chain) v.push_back(classify_ideal(i, pred));
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      if (!v[k].ok()) continue;
      std::string label =
          "I=" + ideal_label(f, i) + " " + chain[k].first + " -> " + chain[k + 1].first;
      if (v[k + 1].ok())
        v[k + 1].outcome == Outcome::Vacuous ? t.vac() : t.pass();
      else
        t.fail(label, render_witness(v[k + 1]));
    }
  }
  out.push_back(std::move(t.rep));
}

void check_p13(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("P1.3", f.name);
  for (const GradedIdeal& i : sweep_ideals(f, &t)) {
    uint32_t nstar = 1;
    GradedIdeal stable = i;
    for (;;) {
      GradedIdeal next = ideal_product(stable, i);
      if (next.same_elements(stable)) break;
      stable = std::move(next);
      ++nstar;
      if (nstar > 64) break;  // cannot happen: powers of a finite ideal stabilize fast
    }
    bool conj = true;
    std::string broken;
    for (uint32_t n = 2; n <= nstar && conj; ++n)
      if (!classify_ideal(i, PredicateId::phi_one_absorbing(PhiMap::power(n))).ok()) {
        conj = false;
        broken = "power:" + std::to_string(n);
      }
    Verdict om = classify_ideal(i, PredicateId::phi_one_absorbing(PhiMap::omega()));
    std::string label = "I=" + ideal_label(f, i) + " stable at " + std::to_string(nstar);
    if (conj == om.ok())
      om.outcome == Outcome::Vacuous && conj ? t.vac() : t.pass();
    else
      t.fail(label, std::string("the finite powers ") +
                        (conj ? "all hold" : "fail at " + broken) +
                        " while the stable form is " + describe_verdict(om));
  }
  out.push_back(std::move(t.rep));
}

void check_p14(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("P1.4", f.name);
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (const PhiMap& phi : f.phis) {
      if (!classify_ideal(i, PredicateId::phi_prime(phi)).ok()) continue;
      t.conclude("I=" + ideal_label(f, i) + " phi=" + phi.show(),
                 classify_ideal(i, PredicateId::phi_one_absorbing(phi)));
    }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Local rings: small powers of the maximal ideal

void check_r1(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("R1", f.name);
  SpectrumInfo s = graded_spectrum(f.ring);
  if (s.is_graded_local) {
    GradedIdeal m2 = ideal_power(*s.unique_maximal, 2);
    for (const GradedIdeal& i : sweep_ideals(f, &t)) {
      if (!m2.subset_of(i)) continue;
      t.conclude("I=" + ideal_label(f, i), classify_ideal(i, PredicateId::one_absorbing()));
    }
  }
  out.push_back(std::move(t.rep));
}

void check_r1_cor(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("R1-Cor", f.name);
  SpectrumInfo s = graded_spectrum(f.ring);
  if (s.is_graded_local) {
    GradedIdeal m2 = ideal_power(*s.unique_maximal, 2);
    t.conclude("I=m^2", classify_ideal(m2, PredicateId::one_absorbing()));
  }
  out.push_back(std::move(t.rep));
}

void check_l1(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("L1", f.name);
  SpectrumInfo s = graded_spectrum(f.ring);
  if (s.is_graded_local) {
    GradedIdeal m3 = ideal_power(*s.unique_maximal, 3);
    for (const GradedIdeal& i : sweep_ideals(f, &t))
      for (const PhiMap& phi : f.phis) {
        PhiResult img = apply_phi(phi, i);
        if (img.is_empty_set() || !m3.subset_of(*img.ideal)) continue;
        t.conclude("I=" + ideal_label(f, i) + " phi=" + phi.show(),
                   classify_ideal(i, PredicateId::phi_one_absorbing(phi)));
      }
  }
  out.push_back(std::move(t.rep));
}

void check_l1_cor(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("L1-Cor", f.name);
  SpectrumInfo s = graded_spectrum(f.ring);
  if (s.is_graded_local && ideal_power(*s.unique_maximal, 3).is_zero_ideal()) {
    for (const GradedIdeal& i : sweep_ideals(f, &t))
      for (const PhiMap& phi : f.phis) {
        if (phi.kind() == PhiMap::Kind::Empty) continue;  // needs a nonempty image
        t.conclude("I=" + ideal_label(f, i) + " phi=" + phi.show(),
                   classify_ideal(i, PredicateId::phi_one_absorbing(phi)));
      }
  }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// The six conditions: chain, recorded gap, per-degree equivalence

void check_t1_chain(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T1-chain", f.name);
  const ColonUnionGapLock& lock = colon_union_gap_lock();
  std::optional<PhiMap> lock_phi = PhiMap::parse(lock.phi);
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (const PhiMap& phi : f.phis) {
      std::vector<Verdict> c;
      c.reserve(6);
      for (uint32_t k = 1; k <= 6; ++k) c.push_back(theorem1_condition(k, i, phi));
      std::string base = "I=" + ideal_label(f, i) + " phi=" + phi.show();
      for (uint32_t k = 6; k >= 2; --k) {
        if (!c[k - 1].ok()) continue;
        std::string label =
            base + " (" + std::to_string(k) + ") -> (" + std::to_string(k - 1) + ")";
        const Verdict& con = c[k - 2];
        if (con.ok())
          con.outcome == Outcome::Vacuous ? t.vac() : t.pass();
        else
          t.fail(label, render_witness(con));
      }
      bool locked = f.name == lock.fixture && ideal_label(f, i) == lock.ideal && lock_phi &&
                    phi.kind() == lock_phi->kind();
      if (locked) {
        // recorded one-way gap: (1) holds yet (2) fails at the frozen pair
        if (c[0].outcome == Outcome::Pass && c[1].outcome == Outcome::Fail &&
            shown_of(c[1]) == lock.violation)
          t.expected();
        else
          t.fail(base + " recorded gap",
                 "expected (1) PASS and (2) FAIL at " + join(lock.violation) + ", got (1) " +
                     describe_verdict(c[0]) + " and (2) " + describe_verdict(c[1]));
      }
    }
  out.push_back(std::move(t.rep));
}

void check_t1_counterexample(const Fixture& f, std::vector<CheckReport>& out) {
  const ColonUnionGapLock& lock = colon_union_gap_lock();
  if (f.name != lock.fixture) return;
  Tally t("T1-counterexample", f.name);
  t.note("condition (1) holds while condition (2) fails at " + join(lock.violation));
  const GradedIdeal* i = f.find_ideal(lock.ideal);
  std::optional<PhiMap> phi = PhiMap::parse(lock.phi);
  if (!i || !phi) {
    t.fail("lock data", "the recorded ideal or reducer is missing from the fixture");
    out.push_back(std::move(t.rep));
    return;
  }
  Verdict c1 = theorem1_condition(1, *i, *phi);
  if (c1.outcome == Outcome::Pass)
    t.expected();
  else
    t.fail("condition (1)", "expected PASS, got " + describe_verdict(c1));
  Verdict c2 = theorem1_condition(2, *i, *phi);
  if (c2.outcome == Outcome::Fail && shown_of(c2) == lock.violation)
    t.expected();
  else
    t.fail("condition (2)",
           "expected FAIL at " + join(lock.violation) + ", got " + describe_verdict(c2));
  out.push_back(std::move(t.rep));
}

void check_t1g(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T1g-equiv", f.name);
  const GradedUniverse& r = *f.ring;
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (uint32_t g : r.realized_degrees()) {
      if (slice_full(r, i, g)) continue;
      for (const PhiMap& phi : f.phis) {
        std::vector<Verdict> c;
        c.reserve(6);
        for (uint32_t k = 1; k <= 6; ++k) c.push_back(theorem1_condition(k, i, phi, g));
        std::string label =
            "I=" + ideal_label(f, i) + " phi=" + phi.show() + " g=" + r.group().show(g);
        size_t bad = 6;
        for (size_t k = 1; k < 6; ++k)
          if (c[k].ok() != c[0].ok()) {
            bad = k;
            break;
          }
        if (bad < 6) {
          t.fail(label, "(1) is " + describe_verdict(c[0]) + " while (" +
                            std::to_string(bad + 1) + ") is " + describe_verdict(c[bad]));
        } else {
          bool allvac = std::all_of(c.begin(), c.end(), [](const Verdict& v) {
            return v.outcome == Outcome::Vacuous;
          });
          allvac ? t.vac() : t.pass();
        }
      }
    }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Boundary triples of a per-degree absorbing ideal

std::string t2_scaled_outside(const GradedUniverse& r, const PhiResult& img,
                              const std::vector<uint64_t>& ig, uint64_t factor,
                              const std::string& name) {
  for (uint64_t x : ig)
    if (!img.contains(r.mul(factor, x)))
      return name + " x outside the image at x = " + r.show(x);
  return "";
}

std::string t2_pair_scaled_outside(const GradedUniverse& r, const PhiResult& img,
                                   const std::vector<uint64_t>& ig, uint64_t factor,
                                   const std::string& name) {
  for (size_t p = 0; p < ig.size(); ++p)
    for (size_t q = p; q < ig.size(); ++q)
      if (!img.contains(r.mul(factor, r.mul(ig[p], ig[q]))))
        return name + " x y outside the image at x = " + r.show(ig[p]) +
               ", y = " + r.show(ig[q]);
  return "";
}

void check_t2_family(const Fixture& f, std::vector<CheckReport>& out, int variant) {
  static const char* ids[] = {"T2", "T2a", "T2b"};
  Tally t(ids[variant], f.name);
  const GradedUniverse& r = *f.ring;
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (uint32_t g : r.realized_degrees()) {
      if (slice_full(r, i, g)) continue;
      for (const PhiMap& phi : f.phis) {
        if (!classify_ideal(i, PredicateId::component_phi_one_absorbing(g, phi)).ok()) continue;
        PhiResult img = apply_phi(phi, i);
        const std::vector<uint64_t>& ig = i.component(g);
        for (const TripleZero& tz : find_triple_zeros(i, g, phi)) {
          std::string label = "I=" + ideal_label(f, i) + " phi=" + phi.show() + " g=" +
                              r.group().show(g) + " a=" + r.show(tz.a) + " b=" + r.show(tz.b) +
                              " c=" + r.show(tz.c);
          uint64_t ab = r.mul(tz.a, tz.b);
          if (variant == 0) {
            std::string why = t2_scaled_outside(r, img, ig, ab, "ab");
            t.require(label, why.empty(), why);
            continue;
          }
          uint64_t ac = r.mul(tz.a, tz.c);
          uint64_t bc = r.mul(tz.b, tz.c);
          if (i.contains(ac) || i.contains(bc)) continue;
          if (variant == 1) {
            std::string why = t2_scaled_outside(r, img, ig, ac, "ac");
            if (why.empty()) why = t2_scaled_outside(r, img, ig, bc, "bc");
            if (why.empty()) why = t2_pair_scaled_outside(r, img, ig, tz.a, "a");
            if (why.empty()) why = t2_pair_scaled_outside(r, img, ig, tz.b, "b");
            if (why.empty()) why = t2_pair_scaled_outside(r, img, ig, tz.c, "c");
            t.require(label, why.empty(), why);
          } else {
            std::string why;
            for (size_t p = 0; p < ig.size() && why.empty(); ++p)
              for (size_t q = p; q < ig.size() && why.empty(); ++q)
                for (size_t s = q; s < ig.size() && why.empty(); ++s)
                  if (!img.contains(r.mul(r.mul(ig[p], ig[q]), ig[s])))
                    why = "x y z outside the image at x = " + r.show(ig[p]) +
                          ", y = " + r.show(ig[q]) + ", z = " + r.show(ig[s]);
            t.require(label, why.empty(), why);
          }
        }
      }
    }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Principal ideals with small annihilators

void check_t3(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T3", f.name);
  const GradedUniverse& r = *f.ring;
  GradedIdeal zero = GradedIdeal::zero_ideal(f.ring);
  for (uint64_t x : nonunit_homogeneous(r)) {
    GradedIdeal rx = generate_graded_ideal(f.ring, {x});
    if (!colon_ideal(zero, x).subset_of(rx)) continue;
    std::optional<uint32_t> g = r.degree_of(x);
    if (!g) continue;  // only zero lacks a degree, and its annihilator is everything
    if (slice_full(r, rx, *g)) continue;
    for (const PhiMap& phi : f.phis) {
      bool below_square = phi.kind() == PhiMap::Kind::Empty ||
                          phi.kind() == PhiMap::Kind::Zero ||
                          phi.kind() == PhiMap::Kind::Omega ||
                          (phi.kind() == PhiMap::Kind::Power && phi.power_exponent() >= 2);
      if (!below_square) continue;
      Verdict reduced = classify_ideal(rx, PredicateId::component_phi_one_absorbing(*g, phi));
      Verdict plain =
          classify_ideal(rx, PredicateId::component_phi_one_absorbing(*g, PhiMap::empty_map()));
      t.equivalent("x=" + r.show(x) + " phi=" + phi.show(), reduced, plain, "reduced form",
                   "plain form");
    }
  }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Identity slice: prime coincides with absorbing away from local slices

uint64_t slice_closure_size(const GradedUniverse& r, const std::vector<uint64_t>& re,
                            const std::vector<uint64_t>& seed, uint64_t extra) {
  // seed is already an ideal of the slice; only the new element propagates
  std::set<uint64_t> span(seed.begin(), seed.end());
  std::vector<uint64_t> frontier;
  if (span.insert(extra).second) frontier.push_back(extra);
  while (!frontier.empty()) {
    uint64_t y = frontier.back();
    frontier.pop_back();
    std::vector<uint64_t> produced;
    produced.reserve(span.size() + re.size());
    for (uint64_t z : span) produced.push_back(r.add(y, z));
    for (uint64_t z : re) produced.push_back(r.mul(y, z));
    for (uint64_t p : produced)
      if (span.insert(p).second) frontier.push_back(p);
  }
  return span.size();
}

bool maximal_in_slice(const GradedUniverse& r, const std::vector<uint64_t>& re,
                      const std::vector<uint64_t>& c) {
  if (c.empty() || c.size() == re.size()) return false;
  for (uint64_t x : re) {
    if (std::binary_search(c.begin(), c.end(), x)) continue;
    if (slice_closure_size(r, re, c, x) != re.size()) return false;
  }
  return true;
}

bool slice_is_local(const GradedUniverse& r, const std::vector<uint64_t>& re) {
  std::vector<uint64_t> nonunits;
  for (uint64_t x : re)
    if (!r.is_unit(x)) nonunits.push_back(x);
  for (size_t i = 0; i < nonunits.size(); ++i)
    for (size_t j = i; j < nonunits.size(); ++j)
      if (r.is_unit(r.add(nonunits[i], nonunits[j]))) return false;
  return true;
}

void check_t4(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T4", f.name);
  const GradedUniverse& r = *f.ring;
  const std::vector<uint64_t>& re = r.component_indices(0);
  bool diverged = false;
  for (uint64_t x : re) {
    bool slice_unit = false;
    for (uint64_t y : re)
      if (r.mul(x, y) == r.one()) {
        slice_unit = true;
        break;
      }
    if (slice_unit != r.is_unit(x)) {
      diverged = true;
      break;
    }
  }
  if (diverged) {
    t.note("identity-slice units differ from ring units here; the equivalence is not asserted");
    out.push_back(std::move(t.rep));
    return;
  }
  if (slice_is_local(r, re)) {
    out.push_back(std::move(t.rep));
    return;
  }
  for (const GradedIdeal& i : sweep_ideals(f, &t)) {
    if (slice_full(r, i, 0)) continue;
    for (const PhiMap& phi : f.phis) {
      PhiResult img = apply_phi(phi, i);
      bool premise = true;
      for (uint64_t a : i.component(0)) {
        std::vector<uint64_t> c;
        for (uint64_t x : re)
          if (img.contains(r.mul(x, a))) c.push_back(x);
        if (maximal_in_slice(r, re, c)) {
          premise = false;
          break;
        }
      }
      if (!premise) continue;
      Verdict pr = classify_ideal(i, PredicateId::component_phi_prime(0, phi));
      Verdict ab = classify_ideal(i, PredicateId::component_phi_one_absorbing(0, phi));
      t.equivalent("I=" + ideal_label(f, i) + " phi=" + phi.show(), pr, ab, "prime form",
                   "absorbing form");
    }
  }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Transfer along quotients

void check_t5i(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T5i", f.name);
  t.note("the empty reducer is skipped: it yields no quotient to pass to");
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (const PhiMap& phi : f.phis) {
      if (phi.kind() == PhiMap::Kind::Empty) continue;
      if (!classify_ideal(i, PredicateId::phi_one_absorbing(phi)).ok()) continue;
      PhiResult img = apply_phi(phi, i);
      auto q = QuotientRing::create(f.ring, *img.ideal);
      t.conclude("I=" + ideal_label(f, i) + " phi=" + phi.show(),
                 classify_ideal(q->project_ideal(i), PredicateId::weakly_one_absorbing()));
    }
  out.push_back(std::move(t.rep));
}

void check_t5ii(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T5ii", f.name);
  t.note("the empty reducer is skipped: it yields no quotient to pass to");
  for (const GradedIdeal& i : sweep_ideals(f, &t))
    for (const PhiMap& phi : f.phis) {
      if (phi.kind() == PhiMap::Kind::Empty) continue;
      PhiResult img = apply_phi(phi, i);
      auto q = QuotientRing::create(f.ring, *img.ideal);
      if (!classify_ideal(q->project_ideal(i), PredicateId::weakly_one_absorbing()).ok())
        continue;
      // units downstairs must be exactly the images of units upstairs
      std::vector<uint8_t> unit_image(q->size(), 0);
      for (uint64_t a = 0; a < f.ring->size(); ++a)
        if (f.ring->is_unit(a)) unit_image[q->project(a)] = 1;
      bool lifts = true;
      for (uint64_t c = 0; c < q->size(); ++c)
        if (q->is_unit(c) != static_cast<bool>(unit_image[c])) {
          lifts = false;
          break;
        }
      if (!lifts) continue;
      t.conclude("I=" + ideal_label(f, i) + " phi=" + phi.show(),
                 classify_ideal(i, PredicateId::phi_one_absorbing(phi)));
    }
  out.push_back(std::move(t.rep));
}

void check_t5iii(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T5iii", f.name);
  std::vector<GradedIdeal> ideals = sweep_ideals(f, &t);
  for (const GradedIdeal& i : ideals)
    for (const PhiMap& phi : f.phis) {
      if (!classify_ideal(i, PredicateId::phi_one_absorbing(phi)).ok()) continue;
      for (const GradedIdeal& j : ideals) {
        if (!j.subset_of(i)) continue;
        auto q = QuotientRing::create(f.ring, j);
        t.conclude(
            "I=" + ideal_label(f, i) + " phi=" + phi.show() + " J=" + ideal_label(f, j),
            classify_ideal(q->project_ideal(i),
                           PredicateId::phi_one_absorbing(PhiMap::induced_quotient(phi, q))));
      }
    }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Transfer along localizations

void check_t6(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("T6", f.name);
  if (f.ring->size() > f.ring->limits().max_oracle_ring) {
    t.note("ring larger than the fraction-oracle bound; localization sweep skipped");
    out.push_back(std::move(t.rep));
    return;
  }
  std::vector<GradedIdeal> ideals = sweep_ideals(f, &t);
  std::vector<std::vector<bool>> pre(ideals.size(), std::vector<bool>(f.phis.size()));
  for (size_t ii = 0; ii < ideals.size(); ++ii)
    for (size_t p = 0; p < f.phis.size(); ++p)
      pre[ii][p] =
          classify_ideal(ideals[ii], PredicateId::phi_one_absorbing(f.phis[p])).ok();
  for (const std::vector<uint64_t>& s : enumerate_multiplicative_sets(f.ring, false)) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (uint64_t e : s) names.push_back(f.ring->show(e));
    std::string sname = "S={" + join(names) + "}";
    Localization loc = localize(f.ring, s);
    std::optional<std::string> mismatch = localization_oracle_mismatch(*f.ring, s, *loc.ring);
    t.require(sname + " fraction model", !mismatch.has_value(), mismatch.value_or(""));
    for (size_t ii = 0; ii < ideals.size(); ++ii) {
      bool meets = false;
      for (uint64_t e : s)
        if (ideals[ii].contains(e)) {
          meets = true;
          break;
        }
      if (meets) continue;
      GradedIdeal image = loc.ring->project_ideal(ideals[ii]);
      for (size_t p = 0; p < f.phis.size(); ++p) {
        if (!pre[ii][p]) continue;
        t.conclude(sname + " I=" + ideal_label(f, ideals[ii]) + " phi=" + f.phis[p].show(),
                   classify_ideal(image, PredicateId::phi_one_absorbing(PhiMap::induced_localized(
                                             f.phis[p], loc.ring))));
      }
    }
  }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Product rings

std::optional<std::string> slice_prime_violation(const GradedUniverse& r, const GradedIdeal& j) {
  const std::vector<uint64_t>& re = r.component_indices(0);
  const std::vector<uint64_t>& je = j.component(0);
  if (je.size() == re.size()) return "the identity slice is the whole slice";
  for (uint64_t x : re)
    for (uint64_t y : re) {
      if (!std::binary_search(je.begin(), je.end(), r.mul(x, y))) continue;
      if (!std::binary_search(je.begin(), je.end(), x) &&
          !std::binary_search(je.begin(), je.end(), y))
        return "x = " + r.show(x) + ", y = " + r.show(y) + " multiply in while both stay out";
    }
  return std::nullopt;
}

bool reducer_slice_admits(const std::shared_ptr<const GradedRing>& ring, const PhiMap& phi) {
  PhiResult img = apply_phi(phi, GradedIdeal::whole_ring(ring));
  const std::vector<uint64_t>& re = ring->component_indices(0);
  std::vector<uint64_t> img_e;
  if (!img.is_empty_set()) img_e = img.ideal->component(0);
  if (img_e.size() == re.size()) return false;
  // not the unique maximal ideal of the slice: some nonunit escapes it
  for (uint64_t x : re)
    if (!ring->is_unit(x) && !std::binary_search(img_e.begin(), img_e.end(), x)) return true;
  return false;
}

void check_t7(const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out, int level) {
  static const char* ids[] = {"", "T7.1", "T7.2", "T7.3"};
  for (size_t ia = 0; ia < fs.size(); ++ia)
    for (size_t ib = ia; ib < fs.size(); ++ib) {
      const Fixture& fa = *fs[ia];
      const Fixture& fb = *fs[ib];
      if (!(fa.ring->group() == fb.ring->group())) continue;
      if (fa.ring->size() * fb.ring->size() > 36) continue;
      std::shared_ptr<const GradedRing> prod = product_construction(*fa.ring, *fb.ring);
      Tally t(ids[level], fa.name + " x " + fb.name);
      if (level >= 2)
        t.note("the reducer of a slice is read as the slice of the reducer image");
      if (level == 3)
        t.note("when the right factor is whole, the left factor's identity slice is asserted prime");
      for (const GradedIdeal& li : enumerate_graded_ideals(fa.ring))
        for (const GradedIdeal& rj : enumerate_graded_ideals(fb.ring)) {
          if (!li.proper() && !rj.proper()) continue;
          GradedIdeal big = product_ideal(prod, li, rj);
          for (const PhiMap& phi : fa.phis)
            for (const PhiMap& psi : fb.phis) {
              PhiMap theta = PhiMap::product_theta(phi, psi, fa.ring, fb.ring);
              if (!classify_ideal(big, PredicateId::phi_one_absorbing(theta)).ok()) continue;
              std::string label = "I=" + ideal_label(fa, li) + " J=" + ideal_label(fb, rj) +
                                  " phi=" + phi.show() + " psi=" + psi.show();
              if (level == 1) {
                std::string why;
                if (li.proper()) {
                  Verdict v = classify_ideal(li, PredicateId::phi_prime(phi));
                  if (!v.ok()) why = "left factor: " + render_witness(v);
                } else {
                  t.note("a factor equal to its whole ring meets its half of the conclusion trivially");
                }
                if (why.empty() && rj.proper()) {
                  Verdict v = classify_ideal(rj, PredicateId::phi_prime(psi));
                  if (!v.ok()) why = "right factor: " + render_witness(v);
                } else if (!rj.proper()) {
                  t.note("a factor equal to its whole ring meets its half of the conclusion trivially");
                }
                t.require(label, why.empty(), why);
                continue;
              }
              PhiResult img = apply_phi(theta, big);
              bool moved = img.is_empty_set() || img.ideal->component(0) != big.component(0);
              if (!moved) continue;
              if (level == 2) {
                t.require(label, !li.proper() || !rj.proper(), "both factors are proper");
                continue;
              }
              if (!reducer_slice_admits(fa.ring, phi) || !reducer_slice_admits(fb.ring, psi))
                continue;
              if (!li.proper()) {
                std::optional<std::string> bad = slice_prime_violation(*fb.ring, rj);
                t.require(label, !bad.has_value(), "right factor: " + bad.value_or(""));
              } else if (!rj.proper()) {
                std::optional<std::string> bad = slice_prime_violation(*fa.ring, li);
                t.require(label, !bad.has_value(), "left factor: " + bad.value_or(""));
              } else {
                t.fail(label, "neither factor is the whole ring");
              }
            }
        }
      out.push_back(std::move(t.rep));
    }
}

// ---------------------------------------------------------------------------
// Regular rings

bool ring_is_boolean(const GradedUniverse& r) {
  for (uint64_t a = 0; a < r.size(); ++a)
    if (r.mul(a, a) != a) return false;
  return true;
}

void check_s3_def(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-def-examples", f.name);
  const GradedUniverse& r = *f.ring;
  VnrInfo info = vnr_suite(f.ring);
  for (const RegularityLock& lock : regularity_locks()) {
    if (lock.fixture != f.name) continue;
    t.require("locked regularity verdict", info.is_vnr == lock.is_vnr,
              "expected " + std::string(lock.is_vnr ? "regular" : "not regular") +
                  (info.notes.empty() ? "" : "; " + info.notes));
  }
  if (f.ring->is_graded_field())
    t.require("graded field is regular", info.is_vnr, info.notes);
  if (ring_is_boolean(r))
    t.require("Boolean ring is regular", info.is_vnr, info.notes);
  if (info.is_vnr) {
    std::string bad;
    for (const auto& [a, x] : info.witness) {
      if (r.mul(r.mul(a, a), x) != a) {
        bad = "a = " + r.show(a) + " is not recovered from its witness";
        break;
      }
      std::optional<uint32_t> da = r.degree_of(a);
      if (da) {
        std::optional<uint32_t> inv = r.group().inverse(*da);
        if (!inv || !r.in_component(x, *inv)) {
          bad = "the witness for a = " + r.show(a) + " has the wrong degree";
          break;
        }
      }
    }
    if (bad.empty() && info.witness.size() != r.homogeneous_indices().size())
      bad = "the witness map does not cover h(R)";
    t.require("witness map", bad.empty(), bad);
  }
  out.push_back(std::move(t.rep));
}

void check_s3_l1(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-L1", f.name);
  const GradedUniverse& r = *f.ring;
  for (uint64_t u : r.homogeneous_indices()) {
    if (!r.is_unit(u)) continue;
    uint64_t inv = kNone;
    for (uint64_t s = 0; s < r.size(); ++s)
      if (r.mul(u, s) == r.one()) {
        inv = s;
        break;
      }
    std::optional<uint32_t> g = r.degree_of(u);
    std::optional<uint32_t> gi = g ? r.group().inverse(*g) : std::nullopt;
    bool ok = inv != kNone && gi && r.in_component(inv, *gi);
    t.require("u=" + r.show(u), ok,
              inv == kNone ? "no inverse found"
                           : "the inverse " + r.show(inv) + " misses the inverse-degree slice");
  }
  out.push_back(std::move(t.rep));
}

void check_s3_l2(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-L2", f.name);
  const GradedUniverse& r = *f.ring;
  for (uint64_t a : r.homogeneous_indices()) {
    if (r.mul(a, a) != a) continue;
    t.require("a=" + r.show(a), r.in_component(a, 0),
              "a homogeneous idempotent escapes the identity slice");
  }
  out.push_back(std::move(t.rep));
}

// Additive subgroups as sorted index vectors; mask enumeration, so only for
// rings of at most 8 elements. Character 2 makes negation automatic.
std::vector<std::vector<uint64_t>> additive_subgroups(const GradedUniverse& r) {
  uint64_t n = r.size();
  std::vector<std::vector<uint64_t>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain zero
    std::vector<uint64_t> members;
    for (uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1u) members.push_back(i);
    bool closed = true;
    for (size_t i = 0; i < members.size() && closed; ++i)
      for (size_t j = i; j < members.size() && closed; ++j)
        closed = std::binary_search(members.begin(), members.end(),
                                    r.add(members[i], members[j]));
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

bool spans_whole(const GradedUniverse& r, const std::vector<const std::vector<uint64_t>*>& parts) {
  std::set<uint64_t> span;
  std::vector<uint64_t> frontier;
  for (const std::vector<uint64_t>* p : parts)
    for (uint64_t e : *p)
      if (span.insert(e).second) frontier.push_back(e);
  while (!frontier.empty()) {
    uint64_t y = frontier.back();
    frontier.pop_back();
    std::vector<uint64_t> produced;
    for (uint64_t z : span) produced.push_back(r.add(y, z));
    for (uint64_t p : produced)
      if (span.insert(p).second) frontier.push_back(p);
  }
  return span.size() == r.size();
}

void check_s3_p3(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-P3", f.name);
  const GradedUniverse& r = *f.ring;
  if (ring_is_boolean(r) && r.size() <= 8) {
    t.note("candidate gradings over the cyclic groups of order 2 to 4");
    std::vector<std::vector<uint64_t>> subs = additive_subgroups(r);
    for (uint32_t m = 2; m <= 4; ++m) {
      std::string found;
      std::vector<const std::vector<uint64_t>*> pick(m, nullptr);
      auto in_part = [&](uint32_t g, uint64_t e) {
        return std::binary_search(pick[g]->begin(), pick[g]->end(), e);
      };
      std::function<void(uint32_t, uint64_t)> rec = [&](uint32_t depth, uint64_t size_prod) {
        if (!found.empty()) return;
        if (depth == m) {
          if (size_prod != r.size()) return;
          if (!in_part(0, r.one())) return;
          if (!spans_whole(r, pick)) return;
          for (uint32_t g = 0; g < m; ++g)
            for (uint32_t h = 0; h < m; ++h)
              for (uint64_t x : *pick[g])
                for (uint64_t y : *pick[h])
                  if (!in_part((g + h) % m, r.mul(x, y))) return;
          for (uint32_t g = 1; g < m; ++g)
            if (pick[g]->size() > 1) {
              std::string sizes;
              for (uint32_t h = 0; h < m; ++h)
                sizes += (h ? ", " : "") + std::to_string(pick[h]->size());
              found = "a nontrivial grading with slice sizes " + sizes;
              return;
            }
          return;
        }
        for (const std::vector<uint64_t>& s : subs) {
          if (size_prod * s.size() > r.size()) continue;
          pick[depth] = &s;
          rec(depth + 1, size_prod * s.size());
          if (!found.empty()) return;
        }
      };
      rec(0, 1);
      t.require("cyclic(" + std::to_string(m) + ") candidates", found.empty(), found);
    }
  }
  out.push_back(std::move(t.rep));
}

void check_s3_l4(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-L4", f.name);
  const GradedUniverse& r = *f.ring;
  if (vnr_suite(f.ring).is_vnr) {
    for (uint64_t x : r.homogeneous_indices()) {
      uint64_t a = principal_to_idempotent(r, x);
      std::string why;
      if (r.mul(a, a) != a)
        why = "the witness product is not idempotent";
      else if (!r.in_component(a, 0))
        why = "the idempotent escapes the identity slice";
      else if (!generate_graded_ideal(f.ring, {a}).same_elements(
                   generate_graded_ideal(f.ring, {x})))
        why = "the idempotent generates a different ideal";
      t.require("x=" + r.show(x) + " a=" + r.show(a), why.empty(), why);
    }
  }
  out.push_back(std::move(t.rep));
}

void check_s3_t5(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-T5", f.name);
  const GradedUniverse& r = *f.ring;
  if (vnr_suite(f.ring).is_vnr) {
    for (uint64_t x : r.homogeneous_indices()) {
      GradedIdeal rx = generate_graded_ideal(f.ring, {x});
      if (!rx.proper()) continue;
      Verdict v = classify_ideal(rx, PredicateId::phi_one_absorbing(PhiMap::power(2)));
      // principal ideals are idempotent here, so the hypothesis set is empty
      if (v.outcome == Outcome::Vacuous)
        t.vac();
      else
        t.fail("x=" + r.show(x), "expected VACUOUS, got " + describe_verdict(v));
    }
  }
  out.push_back(std::move(t.rep));
}

void check_s3_p6(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-P6", f.name);
  const GradedUniverse& r = *f.ring;
  if (vnr_suite(f.ring).is_vnr) {
    GradedIdeal whole = GradedIdeal::whole_ring(f.ring);
    for (uint64_t x : r.homogeneous_indices()) {
      auto [rx, j] = vnr_decomposition(f.ring, x);
      std::string why;
      if (!ideal_sum(rx, j).same_elements(whole))
        why = "the pair does not sum to the whole ring";
      else if (!ideal_intersection(rx, j).is_zero_ideal())
        why = "the pair meets beyond zero";
      else if (!ideal_power(j, 2).same_elements(j))
        why = "the complement is not idempotent";
      t.require("x=" + r.show(x), why.empty(), why);
    }
  }
  out.push_back(std::move(t.rep));
}

void check_s3_cor(const Fixture& f, std::vector<CheckReport>& out) {
  Tally t("S3-Cor", f.name);
  const GradedUniverse& r = *f.ring;
  if (vnr_suite(f.ring).is_vnr) {
    GradedIdeal whole = GradedIdeal::whole_ring(f.ring);
    for (uint64_t x : r.homogeneous_indices()) {
      auto [rx, j] = vnr_decomposition(f.ring, x);
      std::string why;
      if (!ideal_power(rx, 2).same_elements(rx))
        why = "the principal part is not idempotent";
      else if (!ideal_power(j, 2).same_elements(j))
        why = "the complement is not idempotent";
      else if (!ideal_sum(rx, j).same_elements(whole))
        why = "the pair does not sum to the whole ring";
      else if (!ideal_intersection(rx, j).is_zero_ideal())
        why = "the pair meets beyond zero";
      t.require("x=" + r.show(x), why.empty(), why);
    }
  }
  out.push_back(std::move(t.rep));
}

// ---------------------------------------------------------------------------
// Locked example reproductions

void check_ex2(const Fixture& f, std::vector<CheckReport>& out) {
  for (const AbsorbingGapLock& lock : absorbing_gap_locks()) {
    if (lock.fixture != f.name) continue;
    Tally t("Ex2", f.name);
    t.note("least violation: " + join(lock.least_violation) +
           "; recorded violation: " + join(lock.recorded_violation));
    const GradedIdeal* i = f.find_ideal(lock.ideal);
    if (!i) {
      t.fail("lock data", "ideal " + lock.ideal + " is missing from the fixture");
      out.push_back(std::move(t.rep));
      continue;
    }
    Verdict weak = classify_ideal(*i, PredicateId::weakly_one_absorbing());
    t.require("weak form", weak.outcome == Outcome::Pass, describe_verdict(weak));
    Verdict strong = classify_ideal(*i, PredicateId::one_absorbing());
    if (strong.outcome == Outcome::Fail && shown_of(strong) == lock.least_violation)
      t.expected();
    else
      t.fail("plain form", "expected FAIL at " + join(lock.least_violation) + ", got " +
                               describe_verdict(strong));
    const GradedUniverse& r = *f.ring;
    uint64_t a = parse_idx(f, lock.recorded_violation[0]);
    uint64_t b = parse_idx(f, lock.recorded_violation[1]);
    uint64_t c = parse_idx(f, lock.recorded_violation[2]);
    uint64_t ab = r.mul(a, b);
    uint64_t abc = r.mul(ab, c);
    bool confirmed = abc == 0 && i->contains(abc) && !i->contains(ab) && !i->contains(c) &&
                     !r.is_unit(a) && !r.is_unit(b) && !r.is_unit(c) && r.is_homogeneous(a) &&
                     r.is_homogeneous(b) && r.is_homogeneous(c);
    if (confirmed)
      t.expected();
    else
      t.fail("recorded violation", "the recorded triple does not exhibit the gap");
    out.push_back(std::move(t.rep));
  }
}

void check_ex3(const Fixture& f, std::vector<CheckReport>& out) {
  const StablePowerGapLock& lock = stable_power_gap_lock();
  if (f.name != lock.fixture) return;
  Tally t("Ex3", f.name);
  t.note("least violation: " + join(lock.least_violation) +
         "; recorded violation: " + join(lock.recorded_violation));
  const GradedIdeal* i = f.find_ideal(lock.ideal);
  if (!i) {
    t.fail("lock data", "ideal " + lock.ideal + " is missing from the fixture");
    out.push_back(std::move(t.rep));
    return;
  }
  Verdict om = classify_ideal(*i, PredicateId::phi_one_absorbing(PhiMap::omega()));
  if (om.outcome == Outcome::Vacuous)
    t.vac();
  else
    t.fail("stable form", "expected VACUOUS, got " + describe_verdict(om));
  Verdict weak = classify_ideal(*i, PredicateId::weakly_one_absorbing());
  if (weak.outcome == Outcome::Fail && shown_of(weak) == lock.least_violation)
    t.expected();
  else
    t.fail("weak form", "expected FAIL at " + join(lock.least_violation) + ", got " +
                            describe_verdict(weak));
  const GradedUniverse& r = *f.ring;
  uint64_t a = parse_idx(f, lock.recorded_violation[0]);
  uint64_t b = parse_idx(f, lock.recorded_violation[1]);
  uint64_t c = parse_idx(f, lock.recorded_violation[2]);
  uint64_t ab = r.mul(a, b);
  uint64_t abc = r.mul(ab, c);
  bool confirmed = abc != 0 && i->contains(abc) && !i->contains(ab) && !i->contains(c) &&
                   !r.is_unit(a) && !r.is_unit(b) && !r.is_unit(c) && r.is_homogeneous(a) &&
                   r.is_homogeneous(b) && r.is_homogeneous(c);
  if (confirmed)
    t.expected();
  else
    t.fail("recorded violation", "the recorded triple does not exhibit the gap");
  out.push_back(std::move(t.rep));
}

void check_ex4(const Fixture& f, std::vector<CheckReport>& out) {
  for (const WeaklyPrimeGapLock& lock : weakly_prime_gap_locks()) {
    if (lock.fixture != f.name) continue;
    Tally t("Ex4", f.name);
    t.note("recorded violation: " + join(lock.violation) + " with product " + lock.product);
    const GradedIdeal* i = f.find_ideal(lock.ideal);
    if (!i) {
      t.fail("lock data", "ideal " + lock.ideal + " is missing from the fixture");
      out.push_back(std::move(t.rep));
      continue;
    }
    Verdict weak = classify_ideal(*i, PredicateId::weakly_one_absorbing());
    t.require("weak absorbing form", weak.outcome == Outcome::Pass, describe_verdict(weak));
    Verdict wp = classify_ideal(*i, PredicateId::weakly_prime());
    if (wp.outcome == Outcome::Fail && shown_of(wp) == lock.violation)
      t.expected();
    else
      t.fail("weakly prime form", "expected FAIL at " + join(lock.violation) + ", got " +
                                      describe_verdict(wp));
    const GradedUniverse& r = *f.ring;
    uint64_t a = parse_idx(f, lock.violation[0]);
    uint64_t b = parse_idx(f, lock.violation[1]);
    uint64_t ab = r.mul(a, b);
    bool confirmed = ab != 0 && i->contains(ab) && !i->contains(a) && !i->contains(b) &&
                     r.is_homogeneous(a) && r.is_homogeneous(b) && r.show(ab) == lock.product;
    if (confirmed)
      t.expected();
    else
      t.fail("recorded violation", "the recorded pair does not exhibit the gap");
    out.push_back(std::move(t.rep));
  }
}

// ---------------------------------------------------------------------------
// Registry

using Runner = std::function<void(const std::vector<const Fixture*>&, std::vector<CheckReport>&)>;

Runner lift(void (*fn)(const Fixture&, std::vector<CheckReport>&)) {
  return [fn](const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out) {
    for (const Fixture* f : fs) fn(*f, out);
  };
}

Runner lift_variant(void (*fn)(const Fixture&, std::vector<CheckReport>&, int), int variant) {
  return [fn, variant](const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out) {
    for (const Fixture* f : fs) fn(*f, out, variant);
  };
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> regs = {
      {"P1.1", lift(check_p11)},
      {"P1.2", lift(check_p12)},
      {"P1.3", lift(check_p13)},
      {"P1.4", lift(check_p14)},
      {"R1", lift(check_r1)},
      {"R1-Cor", lift(check_r1_cor)},
      {"L1", lift(check_l1)},
      {"L1-Cor", lift(check_l1_cor)},
      {"T1-chain", lift(check_t1_chain)},
      {"T1-counterexample", lift(check_t1_counterexample)},
      {"T1g-equiv", lift(check_t1g)},
      {"T2", lift_variant(check_t2_family, 0)},
      {"T2a", lift_variant(check_t2_family, 1)},
      {"T2b", lift_variant(check_t2_family, 2)},
      {"T3", lift(check_t3)},
      {"T4", lift(check_t4)},
      {"T5i", lift(check_t5i)},
      {"T5ii", lift(check_t5ii)},
      {"T5iii", lift(check_t5iii)},
      {"T6", lift(check_t6)},
      {"T7.1",
       [](const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out) {
         check_t7(fs, out, 1);
       }},
      {"T7.2",
       [](const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out) {
         check_t7(fs, out, 2);
       }},
      {"T7.3",
       [](const std::vector<const Fixture*>& fs, std::vector<CheckReport>& out) {
         check_t7(fs, out, 3);
       }},
      {"S3-def-examples", lift(check_s3_def)},
      {"S3-L1", lift(check_s3_l1)},
      {"S3-L2", lift(check_s3_l2)},
      {"S3-P3", lift(check_s3_p3)},
      {"S3-L4", lift(check_s3_l4)},
      {"S3-T5", lift(check_s3_t5)},
      {"S3-P6", lift(check_s3_p6)},
      {"S3-Cor", lift(check_s3_cor)},
      {"Ex2", lift(check_ex2)},
      {"Ex3", lift(check_ex3)},
      {"Ex4", lift(check_ex4)},
  };
  return regs;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.fixture < b.fixture;
  });
}

}  // namespace

const std::vector<std::string>& canonical_check_ids() {
  static const std::vector<std::string> ids = {
      "P1.1",  "P1.2",  "P1.3",   "P1.4",          "R1",    "R1-Cor", "L1",    "L1-Cor",
      "T1-chain", "T1-counterexample", "T1g-equiv", "T2",   "T2a",    "T2b",   "T3",
      "T4",    "T5i",   "T5ii",   "T5iii",         "T6",    "T7.1",   "T7.2",  "T7.3",
      "S3-def-examples", "S3-L1", "S3-L2", "S3-P3", "S3-L4", "S3-T5",  "S3-P6", "S3-Cor",
  };
  return ids;
}

const std::vector<std::string>& registered_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return ids;
}

std::vector<CheckReport> run_check(const std::string& check_id,
                                   const std::vector<const Fixture*>& fixtures) {
  for (const auto& [name, fn] : registry())
    if (name == check_id) {
      std::vector<CheckReport> out;
      fn(fixtures, out);
      sort_reports(out);
      return out;
    }
  throw Error(Err::UnknownCheck, "no check named '" + check_id + "'");
}

std::vector<CheckReport> run_all(const std::vector<const Fixture*>& fixtures) {
  const std::vector<std::string>& have = registered_check_ids();
  for (const std::string& id : canonical_check_ids())
    if (std::find(have.begin(), have.end(), id) == have.end())
      throw Error(Err::UnknownCheck, "registry is missing required check '" + id + "'");
  std::vector<CheckReport> out;
  for (const auto& [name, fn] : registry()) fn(fixtures, out);
  sort_reports(out);
  return out;
}

bool all_ok(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.ok()) return false;
  return true;
}

std::vector<const Fixture*> all_fixture_pointers() {
  std::vector<const Fixture*> out;
  for (const Fixture& f : fixture_catalog()) out.push_back(&f);
  return out;
}

nlohmann::ordered_json report_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json rec;
    rec["check_id"] = r.check_id;
    rec["fixture"] = r.fixture;
    rec["instances"] = r.instances;
    rec["passed"] = r.passed;
    rec["vacuous"] = r.vacuous;
    rec["expected_counterexamples"] = r.expected_counterexamples;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const CheckFailure& cf : r.failures)
      fails.push_back(nlohmann::ordered_json{{"instance", cf.instance}, {"witness", cf.witness}});
    rec["failures"] = std::move(fails);
    if (!r.notes.empty()) rec["notes"] = r.notes;
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace gril
