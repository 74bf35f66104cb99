#include "gril/classify.hpp"

#include <algorithm>
#include <set>

namespace gril {

namespace {

// Dense membership table over the full element range; ideals stay far below
// the expansion cap, so this is cheap relative to the scans it feeds.
std::vector<uint8_t> membership(const GradedIdeal& ideal) {
  std::vector<uint8_t> in(ideal.ambient()->size(), 0);
  for (uint64_t x : ideal.elements()) in[x] = 1;
  return in;
}

// Hypothesis filter shared by all variants: an element feeds the premise iff
// it lies in the ideal but outside the excision set (zero ideal for weakly,
// the square for almost, the map image otherwise; no excision for the plain
// kinds or an empty-set map).
struct Hypothesis {
  std::vector<uint8_t> in_ideal;
  std::optional<std::vector<uint8_t>> excluded;
  bool vacuous = false;
  std::string vacuous_note;

  bool qualifies(uint64_t x) const {
    return in_ideal[x] && !(excluded && (*excluded)[x]);
  }
};

Hypothesis build_hypothesis(const GradedIdeal& ideal, const PredicateId& pred) {
  Hypothesis h;
  h.in_ideal = membership(ideal);
  std::optional<GradedIdeal> excl;
  std::string what;
  switch (pred.kind) {
    case PredicateId::Kind::WeaklyPrime:
    case PredicateId::Kind::WeaklyTwoAbsorbing:
    case PredicateId::Kind::WeaklyOneAbsorbing:
      excl = GradedIdeal::zero_ideal(ideal.ambient());
      what = "the ideal is the zero ideal";
      break;
    case PredicateId::Kind::AlmostPrime:
      excl = ideal_intersection(ideal_power(ideal, 2), ideal);
      what = "the ideal equals its own square";
      break;
    case PredicateId::Kind::PhiPrime:
    case PredicateId::Kind::PhiOneAbsorbing:
    case PredicateId::Kind::ComponentPhiOneAbsorbing:
    case PredicateId::Kind::ComponentPhiPrime: {
      PhiResult img = apply_phi(*pred.phi, ideal);
      if (!img.is_empty_set()) {
        excl = *img.ideal;
        what = "the map image equals the ideal";
      }
      break;
    }
    default:
      break;
  }
  if (excl) {
    if (excl->same_elements(ideal)) {
      h.vacuous = true;
      h.vacuous_note = "hypothesis set is empty: " + what;
    }
    h.excluded = membership(*excl);
  }
  return h;
}

Verdict pair_scan(const GradedUniverse& r, const Hypothesis& h,
                  const std::vector<uint64_t>& domain) {
  for (uint64_t a : domain) {
    for (uint64_t b : domain) {
      uint64_t ab = r.mul(a, b);
      if (!h.qualifies(ab)) continue;
      if (h.in_ideal[a] || h.in_ideal[b]) continue;
      return Verdict::fail({{"a", {}, r.show(a)}, {"b", {}, r.show(b)}},
                           r.show(a) + " * " + r.show(b) + " = " + r.show(ab) +
                               " meets the hypothesis, yet neither factor lies in the ideal");
    }
  }
  return Verdict::pass();
}

Verdict one_absorbing_scan(const GradedUniverse& r, const Hypothesis& h,
                           const std::vector<uint64_t>& domain) {
  for (uint64_t a : domain) {
    for (uint64_t b : domain) {
      uint64_t ab = r.mul(a, b);
      if (h.in_ideal[ab]) continue;
      for (uint64_t c : domain) {
        if (h.in_ideal[c]) continue;
        if (!h.qualifies(r.mul(ab, c))) continue;
        return Verdict::fail(
            {{"a", {}, r.show(a)}, {"b", {}, r.show(b)}, {"c", {}, r.show(c)}},
            r.show(a) + " * " + r.show(b) + " * " + r.show(c) +
                " meets the hypothesis, yet " + r.show(ab) + " and " + r.show(c) +
                " both lie outside the ideal");
      }
    }
  }
  return Verdict::pass();
}

Verdict two_absorbing_scan(const GradedUniverse& r, const Hypothesis& h,
                           const std::vector<uint64_t>& domain) {
  for (uint64_t a : domain) {
    for (uint64_t b : domain) {
      uint64_t ab = r.mul(a, b);
      if (h.in_ideal[ab]) continue;
      for (uint64_t c : domain) {
        if (!h.qualifies(r.mul(ab, c))) continue;
        if (h.in_ideal[r.mul(a, c)] || h.in_ideal[r.mul(b, c)]) continue;
        return Verdict::fail(
            {{"a", {}, r.show(a)}, {"b", {}, r.show(b)}, {"c", {}, r.show(c)}},
            r.show(a) + " * " + r.show(b) + " * " + r.show(c) +
                " meets the hypothesis, yet no two of the factors multiply into the ideal");
      }
    }
  }
  return Verdict::pass();
}

std::vector<uint64_t> component_nonunits(const GradedUniverse& r, uint32_t g) {
  std::vector<uint64_t> out;
  for (uint64_t x : r.component_indices(g))
    if (!r.is_unit(x)) out.push_back(x);
  return out;
}

// Least element of A_g \ B_g over sorted vectors; nullopt when contained.
std::optional<uint64_t> first_missing(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) {
  for (uint64_t x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) return x;
  return std::nullopt;
}

// Least single homogeneous part of A lying outside B (both graded), compared
// by element index across degrees.
std::optional<uint64_t> least_escaping_part(const GradedIdeal& a, const GradedIdeal& b) {
  std::optional<uint64_t> best;
  for (uint32_t g : a.ambient()->realized_degrees()) {
    std::optional<uint64_t> x = first_missing(a.component(g), b.component(g));
    if (x && (!best || *x < *best)) best = x;
  }
  return best;
}

// Least witness that A exceeds the union of I and B (B absent when the map
// image is the empty set). Single parts handle one degree at a time; a pair
// of parts at distinct degrees covers the mixed case where no single degree
// escapes both.
std::optional<uint64_t> least_outside_union(const GradedUniverse& r, const GradedIdeal& a,
                                            const GradedIdeal& i,
                                            const std::optional<GradedIdeal>& b) {
  if (!b) return least_escaping_part(a, i);
  std::optional<uint64_t> best;
  const std::vector<uint32_t> degrees = r.realized_degrees();
  std::map<uint32_t, std::optional<uint64_t>> esc_i, esc_b;
  for (uint32_t g : degrees) {
    esc_i[g] = first_missing(a.component(g), i.component(g));
    esc_b[g] = first_missing(a.component(g), b->component(g));
    // one degree escaping both at once
    for (uint64_t x : a.component(g)) {
      if (std::binary_search(i.component(g).begin(), i.component(g).end(), x)) continue;
      if (std::binary_search(b->component(g).begin(), b->component(g).end(), x)) continue;
      if (!best || x < *best) best = x;
      break;
    }
  }
  for (uint32_t g : degrees) {
    if (!esc_i[g]) continue;
    for (uint32_t hdeg : degrees) {
      if (hdeg == g || !esc_b[hdeg]) continue;
      uint64_t x = r.add(*esc_i[g], *esc_b[hdeg]);
      if (!best || x < *best) best = x;
    }
  }
  return best;
}

WitnessPart elem_part(const GradedUniverse& r, const std::string& role, uint64_t x) {
  return {role, {}, r.show(x)};
}

// ---- global ideal-quantified forms -----------------------------------

std::vector<GradedIdeal> proper_ideals(const std::shared_ptr<const GradedUniverse>& amb) {
  std::vector<GradedIdeal> out;
  for (const GradedIdeal& j : enumerate_graded_ideals(amb))
    if (j.proper()) out.push_back(j);
  return out;
}

// Product table over the full ideal enumeration, closed because products of
// graded ideals are again graded ideals.
struct ProductTable {
  const std::vector<GradedIdeal>* all = nullptr;
  std::vector<std::vector<uint32_t>> prod;
};

ProductTable build_product_table(const std::shared_ptr<const GradedUniverse>& amb) {
  ProductTable t;
  t.all = &enumerate_graded_ideals(amb);
  const std::vector<GradedIdeal>& all = *t.all;
  if (all.size() > 128)
    throw Error(Err::SizeExceeded, "ideal product table over " + std::to_string(all.size()) +
                                       " ideals is out of budget");
  std::map<std::vector<uint64_t>, uint32_t> by_sig;
  for (uint32_t i = 0; i < all.size(); ++i) by_sig[all[i].signature()] = i;
  t.prod.assign(all.size(), std::vector<uint32_t>(all.size(), 0));
  for (uint32_t i = 0; i < all.size(); ++i)
    for (uint32_t j = i; j < all.size(); ++j) {
      uint32_t k = by_sig.at(ideal_product(all[i], all[j]).signature());
      t.prod[i][j] = k;
      t.prod[j][i] = k;
    }
  return t;
}

Verdict t1_colon_union(const GradedIdeal& ideal, const PhiResult& img) {
  const auto amb = ideal.ambient();
  const GradedUniverse& r = *amb;
  std::vector<uint8_t> in_i = membership(ideal);
  for (uint64_t a : nonunit_homogeneous(r)) {
    for (uint64_t b : nonunit_homogeneous(r)) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      GradedIdeal colon = colon_ideal(ideal, ab);
      std::optional<GradedIdeal> img_colon;
      if (img.ideal) img_colon = colon_ideal(*img.ideal, ab);
      std::optional<uint64_t> x = least_outside_union(r, colon, ideal, img_colon);
      if (x)
        return Verdict::fail({elem_part(r, "a", a), elem_part(r, "b", b),
                              elem_part(r, "separator", *x)},
                             "(I : " + r.show(ab) + ") exceeds the union of I and the "
                                 "map-image colon at " + r.show(*x));
    }
  }
  return Verdict::pass();
}

Verdict t1_colon_either(const GradedIdeal& ideal, const PhiResult& img) {
  const auto amb = ideal.ambient();
  const GradedUniverse& r = *amb;
  std::vector<uint8_t> in_i = membership(ideal);
  for (uint64_t a : nonunit_homogeneous(r)) {
    for (uint64_t b : nonunit_homogeneous(r)) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      GradedIdeal colon = colon_ideal(ideal, ab);
      if (colon.subset_of(ideal)) continue;
      std::optional<GradedIdeal> img_colon;
      if (img.ideal) {
        img_colon = colon_ideal(*img.ideal, ab);
        if (colon.subset_of(*img_colon)) continue;
      }
      std::vector<WitnessPart> w{elem_part(r, "a", a), elem_part(r, "b", b)};
      w.push_back(elem_part(r, "outside-ideal", *least_escaping_part(colon, ideal)));
      if (img_colon)
        w.push_back(elem_part(r, "outside-map-colon", *least_escaping_part(colon, *img_colon)));
      return Verdict::fail(std::move(w), "(I : " + r.show(ab) +
                                             ") matches neither I nor the map-image colon");
    }
  }
  return Verdict::pass();
}

Verdict t1_pair_ideal(const GradedIdeal& ideal, const PhiResult& img) {
  const auto amb = ideal.ambient();
  const GradedUniverse& r = *amb;
  std::vector<uint8_t> in_i = membership(ideal);
  std::vector<GradedIdeal> propers = proper_ideals(amb);
  for (uint64_t a : nonunit_homogeneous(r)) {
    for (uint64_t b : nonunit_homogeneous(r)) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      GradedIdeal colon = colon_ideal(ideal, ab);
      std::optional<GradedIdeal> img_colon;
      if (img.ideal) img_colon = colon_ideal(*img.ideal, ab);
      for (const GradedIdeal& l : propers) {
        if (!l.subset_of(colon)) continue;
        if (img_colon && l.subset_of(*img_colon)) continue;
        if (l.subset_of(ideal)) continue;
        return Verdict::fail({elem_part(r, "a", a), elem_part(r, "b", b),
                              {"L", {}, l.show()},
                              elem_part(r, "separator", *least_escaping_part(l, ideal))},
                             "ab L lands in I but escapes the map image, while neither ab "
                             "nor L lies in I");
      }
    }
  }
  return Verdict::pass();
}

Verdict t1_elem_two_ideals(const GradedIdeal& ideal, const PhiResult& img) {
  const auto amb = ideal.ambient();
  const GradedUniverse& r = *amb;
  ProductTable table = build_product_table(amb);
  const std::vector<GradedIdeal>& all = *table.all;
  std::vector<uint32_t> propers;
  for (uint32_t i = 0; i < all.size(); ++i)
    if (all[i].proper()) propers.push_back(i);
  std::vector<uint8_t> sub_i(all.size(), 0);
  for (uint32_t i = 0; i < all.size(); ++i) sub_i[i] = all[i].subset_of(ideal);
  for (uint64_t a : nonunit_homogeneous(r)) {
    GradedIdeal colon = colon_ideal(ideal, a);
    std::optional<GradedIdeal> img_colon;
    if (img.ideal) img_colon = colon_ideal(*img.ideal, a);
    std::vector<uint8_t> sub_c(all.size(), 0), sub_m(all.size(), 0);
    for (uint32_t i = 0; i < all.size(); ++i) {
      sub_c[i] = all[i].subset_of(colon);
      if (img_colon) sub_m[i] = all[i].subset_of(*img_colon);
    }
    for (uint32_t k : propers) {
      for (uint32_t l : propers) {
        uint32_t kl = table.prod[k][l];
        if (!sub_c[kl]) continue;
        if (img_colon && sub_m[kl]) continue;
        if (sub_c[k] || sub_i[l]) continue;
        return Verdict::fail(
            {elem_part(r, "a", a), {"K", {}, all[k].show()}, {"L", {}, all[l].show()},
             elem_part(r, "separator-K", *least_escaping_part(all[k], colon)),
             elem_part(r, "separator-L", *least_escaping_part(all[l], ideal))},
            "a K L lands in I but escapes the map image, while neither a K nor L lies in I");
      }
    }
  }
  return Verdict::pass();
}

Verdict t1_three_ideals(const GradedIdeal& ideal, const PhiResult& img) {
  const auto amb = ideal.ambient();
  ProductTable table = build_product_table(amb);
  const std::vector<GradedIdeal>& all = *table.all;
  std::vector<uint32_t> propers;
  for (uint32_t i = 0; i < all.size(); ++i)
    if (all[i].proper()) propers.push_back(i);
  std::vector<uint8_t> sub_i(all.size(), 0), sub_m(all.size(), 0);
  for (uint32_t i = 0; i < all.size(); ++i) {
    sub_i[i] = all[i].subset_of(ideal);
    if (img.ideal) sub_m[i] = all[i].subset_of(*img.ideal);
  }
  for (uint32_t j : propers) {
    for (uint32_t k : propers) {
      uint32_t jk = table.prod[j][k];
      for (uint32_t l : propers) {
        uint32_t jkl = table.prod[jk][l];
        if (!sub_i[jkl]) continue;
        if (img.ideal && sub_m[jkl]) continue;
        if (sub_i[jk] || sub_i[l]) continue;
        const GradedUniverse& r = *amb;
        return Verdict::fail(
            {{"J", {}, all[j].show()}, {"K", {}, all[k].show()}, {"L", {}, all[l].show()},
             elem_part(r, "separator-JK", *least_escaping_part(all[jk], ideal)),
             elem_part(r, "separator-L", *least_escaping_part(all[l], ideal))},
            "J K L lands in I but escapes the map image, while neither J K nor L lies in I");
      }
    }
  }
  return Verdict::pass();
}

// ---- per-degree forms -------------------------------------------------

// Distinct proper degree-g slices of the graded ideals, each labelled by the
// first ideal in canonical order realizing it.
struct ComponentSlice {
  std::vector<uint64_t> elems;
  std::string label;
};

std::vector<ComponentSlice> proper_component_slices(
    const std::shared_ptr<const GradedUniverse>& amb, uint32_t g) {
  std::vector<ComponentSlice> out;
  std::set<std::vector<uint64_t>> seen;
  size_t full = amb->component_indices(g).size();
  for (const GradedIdeal& j : enumerate_graded_ideals(amb)) {
    const std::vector<uint64_t>& c = j.component(g);
    if (c.size() == full) continue;
    if (seen.insert(c).second) out.push_back({c, j.show()});
  }
  return out;
}

// Pairwise products of two component slices, additively closed so that
// containment of the set in a graded ideal can be read off elementwise.
std::vector<uint64_t> slice_product(const GradedUniverse& r, const std::vector<uint64_t>& a,
                                    const std::vector<uint64_t>& b) {
  std::set<uint64_t> acc;
  for (uint64_t x : a)
    for (uint64_t y : b) acc.insert(r.mul(x, y));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(acc.begin(), acc.end());
    for (uint64_t x : cur)
      for (uint64_t y : cur)
        if (acc.insert(r.add(x, y)).second) grew = true;
  }
  return {acc.begin(), acc.end()};
}

Verdict t1g_colon_union(const GradedIdeal& ideal, const PhiResult& img, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::optional<std::vector<uint8_t>> in_m;
  if (img.ideal) in_m = membership(*img.ideal);
  std::vector<uint64_t> nus = component_nonunits(r, g);
  for (uint64_t a : nus) {
    for (uint64_t b : nus) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      for (uint64_t x : r.component_indices(g)) {
        uint64_t abx = r.mul(ab, x);
        if (!in_i[abx]) continue;
        if (in_i[x]) continue;
        if (in_m && (*in_m)[abx]) continue;
        return Verdict::fail(
            {elem_part(r, "a", a), elem_part(r, "b", b), elem_part(r, "separator", x)},
            "the component colon by " + r.show(ab) +
                " exceeds the union of I and the map-image colon at " + r.show(x));
      }
    }
  }
  return Verdict::pass();
}

Verdict t1g_colon_either(const GradedIdeal& ideal, const PhiResult& img, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::optional<std::vector<uint8_t>> in_m;
  if (img.ideal) in_m = membership(*img.ideal);
  std::vector<uint64_t> nus = component_nonunits(r, g);
  for (uint64_t a : nus) {
    for (uint64_t b : nus) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      std::optional<uint64_t> out_ideal, out_map;
      for (uint64_t x : r.component_indices(g)) {
        uint64_t abx = r.mul(ab, x);
        if (!in_i[abx]) continue;
        if (!out_ideal && !in_i[x]) out_ideal = x;
        if (!out_map && !(in_m && (*in_m)[abx])) out_map = x;
        if (out_ideal && out_map) break;
      }
      if (!out_ideal || !out_map) continue;
      return Verdict::fail({elem_part(r, "a", a), elem_part(r, "b", b),
                            elem_part(r, "outside-ideal", *out_ideal),
                            elem_part(r, "outside-map-colon", *out_map)},
                           "the component colon by " + r.show(ab) +
                               " is neither inside I nor equal to the map-image colon");
    }
  }
  return Verdict::pass();
}

Verdict t1g_pair_slice(const GradedIdeal& ideal, const PhiResult& img, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::optional<std::vector<uint8_t>> in_m;
  if (img.ideal) in_m = membership(*img.ideal);
  std::vector<uint64_t> nus = component_nonunits(r, g);
  std::vector<ComponentSlice> slices = proper_component_slices(ideal.ambient(), g);
  for (uint64_t a : nus) {
    for (uint64_t b : nus) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      for (const ComponentSlice& s : slices) {
        bool inside = true, escapes = !in_m.has_value();
        for (uint64_t x : s.elems) {
          uint64_t abx = r.mul(ab, x);
          if (!in_i[abx]) {
            inside = false;
            break;
          }
          if (in_m && !(*in_m)[abx]) escapes = true;
        }
        if (!inside || !escapes) continue;
        std::optional<uint64_t> sep;
        for (uint64_t x : s.elems)
          if (!in_i[x]) {
            sep = x;
            break;
          }
        if (!sep) continue;
        return Verdict::fail({elem_part(r, "a", a), elem_part(r, "b", b),
                              {"J", {}, s.label}, elem_part(r, "separator", *sep)},
                             "ab times the component slice lands in I but escapes the map "
                             "image, while neither ab nor the slice lies in I");
      }
    }
  }
  return Verdict::pass();
}

Verdict t1g_elem_two_slices(const GradedIdeal& ideal, const PhiResult& img, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::optional<std::vector<uint8_t>> in_m;
  if (img.ideal) in_m = membership(*img.ideal);
  std::vector<ComponentSlice> slices = proper_component_slices(ideal.ambient(), g);
  std::vector<std::vector<std::vector<uint64_t>>> prods(slices.size());
  for (size_t j = 0; j < slices.size(); ++j) {
    prods[j].resize(slices.size());
    for (size_t k = 0; k < slices.size(); ++k)
      prods[j][k] = slice_product(r, slices[j].elems, slices[k].elems);
  }
  for (uint64_t a : nonunit_homogeneous(r)) {
    for (size_t j = 0; j < slices.size(); ++j) {
      for (size_t k = 0; k < slices.size(); ++k) {
        bool inside = true, escapes = !in_m.has_value();
        for (uint64_t p : prods[j][k]) {
          uint64_t ap = r.mul(a, p);
          if (!in_i[ap]) {
            inside = false;
            break;
          }
          if (in_m && !(*in_m)[ap]) escapes = true;
        }
        if (!inside || !escapes) continue;
        std::optional<uint64_t> sep_j;
        for (uint64_t x : slices[j].elems)
          if (!in_i[r.mul(a, x)]) {
            sep_j = x;
            break;
          }
        if (!sep_j) continue;
        std::optional<uint64_t> sep_k;
        for (uint64_t y : slices[k].elems)
          if (!in_i[y]) {
            sep_k = y;
            break;
          }
        if (!sep_k) continue;
        return Verdict::fail(
            {elem_part(r, "a", a), {"J", {}, slices[j].label}, {"K", {}, slices[k].label},
             elem_part(r, "separator-J", *sep_j), elem_part(r, "separator-K", *sep_k)},
            "a times the two component slices lands in I but escapes the map image, while "
            "neither conclusion holds");
      }
    }
  }
  return Verdict::pass();
}

Verdict t1g_three_slices(const GradedIdeal& ideal, const PhiResult& img, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::optional<std::vector<uint8_t>> in_m;
  if (img.ideal) in_m = membership(*img.ideal);
  std::vector<ComponentSlice> slices = proper_component_slices(ideal.ambient(), g);
  std::vector<std::vector<std::vector<uint64_t>>> prods(slices.size());
  for (size_t j = 0; j < slices.size(); ++j) {
    prods[j].resize(slices.size());
    for (size_t k = 0; k < slices.size(); ++k)
      prods[j][k] = slice_product(r, slices[j].elems, slices[k].elems);
  }
  for (size_t j = 0; j < slices.size(); ++j) {
    for (size_t k = 0; k < slices.size(); ++k) {
      bool jk_inside = true;
      for (uint64_t p : prods[j][k])
        if (!in_i[p]) {
          jk_inside = false;
          break;
        }
      if (jk_inside) continue;
      for (size_t l = 0; l < slices.size(); ++l) {
        bool inside = true, escapes = !in_m.has_value();
        for (uint64_t p : prods[j][k]) {
          for (uint64_t z : slices[l].elems) {
            uint64_t pz = r.mul(p, z);
            if (!in_i[pz]) {
              inside = false;
              break;
            }
            if (in_m && !(*in_m)[pz]) escapes = true;
          }
          if (!inside) break;
        }
        if (!inside || !escapes) continue;
        std::optional<uint64_t> sep_l;
        for (uint64_t z : slices[l].elems)
          if (!in_i[z]) {
            sep_l = z;
            break;
          }
        if (!sep_l) continue;
        std::optional<uint64_t> sep_jk;
        for (uint64_t p : prods[j][k])
          if (!in_i[p]) {
            sep_jk = p;
            break;
          }
        return Verdict::fail(
            {{"J", {}, slices[j].label}, {"K", {}, slices[k].label},
             {"L", {}, slices[l].label}, elem_part(r, "separator-JK", *sep_jk),
             elem_part(r, "separator-L", *sep_l)},
            "the three component slices multiply into I but escape the map image, while "
            "neither conclusion holds");
      }
    }
  }
  return Verdict::pass();
}

void require_component_proper(const GradedIdeal& ideal, uint32_t g) {
  const GradedUniverse& r = *ideal.ambient();
  if (ideal.component(g).size() == r.component_indices(g).size())
    throw Error(Err::ImproperIdeal, "the ideal's component at degree " + r.group().show(g) +
                                        " is the whole component");
}

}  // namespace

bool PredicateId::needs_phi() const {
  switch (kind) {
    case Kind::PhiPrime:
    case Kind::PhiOneAbsorbing:
    case Kind::ComponentPhiOneAbsorbing:
    case Kind::ComponentPhiPrime:
      return true;
    default:
      return false;
  }
}

bool PredicateId::needs_degree() const {
  return kind == Kind::ComponentPhiOneAbsorbing || kind == Kind::ComponentPhiPrime;
}

std::string PredicateId::show() const {
  std::string base;
  switch (kind) {
    case Kind::Prime: base = "prime"; break;
    case Kind::WeaklyPrime: base = "weakly-prime"; break;
    case Kind::AlmostPrime: base = "almost-prime"; break;
    case Kind::PhiPrime: base = "phi-prime"; break;
    case Kind::TwoAbsorbing: base = "2-absorbing"; break;
    case Kind::WeaklyTwoAbsorbing: base = "weakly-2-absorbing"; break;
    case Kind::OneAbsorbing: base = "1-absorbing"; break;
    case Kind::WeaklyOneAbsorbing: base = "weakly-1-absorbing"; break;
    case Kind::PhiOneAbsorbing: base = "phi-1-absorbing"; break;
    case Kind::ComponentPhiOneAbsorbing: base = "degree-phi-1-absorbing"; break;
    case Kind::ComponentPhiPrime: base = "degree-phi-prime"; break;
  }
  std::vector<std::string> args;
  if (degree) args.push_back("g=" + std::to_string(*degree));
  if (phi) args.push_back(phi->show());
  if (args.empty()) return base;
  std::string out = base + "[";
  for (size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
  return out + "]";
}

const std::vector<std::string>& PredicateId::names() {
  static const std::vector<std::string> kNames = {
      "prime",        "weakly-prime",       "almost-prime",
      "phi-prime",    "2-absorbing",        "weakly-2-absorbing",
      "1-absorbing",  "weakly-1-absorbing", "phi-1-absorbing",
      "degree-phi-1-absorbing", "degree-phi-prime"};
  return kNames;
}

std::optional<PredicateId> PredicateId::parse(const std::string& name,
                                              std::optional<PhiMap> phi,
                                              std::optional<uint32_t> degree) {
  PredicateId p;
  if (name == "prime") p.kind = Kind::Prime;
  else if (name == "weakly-prime") p.kind = Kind::WeaklyPrime;
  else if (name == "almost-prime") p.kind = Kind::AlmostPrime;
  else if (name == "phi-prime") p.kind = Kind::PhiPrime;
  else if (name == "2-absorbing") p.kind = Kind::TwoAbsorbing;
  else if (name == "weakly-2-absorbing") p.kind = Kind::WeaklyTwoAbsorbing;
  else if (name == "1-absorbing") p.kind = Kind::OneAbsorbing;
  else if (name == "weakly-1-absorbing") p.kind = Kind::WeaklyOneAbsorbing;
  else if (name == "phi-1-absorbing") p.kind = Kind::PhiOneAbsorbing;
  else if (name == "degree-phi-1-absorbing") p.kind = Kind::ComponentPhiOneAbsorbing;
  else if (name == "degree-phi-prime") p.kind = Kind::ComponentPhiPrime;
  else return std::nullopt;
  p.phi = std::move(phi);
  p.degree = degree;
  if (p.needs_phi() && !p.phi) return std::nullopt;
  if (p.needs_degree() && !p.degree) return std::nullopt;
  if (!p.needs_phi()) p.phi.reset();
  if (!p.needs_degree()) p.degree.reset();
  return p;
}

std::vector<uint64_t> nonunit_homogeneous(const GradedUniverse& ring) {
  std::vector<uint64_t> out;
  for (uint64_t x : ring.homogeneous_indices())
    if (!ring.is_unit(x)) out.push_back(x);
  return out;
}

Verdict classify_ideal(const GradedIdeal& ideal, const PredicateId& pred) {
  const GradedUniverse& r = *ideal.ambient();
  if (pred.needs_degree()) {
    require_component_proper(ideal, *pred.degree);
  } else if (!ideal.proper()) {
    throw Error(Err::ImproperIdeal, "classification requires a proper graded ideal");
  }
  Hypothesis h = build_hypothesis(ideal, pred);
  if (h.vacuous) return Verdict::vacuous(h.vacuous_note);
  switch (pred.kind) {
    case PredicateId::Kind::Prime:
    case PredicateId::Kind::WeaklyPrime:
    case PredicateId::Kind::AlmostPrime:
    case PredicateId::Kind::PhiPrime:
      return pair_scan(r, h, r.homogeneous_indices());
    case PredicateId::Kind::ComponentPhiPrime:
      return pair_scan(r, h, r.component_indices(*pred.degree));
    case PredicateId::Kind::TwoAbsorbing:
    case PredicateId::Kind::WeaklyTwoAbsorbing:
      return two_absorbing_scan(r, h, nonunit_homogeneous(r));
    case PredicateId::Kind::OneAbsorbing:
    case PredicateId::Kind::WeaklyOneAbsorbing:
    case PredicateId::Kind::PhiOneAbsorbing:
      return one_absorbing_scan(r, h, nonunit_homogeneous(r));
    case PredicateId::Kind::ComponentPhiOneAbsorbing:
      return one_absorbing_scan(r, h, component_nonunits(r, *pred.degree));
  }
  throw Error(Err::ValidationError, "unhandled predicate kind");
}

std::vector<TripleZero> find_triple_zeros(const GradedIdeal& ideal, uint32_t degree,
                                          const PhiMap& phi) {
  Verdict v = classify_ideal(ideal, PredicateId::component_phi_one_absorbing(degree, phi));
  if (!v.ok())
    throw Error(Err::PredicateNotSatisfied,
                "the ideal is not degree-" + ideal.ambient()->group().show(degree) +
                    " absorbing for " + phi.show() + ": " + v.notes);
  PhiResult img = apply_phi(phi, ideal);
  if (img.is_empty_set()) return {};
  const GradedUniverse& r = *ideal.ambient();
  std::vector<uint8_t> in_i = membership(ideal);
  std::vector<uint8_t> in_m = membership(*img.ideal);
  std::vector<uint64_t> nus = component_nonunits(r, degree);
  std::vector<TripleZero> out;
  for (uint64_t a : nus) {
    for (uint64_t b : nus) {
      uint64_t ab = r.mul(a, b);
      if (in_i[ab]) continue;
      for (uint64_t c : nus) {
        if (in_i[c]) continue;
        if (in_m[r.mul(ab, c)]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

Verdict theorem1_condition(uint32_t k, const GradedIdeal& ideal, const PhiMap& phi,
                           std::optional<uint32_t> degree) {
  if (k < 1 || k > 6)
    throw Error(Err::ValidationError, "condition index must lie in 1..6, got " +
                                          std::to_string(k));
  if (degree) {
    require_component_proper(ideal, *degree);
    if (k == 1)
      return classify_ideal(ideal,
                            PredicateId::component_phi_one_absorbing(*degree, phi));
    PhiResult img = apply_phi(phi, ideal);
    switch (k) {
      case 2: return t1g_colon_union(ideal, img, *degree);
      case 3: return t1g_colon_either(ideal, img, *degree);
      case 4: return t1g_pair_slice(ideal, img, *degree);
      case 5: return t1g_elem_two_slices(ideal, img, *degree);
      default: return t1g_three_slices(ideal, img, *degree);
    }
  }
  if (!ideal.proper())
    throw Error(Err::ImproperIdeal, "the conditions concern proper graded ideals");
  if (k == 1) return classify_ideal(ideal, PredicateId::phi_one_absorbing(phi));
  PhiResult img = apply_phi(phi, ideal);
  switch (k) {
    case 2: return t1_colon_union(ideal, img);
    case 3: return t1_colon_either(ideal, img);
    case 4: return t1_pair_ideal(ideal, img);
    case 5: return t1_elem_two_ideals(ideal, img);
    default: return t1_three_ideals(ideal, img);
  }
}

VnrInfo vnr_suite(const std::shared_ptr<const GradedUniverse>& ring) {
  const GradedUniverse& r = *ring;
  VnrInfo out;
  out.is_vnr = true;
  out.witness[0] = 0;
  for (uint64_t a : r.homogeneous_indices()) {
    if (a == 0) continue;
    uint32_t g = *r.degree_of(a);
    std::optional<uint32_t> ig = r.group().inverse(g);
    bool found = false;
    if (ig) {
      uint64_t a2 = r.mul(a, a);
      for (uint64_t x : r.component_indices(*ig)) {
        if (r.mul(a2, x) == a) {
          out.witness[a] = x;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.is_vnr = false;
      out.notes = "no regularity witness for " + r.show(a);
      return out;
    }
  }
  return out;
}

uint64_t principal_to_idempotent(const GradedUniverse& ring, uint64_t x) {
  if (x == 0) return 0;
  std::optional<uint32_t> g = ring.degree_of(x);
  if (!g)
    throw Error(Err::NonHomogeneousGenerator,
                ring.show(x) + " is not homogeneous");
  std::optional<uint32_t> ig = ring.group().inverse(*g);
  if (ig) {
    uint64_t x2 = ring.mul(x, x);
    for (uint64_t y : ring.component_indices(*ig))
      if (ring.mul(x2, y) == x) return ring.mul(x, y);
  }
  throw Error(Err::NotVnr, "no regularity witness for " + ring.show(x));
}

std::pair<GradedIdeal, GradedIdeal> vnr_decomposition(
    const std::shared_ptr<const GradedUniverse>& ring, uint64_t x) {
  uint64_t a = principal_to_idempotent(*ring, x);
  GradedIdeal rx = x == 0 ? GradedIdeal::zero_ideal(ring)
                          : generate_graded_ideal(ring, {x});
  GradedIdeal complement = generate_graded_ideal(ring, {ring->sub(ring->one(), a)});
  return {std::move(rx), std::move(complement)};
}

}  // namespace gril
