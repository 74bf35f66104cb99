#include "gril/ringspec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gril {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw Error(Err::ParseError, "at " + path + ": " + why);
}

const ordered_json& field(const ordered_json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

const ordered_json& object_at(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  return j;
}

std::string string_at(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

uint64_t uint_at(const ordered_json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer() && j.get<int64_t>() >= 0)
    return static_cast<uint64_t>(j.get<int64_t>());
  bad(path, "expected a nonnegative integer");
}

void reject_unknown_keys(const ordered_json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) bad(path, "unknown field '" + key + "'");
  }
}

// Coefficients of a polynomial modulus: either a coordinate array over the
// base ring, an integer (embedded as k*1), or an element literal string.
Elem parse_coefficient(const ordered_json& j, const std::string& path, const BasisRing& base) {
  if (j.is_string()) {
    try {
      return base.parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return base.scalar(j.get<int64_t>());
  if (j.is_array()) {
    if (j.size() != base.width())
      bad(path, "coordinate count " + std::to_string(j.size()) + " does not match the base (" +
                    std::to_string(base.width()) + " slots)");
    Elem out(base.width(), 0);
    for (size_t i = 0; i < j.size(); ++i) {
      uint64_t v = uint_at(j[i], path + "[" + std::to_string(i) + "]");
      if (v >= base.moduli()[i])
        bad(path + "[" + std::to_string(i) + "]",
            "coordinate " + std::to_string(v) + " exceeds modulus " +
                std::to_string(base.moduli()[i]));
      out[i] = static_cast<uint32_t>(v);
    }
    return out;
  }
  bad(path, "expected a coordinate array, integer, or element literal");
}

RingPresentation parse_pres(const ordered_json& j, const std::string& path, const Limits& lim) {
  object_at(j, path);
  std::string kind = string_at(field(j, path, "kind"), path + ".kind");
  if (kind == "zmod") {
    reject_unknown_keys(j, path, {"kind", "modulus"});
    uint64_t n = uint_at(field(j, path, "modulus"), path + ".modulus");
    if (n < 2) bad(path + ".modulus", "residue modulus must be at least 2");
    return RingPresentation::zmod(n);
  }
  if (kind == "poly") {
    reject_unknown_keys(j, path, {"kind", "base", "lower"});
    RingPresentation base = parse_pres(field(j, path, "base"), path + ".base", lim);
    const ordered_json& lower = field(j, path, "lower");
    if (!lower.is_array() || lower.empty())
      bad(path + ".lower", "expected a nonempty array of modulus coefficients");
    BasisRing base_ring(base, lim);
    std::vector<Elem> coeffs;
    for (size_t i = 0; i < lower.size(); ++i)
      coeffs.push_back(
          parse_coefficient(lower[i], path + ".lower[" + std::to_string(i) + "]", base_ring));
    return RingPresentation::poly(std::move(base), std::move(coeffs));
  }
  if (kind == "truncated") {
    reject_unknown_keys(j, path, {"kind", "base", "degree"});
    RingPresentation base = parse_pres(field(j, path, "base"), path + ".base", lim);
    uint64_t t = uint_at(field(j, path, "degree"), path + ".degree");
    if (t < 1 || t > 64) bad(path + ".degree", "truncation exponent must be in 1..64");
    return RingPresentation::truncated(std::move(base), static_cast<uint32_t>(t));
  }
  if (kind == "product") {
    reject_unknown_keys(j, path, {"kind", "factors"});
    const ordered_json& factors = field(j, path, "factors");
    if (!factors.is_array() || factors.size() < 2)
      bad(path + ".factors", "expected an array of at least two factor rings");
    std::vector<RingPresentation> parts;
    for (size_t i = 0; i < factors.size(); ++i)
      parts.push_back(
          parse_pres(factors[i], path + ".factors[" + std::to_string(i) + "]", lim));
    return RingPresentation::product(std::move(parts));
  }
  bad(path + ".kind", "unknown kind '" + kind + "' (expected zmod, poly, truncated or product)");
}

GradingGroup parse_group(const std::string& text, const std::string& path) {
  if (text == "trivial") return GradingGroup::trivial();
  auto tail_of = [&](const char* prefix) -> std::optional<uint64_t> {
    std::string p = prefix;
    if (text.rfind(p, 0) != 0) return std::nullopt;
    std::string tail = text.substr(p.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      bad(path, "expected a number after '" + p + "'");
    return std::stoull(tail);
  };
  if (auto k = tail_of("cyclic:")) {
    if (*k < 1 || *k > 4096) bad(path, "cyclic order must be in 1..4096");
    return GradingGroup::cyclic(static_cast<uint32_t>(*k));
  }
  if (auto t = tail_of("bounded_integer:")) {
    if (*t < 1 || *t > 64) bad(path, "bounded integer limit must be in 1..64");
    return GradingGroup::bounded_integer(static_cast<uint32_t>(*t));
  }
  bad(path, "unknown group '" + text + "' (expected trivial, cyclic:<k> or bounded_integer:<t>)");
}

std::string group_selector(const GradingGroup& g) {
  switch (g.kind) {
    case GradingGroup::Kind::Trivial: return "trivial";
    case GradingGroup::Kind::Cyclic: return "cyclic:" + std::to_string(g.param);
    case GradingGroup::Kind::BoundedInteger:
      return "bounded_integer:" + std::to_string(g.param);
  }
  return "?";
}

std::pair<size_t, size_t> line_column(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ordered_json pres_json(const RingPresentation& p) {
  ordered_json out;
  switch (p.kind) {
    case RingPresentation::Kind::Zmod:
      out["kind"] = "zmod";
      out["modulus"] = p.modulus;
      break;
    case RingPresentation::Kind::Poly: {
      bool all_zero = true;
      for (const Elem& c : p.lower)
        for (uint32_t v : c) all_zero = all_zero && v == 0;
      if (all_zero) {
        out["kind"] = "truncated";
        out["base"] = pres_json(*p.base);
        out["degree"] = p.degree;
      } else {
        out["kind"] = "poly";
        out["base"] = pres_json(*p.base);
        ordered_json lower = ordered_json::array();
        for (const Elem& c : p.lower) {
          ordered_json coords = ordered_json::array();
          for (uint32_t v : c) coords.push_back(v);
          lower.push_back(std::move(coords));
        }
        out["lower"] = std::move(lower);
      }
      break;
    }
    case RingPresentation::Kind::Product: {
      out["kind"] = "product";
      ordered_json factors = ordered_json::array();
      for (const RingPresentation& f : p.factors) factors.push_back(pres_json(f));
      out["factors"] = std::move(factors);
      break;
    }
  }
  return out;
}

std::vector<PhiMap> default_phis() {
  return {PhiMap::empty_map(), PhiMap::zero_map(), PhiMap::power(2), PhiMap::power(3),
          PhiMap::omega()};
}

}  // namespace

const GradedIdeal* RingSpec::find_ideal(std::string_view ideal_name) const {
  for (const auto& [n, ideal] : ideals)
    if (n == ideal_name) return &ideal;
  return nullptr;
}

RingSpec parse_ring_spec(const std::string& text, const Limits& lim) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string detail = e.what();
    size_t cut = detail.find("] ");
    if (cut != std::string::npos) detail = detail.substr(cut + 2);
    throw Error(Err::ParseError, "line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + ": " + detail);
  }

  RingSpec spec;
  // anything the library itself rejects below is a defect of the described
  // ring rather than of the document, so it surfaces as a validation error
  try {
    object_at(doc, "$");
    reject_unknown_keys(doc, "$", {"name", "ring", "grading", "ideals", "phis"});
    spec.name = string_at(field(doc, "$", "name"), "name");
    if (spec.name.empty()) bad("name", "must not be empty");
    spec.pres = parse_pres(field(doc, "$", "ring"), "ring", lim);

    const ordered_json& grading = object_at(field(doc, "$", "grading"), "grading");
    reject_unknown_keys(grading, "grading", {"group", "degrees"});
    spec.group = parse_group(string_at(field(grading, "grading", "group"), "grading.group"),
                             "grading.group");
    const ordered_json& degrees = object_at(field(grading, "grading", "degrees"),
                                            "grading.degrees");

    auto basis = std::make_shared<BasisRing>(spec.pres, lim);

    const std::vector<std::string>& slots = basis->slot_names();
    std::vector<uint32_t> slot_degrees(slots.size(), 0);
    for (const auto& [key, value] : degrees.items())
      if (std::find(slots.begin(), slots.end(), key) == slots.end())
        bad("grading.degrees", "'" + key + "' is not a basis monomial of this ring");
    for (size_t s = 0; s < slots.size(); ++s) {
      auto it = degrees.find(slots[s]);
      if (it == degrees.end())
        bad("grading.degrees", "missing a degree for basis monomial '" + slots[s] + "'");
      std::string dpath = "grading.degrees['" + slots[s] + "']";
      uint64_t label = uint_at(*it, dpath);
      if (label >= spec.group.label_count())
        bad(dpath, "degree label " + std::to_string(label) + " is outside the group");
      slot_degrees[s] = static_cast<uint32_t>(label);
      spec.degrees.emplace_back(slots[s], slot_degrees[s]);
    }

    spec.ring = std::make_shared<GradedRing>(basis, spec.group, slot_degrees, lim);
    const Verdict& v = spec.ring->validate();
    if (!v.ok()) {
      std::string pair;
      for (const WitnessPart& w : v.witness) {
        if (!pair.empty()) pair += ", ";
        pair += w.shown;
      }
      throw Error(Err::ValidationError, "grading violated at (" + pair + "): " + v.notes);
    }

    if (auto it = doc.find("ideals"); it != doc.end()) {
      object_at(*it, "ideals");
      for (const auto& [iname, gens] : it->items()) {
        if (spec.find_ideal(iname)) bad("ideals", "duplicate ideal name '" + iname + "'");
        if (!gens.is_array()) bad("ideals['" + iname + "']", "expected an array of literals");
        std::vector<uint64_t> xs;
        std::vector<std::string> shown;
        for (size_t i = 0; i < gens.size(); ++i) {
          std::string p = "ideals['" + iname + "'][" + std::to_string(i) + "]";
          Elem e = parse_coefficient(gens[i], p, *basis);
          xs.push_back(basis->index_of(e));
          shown.push_back(basis->show(e));
        }
        spec.ideals.emplace_back(iname, generate_graded_ideal(spec.ring, xs));
        spec.ideal_gens.emplace_back(iname, std::move(shown));
      }
    }

    if (auto it = doc.find("phis"); it != doc.end()) {
      if (!it->is_array()) bad("phis", "expected an array of reducer selectors");
      for (size_t i = 0; i < it->size(); ++i) {
        std::string p = "phis[" + std::to_string(i) + "]";
        std::string sel = string_at((*it)[i], p);
        std::optional<PhiMap> phi = PhiMap::parse(sel);
        if (!phi)
          bad(p, "unknown reducer '" + sel +
                     "' (expected empty, zero, identity, power:<n> or omega)");
        spec.phis.push_back(std::move(*phi));
      }
    } else {
      spec.phis = default_phis();
    }
  } catch (const Error& e) {
    if (e.code() == Err::ParseError || e.code() == Err::ValidationError) throw;
    std::string msg = e.what();
    std::string prefix = std::string(err_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    throw Error(Err::ValidationError, msg);
  }
  return spec;
}

RingSpec load_ring_spec(const std::string& path, const Limits& lim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec(buf.str(), lim);
}

nlohmann::ordered_json serialize_ring_spec(const RingSpec& spec) {
  ordered_json out;
  out["name"] = spec.name;
  out["ring"] = pres_json(spec.pres);
  ordered_json degrees;
  for (const auto& [slot, label] : spec.degrees) degrees[slot] = label;
  out["grading"] = ordered_json{{"group", group_selector(spec.group)},
                                {"degrees", std::move(degrees)}};
  ordered_json ideals;
  for (const auto& [iname, gens] : spec.ideal_gens) {
    ordered_json lits = ordered_json::array();
    for (const std::string& g : gens) lits.push_back(g);
    ideals[iname] = std::move(lits);
  }
  out["ideals"] = std::move(ideals);
  ordered_json phis = ordered_json::array();
  for (const PhiMap& p : spec.phis) phis.push_back(p.show());
  out["phis"] = std::move(phis);
  return out;
}

}  // namespace gril
