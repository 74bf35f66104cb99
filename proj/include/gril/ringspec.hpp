#pragma once

#include <json.hpp>

#include <string_view>

#include "gril/ideal.hpp"
#include "gril/phi.hpp"

namespace gril {

/// A ring description loaded from structured text: a presentation tree, a
/// grading, named ideals and reducer selectors. Parsing builds and validates
/// the graded ring up front, so a spec in hand is always usable.
struct RingSpec {
  std::string name;
  RingPresentation pres;
  GradingGroup group = GradingGroup::trivial();
  std::vector<std::pair<std::string, uint32_t>> degrees;  // slot name -> label, slot order
  std::vector<std::pair<std::string, std::vector<std::string>>> ideal_gens;  // shown form
  std::vector<PhiMap> phis;

  std::shared_ptr<const GradedRing> ring;
  std::vector<std::pair<std::string, GradedIdeal>> ideals;

  const GradedIdeal* find_ideal(std::string_view ideal_name) const;
};

/// Text -> validated spec. Malformed text raises ParseError with line and
/// column; a structurally sound document that breaks a ring or grading rule
/// raises ValidationError, with the violating product pair when the grading
/// closure is what failed.
RingSpec parse_ring_spec(const std::string& text, const Limits& lim = default_limits());
RingSpec load_ring_spec(const std::string& path, const Limits& lim = default_limits());

/// Canonical serialized form: parsing it back reproduces the same value.
nlohmann::ordered_json serialize_ring_spec(const RingSpec& spec);

}  // namespace gril
