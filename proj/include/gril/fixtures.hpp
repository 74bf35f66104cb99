#pragma once

#include <string_view>
#include <utility>

#include "gril/phi.hpp"

namespace gril {

/// Where a fixture comes from: Paper fixtures reproduce a published example
/// verbatim and their verdicts are locked by the expectations table; Synthetic
/// fixtures exist to widen sweep coverage.
enum class Provenance { Paper, Synthetic };

std::string provenance_name(Provenance p);

struct Fixture {
  std::string name;
  std::shared_ptr<const GradedRing> ring;
  std::vector<std::pair<std::string, GradedIdeal>> ideals;
  std::vector<PhiMap> phis;
  Provenance provenance = Provenance::Synthetic;
  std::string notes;

  const GradedIdeal* find_ideal(std::string_view ideal_name) const;
};

/// The reducer maps every sweep runs by default: empty, zero, power:2,
/// power:3, omega.
std::vector<PhiMap> standard_phis();

/// The shipped catalog, built once and iterated in this fixed order.
const std::vector<Fixture>& fixture_catalog();

const Fixture* find_fixture(std::string_view name);

}  // namespace gril
