#pragma once

#include <json.hpp>

#include "gril/fixtures.hpp"

namespace gril {

struct CheckFailure {
  std::string instance;
  std::string witness;
};

/// One (check, fixture) slice of a verification run. instances counts only
/// the cases that pass the check's premise; each such case lands in exactly
/// one of passed / vacuous / expected_counterexamples / failures. Slices with
/// zero instances are still reported, so premise vacuity stays visible.
struct CheckReport {
  std::string check_id;
  std::string fixture;
  uint64_t instances = 0;
  uint64_t passed = 0;
  uint64_t vacuous = 0;
  uint64_t expected_counterexamples = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Check ids the registry must provide; run_all refuses to start with any of
/// them missing.
const std::vector<std::string>& canonical_check_ids();

/// Everything actually registered: the canonical ids plus the locked example
/// reproductions (Ex2, Ex3, Ex4), in registration order.
const std::vector<std::string>& registered_check_ids();

/// Run one check over the given fixtures. One report per fixture (per fixture
/// pair for the product checks), sorted by fixture label. Throws
/// Error(Err::UnknownCheck) for an unregistered id.
std::vector<CheckReport> run_check(const std::string& check_id,
                                   const std::vector<const Fixture*>& fixtures);

/// Every registered check over the given fixtures; reports sorted by check
/// id, then fixture label. An empty fixture list yields an empty report.
std::vector<CheckReport> run_all(const std::vector<const Fixture*>& fixtures);

bool all_ok(const std::vector<CheckReport>& reports);

/// The whole catalog in the pointer form run_check/run_all take.
std::vector<const Fixture*> all_fixture_pointers();

/// Stable rendering: an array of records with fixed key order, suitable for
/// byte-compared reruns.
nlohmann::ordered_json report_json(const std::vector<CheckReport>& reports);

}  // namespace gril
