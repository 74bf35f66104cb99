#pragma once

#include <string>
#include <vector>

namespace gril {

// Frozen verdicts for the anchor fixtures. The verification suite confirms
// these exactly; changing one is an explicit edit here, never a loosened
// check. Witnesses are stored in rendered form and parsed back through the
// owning ring when a check re-verifies them by definition.

/// Weakly 1-absorbing but not 1-absorbing: the least violating triple the
/// classifier finds, plus the recorded triple whose product is zero (which is
/// why only the weak form survives).
struct AbsorbingGapLock {
  std::string fixture;
  std::string ideal;
  std::vector<std::string> least_violation;
  std::vector<std::string> recorded_violation;
};
const std::vector<AbsorbingGapLock>& absorbing_gap_locks();

/// An idempotent ideal: every stable-power instance is excised, so that
/// predicate holds vacuously, while the weak form fails outright. The recorded
/// triple has a nonzero product landing in the ideal.
struct StablePowerGapLock {
  std::string fixture;
  std::string ideal;
  std::vector<std::string> least_violation;
  std::vector<std::string> recorded_violation;
};
const StablePowerGapLock& stable_power_gap_lock();

/// Weakly 1-absorbing but not weakly prime: a nonzero square lands in the
/// ideal while its root stays outside.
struct WeaklyPrimeGapLock {
  std::string fixture;
  std::string ideal;
  std::vector<std::string> violation;
  std::string product;
};
const std::vector<WeaklyPrimeGapLock>& weakly_prime_gap_locks();

/// The colon-union condition does not imply the colon-equality one: on this
/// ideal condition (1) holds while condition (2) fails at the recorded pair,
/// with the recorded separator lying in the colon but in neither summand.
struct ColonUnionGapLock {
  std::string fixture;
  std::string ideal;
  std::string phi;
  std::vector<std::string> violation;
};
const ColonUnionGapLock& colon_union_gap_lock();

/// Locked regularity verdicts (is every homogeneous a of the form a*a*x).
struct RegularityLock {
  std::string fixture;
  bool is_vnr;
};
const std::vector<RegularityLock>& regularity_locks();

}  // namespace gril
