#include "gril/expectations.hpp"

namespace gril {

const std::vector<AbsorbingGapLock>& absorbing_gap_locks() {
  static const std::vector<AbsorbingGapLock> locks = {
      {"z18i-q9", "q2", {"2", "3", "3"}, {"2", "3", "3"}},
      {"z12i-q4", "q2", {"2", "3", "2"}, {"3", "2", "2"}},
  };
  return locks;
}

const StablePowerGapLock& stable_power_gap_lock() {
  static const StablePowerGapLock lock = {
      "boolean-z2p4",
      "axis",
      {"(1, 0, 0, 1)", "(1, 0, 0, 1)", "(1, 0, 1, 0)"},
      {"(1, 1, 1, 0)", "(1, 1, 0, 1)", "(1, 0, 1, 1)"},
  };
  return lock;
}

const std::vector<WeaklyPrimeGapLock>& weakly_prime_gap_locks() {
  static const std::vector<WeaklyPrimeGapLock> locks = {
      {"z18i-q9", "q2", {"3", "3"}, "9"},
      {"z12i-q4", "q2", {"2", "2"}, "4"},
  };
  return locks;
}

const ColonUnionGapLock& colon_union_gap_lock() {
  static const ColonUnionGapLock lock = {"z50x-trunc", "x25", "zero", {"2", "5", "5 + X"}};
  return lock;
}

const std::vector<RegularityLock>& regularity_locks() {
  static const std::vector<RegularityLock> locks = {
      {"zmod6", true},        {"zmod4", false},       {"f9-graded", true},
      {"z2-boolean", true},   {"boolean-z2p2", true}, {"boolean-z2p3", true},
      {"boolean-z2p4", true},
  };
  return locks;
}

}  // namespace gril
