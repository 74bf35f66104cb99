#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gril {

// Flat coordinate vector of an element, one entry per basis slot.
using Elem = std::vector<uint32_t>;

enum class Err {
  MixedRings,
  SizeExceeded,
  NonHomogeneousGenerator,
  ImproperIdeal,
  GroupMismatch,
  BadMultiplicativeSet,
  AmbientMismatch,
  PredicateNotSatisfied,
  NotVnr,
  UnknownCheck,
  ParseError,
  ValidationError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

enum class Outcome { Pass, Fail, Vacuous };

const char* outcome_name(Outcome o);

struct WitnessPart {
  std::string role;   // "a", "b", "c", "ideal", "separator", ...
  Elem value;         // raw coordinates, empty when the part is not an element
  std::string shown;  // rendered form, always set
};

// Outcome of a decidable property. Vacuous means the hypothesis set was empty;
// it counts as a pass but is reported separately.
struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::vector<WitnessPart> witness;
  std::string notes;

  bool ok() const { return outcome != Outcome::Fail; }
  static Verdict pass(std::string n = "") { return {Outcome::Pass, {}, std::move(n)}; }
  static Verdict vacuous(std::string n = "") { return {Outcome::Vacuous, {}, std::move(n)}; }
  static Verdict fail(std::vector<WitnessPart> w, std::string n = "") {
    return {Outcome::Fail, std::move(w), std::move(n)};
  }
};

// Size guards. All exhaustive quantifications respect these bounds and raise
// SizeExceeded instead of running away.
struct Limits {
  uint64_t max_ring_size = 1000000;      // arithmetic universe
  uint64_t max_enum_homogeneous = 10000; // ideal enumeration and predicate scans
  uint64_t max_set_expansion = 1000000;  // materializing an ideal's element list
  uint64_t max_oracle_ring = 64;         // formal-fraction cross-check of localization
};

Limits& default_limits();

}  // namespace gril
