#pragma once

#include <map>
#include <memory>
#include <optional>

#include "gril/ring.hpp"

namespace gril {

/// Degree label universe. Labels are integers 0..label_count()-1 with 0 the
/// identity. BoundedInteger is not a group: it composes by addition and any
/// product whose total degree exceeds the bound must be zero in the ring
/// (which a matching truncated polynomial ring forces).
struct GradingGroup {
  enum class Kind { Trivial, Cyclic, BoundedInteger };

  Kind kind = Kind::Trivial;
  uint32_t param = 1;  // Cyclic: order k >= 2; BoundedInteger: max degree t >= 1

  static GradingGroup trivial();
  static GradingGroup cyclic(uint32_t k);
  static GradingGroup bounded_integer(uint32_t t);

  uint32_t label_count() const;
  uint32_t identity() const { return 0; }
  /// nullopt marks a bounded-integer overflow (the zero-product convention).
  std::optional<uint32_t> compose(uint32_t a, uint32_t b) const;
  /// nullopt when no inverse label exists (bounded-integer, positive degree).
  std::optional<uint32_t> inverse(uint32_t a) const;
  std::string show(uint32_t g) const;

  bool operator==(const GradingGroup&) const = default;
};

/// A finite commutative graded ring viewed through element indices
/// 0..size()-1. Index 0 is always the zero element. Everything downstream of
/// ring construction (ideals, predicates, theorem checks) works against this
/// interface, so quotients and localizations slot in beside basis rings.
class GradedUniverse {
 public:
  virtual ~GradedUniverse() = default;

  virtual uint64_t size() const = 0;
  virtual uint64_t add(uint64_t a, uint64_t b) const = 0;
  virtual uint64_t neg(uint64_t a) const = 0;
  virtual uint64_t mul(uint64_t a, uint64_t b) const = 0;
  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }
  virtual uint64_t one() const = 0;
  virtual bool is_unit(uint64_t a) const = 0;
  virtual std::string show(uint64_t a) const = 0;

  virtual const GradingGroup& group() const = 0;
  virtual std::vector<uint32_t> realized_degrees() const = 0;
  /// Sorted element indices of R_g; always contains 0.
  virtual const std::vector<uint64_t>& component_indices(uint32_t g) const = 0;
  virtual bool in_component(uint64_t a, uint32_t g) const = 0;
  /// Nonzero homogeneous parts by degree; sums back to the element.
  virtual std::map<uint32_t, uint64_t> decompose(uint64_t a) const = 0;

  virtual const Limits& limits() const = 0;
  virtual std::string describe() const = 0;

  /// h(R) as sorted indices, zero included once. Cached.
  const std::vector<uint64_t>& homogeneous_indices() const;
  bool is_homogeneous(uint64_t a) const;
  /// Degree of a nonzero homogeneous element; nullopt for zero or mixed sums.
  std::optional<uint32_t> degree_of(uint64_t a) const;
  virtual uint64_t homogeneous_count() const;

 private:
  friend std::shared_ptr<void>& ideal_cache_slot(const GradedUniverse& u);
  mutable std::vector<uint64_t> homog_cache_;
  mutable std::shared_ptr<void> ideal_cache_;  // enumerate_graded_ideals memo
};

/// Memo slot used by enumerate_graded_ideals.
std::shared_ptr<void>& ideal_cache_slot(const GradedUniverse& u);

/// A basis ring together with a degree label per basis slot. Components are
/// the coordinate subspaces spanned by same-degree slots, so the direct-sum
/// decomposition is structural; validation checks component products and the
/// degree of the unity.
class GradedRing : public GradedUniverse {
 public:
  GradedRing(std::shared_ptr<const BasisRing> ring, GradingGroup group,
             std::vector<uint32_t> slot_degrees, const Limits& lim = default_limits());

  const BasisRing& ring() const { return *ring_; }
  const std::shared_ptr<const BasisRing>& ring_ptr() const { return ring_; }
  const std::vector<uint32_t>& slot_degrees() const { return slot_deg_; }

  const Verdict& validate() const { return valid_; }
  void require_valid() const;

  /// Membership in R_g: every nonzero coordinate sits on a degree-g slot.
  /// Zero belongs to every component.
  bool in_component(const Elem& a, uint32_t g) const;
  bool is_homogeneous(const Elem& a) const;
  std::optional<uint32_t> degree_of(const Elem& a) const;
  std::map<uint32_t, Elem> decompose(const Elem& a) const;

  uint64_t component_size(uint32_t g) const;
  const std::vector<Elem>& component(uint32_t g) const;  // sorted by index, holds 0
  const std::vector<Elem>& homogeneous() const;          // h(R), sorted by index
  uint64_t homogeneous_count() const override;           // exact, no materialization

  bool is_graded_field() const;

  // index-based interface
  uint64_t size() const override { return ring_->size(); }
  uint64_t add(uint64_t a, uint64_t b) const override;
  uint64_t neg(uint64_t a) const override;
  uint64_t mul(uint64_t a, uint64_t b) const override;
  uint64_t one() const override { return one_idx_; }
  bool is_unit(uint64_t a) const override;
  std::string show(uint64_t a) const override;
  const GradingGroup& group() const override { return group_; }
  std::vector<uint32_t> realized_degrees() const override { return realized_; }
  const std::vector<uint64_t>& component_indices(uint32_t g) const override;
  bool in_component(uint64_t a, uint32_t g) const override;
  std::map<uint32_t, uint64_t> decompose(uint64_t a) const override;
  const Limits& limits() const override { return lim_; }
  std::string describe() const override;

 private:
  Verdict run_validation() const;
  std::vector<size_t> degree_slots(uint32_t g) const;

  std::shared_ptr<const BasisRing> ring_;
  GradingGroup group_;
  std::vector<uint32_t> slot_deg_;
  Limits lim_;
  Verdict valid_;
  std::vector<uint32_t> realized_;
  uint64_t one_idx_ = 0;
  mutable std::map<uint32_t, std::vector<Elem>> comps_;
  mutable std::map<uint32_t, std::vector<uint64_t>> comp_idx_;
  mutable std::vector<Elem> homog_;
};

}  // namespace gril
