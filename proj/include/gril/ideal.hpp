#pragma once

#include <optional>

#include "gril/grading.hpp"

namespace gril {

/// A graded ideal I = (+)_g I_g, stored as one sorted index set per realized
/// degree. The direct-sum structure makes membership, size, inclusion and the
/// ideal algebra componentwise.
class GradedIdeal {
 public:
  GradedIdeal(std::shared_ptr<const GradedUniverse> ambient,
              std::map<uint32_t, std::vector<uint64_t>> comps, std::vector<uint64_t> gens = {});

  static GradedIdeal zero_ideal(std::shared_ptr<const GradedUniverse> ambient);
  static GradedIdeal whole_ring(std::shared_ptr<const GradedUniverse> ambient);

  const std::shared_ptr<const GradedUniverse>& ambient() const { return amb_; }
  const std::map<uint32_t, std::vector<uint64_t>>& comps() const { return comps_; }
  const std::vector<uint64_t>& component(uint32_t g) const;
  const std::vector<uint64_t>& generators() const { return gens_; }

  uint64_t size() const;        // product of component sizes
  bool is_zero_ideal() const;
  bool proper() const;          // some component is a proper subgroup
  bool contains(uint64_t x) const;
  bool subset_of(const GradedIdeal& other) const;
  bool same_elements(const GradedIdeal& other) const;

  /// Full element set, sorted by index. Guarded by max_set_expansion.
  std::vector<uint64_t> elements() const;

  /// Canonical dedup/order key: per-degree component lists flattened.
  std::vector<uint64_t> signature() const;

  /// Rendering for reports: generator list when known, else a few elements.
  std::string show() const;

 private:
  std::shared_ptr<const GradedUniverse> amb_;
  std::map<uint32_t, std::vector<uint64_t>> comps_;
  std::vector<uint64_t> gens_;
};

/// Smallest graded ideal containing the given homogeneous elements.
GradedIdeal generate_graded_ideal(std::shared_ptr<const GradedUniverse> ambient,
                                  const std::vector<uint64_t>& hom_gens);

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_power(const GradedIdeal& a, uint32_t n);  // n >= 1
GradedIdeal ideal_intersection(const GradedIdeal& a, const GradedIdeal& b);

/// (I : x) for homogeneous x (or zero), computed per component; the result is
/// a graded ideal.
GradedIdeal colon_ideal(const GradedIdeal& ideal, uint64_t x);
/// (I :_{R_g} x): elements of R_g multiplying x into I. Sorted indices.
std::vector<uint64_t> colon_component(const GradedIdeal& ideal, uint64_t x, uint32_t g);
/// (I : x) for arbitrary x by full-ring scan. Sorted indices; size-guarded.
std::vector<uint64_t> colon_set(const GradedIdeal& ideal, uint64_t x);

/// The complete duplicate-free list of graded ideals in canonical order
/// (by size, then componentwise index lists). Memoized per universe.
const std::vector<GradedIdeal>& enumerate_graded_ideals(
    std::shared_ptr<const GradedUniverse> ambient);

struct SpectrumInfo {
  std::vector<GradedIdeal> graded_maximal;
  bool is_graded_local = false;
  std::optional<GradedIdeal> unique_maximal;
};
SpectrumInfo graded_spectrum(std::shared_ptr<const GradedUniverse> ambient);

/// R/J with lexicographic-least coset representatives. Degrees are inherited;
/// units are found by a fresh inverse scan (a quotient by the zero ideal
/// delegates to the base ring).
class QuotientRing : public GradedUniverse, public std::enable_shared_from_this<QuotientRing> {
 public:
  static std::shared_ptr<const QuotientRing> create(std::shared_ptr<const GradedUniverse> base,
                                                    const GradedIdeal& modulus);

  const std::shared_ptr<const GradedUniverse>& base() const { return base_; }
  const GradedIdeal& modulus() const { return mod_; }

  uint64_t project(uint64_t base_elem) const;
  uint64_t rep(uint64_t coset) const { return reps_.at(coset); }
  /// (I + J)/J for a graded ideal I of the base ring.
  GradedIdeal project_ideal(const GradedIdeal& ideal) const;
  /// Preimage of a graded ideal of the quotient; always contains J.
  GradedIdeal lift_ideal(const GradedIdeal& ideal) const;

  uint64_t size() const override { return reps_.size(); }
  uint64_t add(uint64_t a, uint64_t b) const override;
  uint64_t neg(uint64_t a) const override;
  uint64_t mul(uint64_t a, uint64_t b) const override;
  uint64_t one() const override { return one_; }
  bool is_unit(uint64_t a) const override;
  std::string show(uint64_t a) const override;
  const GradingGroup& group() const override { return base_->group(); }
  std::vector<uint32_t> realized_degrees() const override { return base_->realized_degrees(); }
  const std::vector<uint64_t>& component_indices(uint32_t g) const override;
  bool in_component(uint64_t a, uint32_t g) const override;
  std::map<uint32_t, uint64_t> decompose(uint64_t a) const override;
  const Limits& limits() const override { return base_->limits(); }
  std::string describe() const override;

 private:
  QuotientRing(std::shared_ptr<const GradedUniverse> base, GradedIdeal modulus);

  std::shared_ptr<const GradedUniverse> base_;
  GradedIdeal mod_;
  std::vector<uint64_t> reps_;    // coset -> least base element, ascending
  std::vector<uint32_t> cosets_;  // base element -> coset
  uint64_t one_ = 0;
  std::map<uint32_t, std::vector<uint64_t>> comps_;
  mutable std::vector<uint8_t> unit_mask_;  // lazily filled unless |J| = 1
};

/// Localization at a homogeneous multiplicative set, realized as R/K with
/// K = {r : sr = 0 for some s in S}. In the quotient every image of S is a
/// unit, which create() verifies.
struct Localization {
  std::shared_ptr<const QuotientRing> ring;
  GradedIdeal kernel;
};
Localization localize(std::shared_ptr<const GradedUniverse> ambient,
                      const std::vector<uint64_t>& mult_set);

/// Independent model of the localization as formal fractions a/s with
/// (a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S. Returns a description of
/// the first mismatch against the given quotient model, or nullopt if they are
/// isomorphic via a/s -> project(a) * project(s)^{-1} (bijection checked, both
/// operations checked, canonical maps commute).
std::optional<std::string> localization_oracle_mismatch(const GradedUniverse& ring,
                                                        const std::vector<uint64_t>& mult_set,
                                                        const QuotientRing& loc);

/// All homogeneous multiplicative sets of the ring (1 in S, 0 not in S,
/// closed), deduplicated by the kernel ideal they induce when dedup_by_kernel
/// is set. Deterministic order.
std::vector<std::vector<uint64_t>> enumerate_multiplicative_sets(
    std::shared_ptr<const GradedUniverse> ambient, bool dedup_by_kernel);

/// R x T with the shared grading group; degrees pair componentwise. Both
/// inputs must be basis-backed.
std::shared_ptr<const GradedRing> product_construction(const GradedRing& left,
                                                       const GradedRing& right);
/// I x J inside a product built by product_construction(left, right).
GradedIdeal product_ideal(std::shared_ptr<const GradedUniverse> product,
                          const GradedIdeal& left_ideal, const GradedIdeal& right_ideal);

}  // namespace gril
