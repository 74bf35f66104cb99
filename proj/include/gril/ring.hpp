#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gril/common.hpp"

namespace gril {

/// Finite commutative ring presentation: residue rings, quotients of
/// polynomial rings by a monic modulus (or a pure truncation X^t), and
/// finite direct products, nested freely.
struct RingPresentation {
  enum class Kind { Zmod, Poly, Product };

  Kind kind = Kind::Zmod;
  uint64_t modulus = 0;                        // Zmod: n >= 2
  std::shared_ptr<RingPresentation> base;      // Poly
  uint32_t degree = 0;                         // Poly: degree of the monic modulus
  std::vector<Elem> lower;                     // Poly: c_0..c_{d-1}, base coordinates
  std::vector<RingPresentation> factors;       // Product

  static RingPresentation zmod(uint64_t n);
  // X^degree + lower[degree-1] X^{degree-1} + ... + lower[0]
  static RingPresentation poly(RingPresentation base, std::vector<Elem> lower);
  static RingPresentation truncated(RingPresentation base, uint32_t t);  // modulus X^t
  static RingPresentation product(std::vector<RingPresentation> factors);
};

/// Flags from element classification. An element may carry several.
struct ElemClass {
  bool unit = false;
  bool idempotent = false;
  bool nilpotent = false;
  bool regular = false;       // trivial annihilator
  bool zero_divisor = false;  // nontrivial annihilator
};

/// Arithmetic universe for a presentation. Elements are flat coordinate
/// vectors; the canonical enumeration index treats higher polynomial degrees
/// and earlier product factors as more significant.
class BasisRing {
 public:
  BasisRing(const RingPresentation& pres, const Limits& lim = default_limits());

  uint64_t size() const { return size_; }
  size_t width() const { return moduli_.size(); }
  const std::vector<uint64_t>& moduli() const { return moduli_; }
  const std::vector<std::string>& slot_names() const { return names_; }
  const RingPresentation& presentation() const { return pres_; }

  Elem zero() const;
  Elem one() const { return one_; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scalar(int64_t k) const;  // k * 1

  bool is_zero(const Elem& a) const;
  uint64_t index_of(const Elem& a) const;
  Elem element_at(uint64_t idx) const;

  /// Exact unit test via the ring structure (gcd at residue leaves, factorwise
  /// on products, constant term for truncations, per-prime polynomial gcd for
  /// residue-based polynomial quotients). Falls back to an inverse scan.
  bool is_unit(const Elem& a) const;
  /// Reference path: exhaustive search for an inverse.
  bool is_unit_scan(const Elem& a) const;

  ElemClass classify_element(const Elem& a) const;
  bool is_idempotent(const Elem& a) const;
  bool is_nilpotent(const Elem& a) const;
  std::vector<uint64_t> annihilator(const Elem& a) const;  // sorted indices

  std::string show(const Elem& a) const;
  Elem parse(const std::string& text) const;

 private:
  struct Node {
    RingPresentation::Kind kind;
    uint64_t modulus = 0;                     // Zmod
    size_t width = 0;                         // slots covered
    size_t base = 0;                          // Poly: child node id
    uint32_t degree = 0;                      // Poly
    std::vector<std::vector<uint32_t>> lower; // Poly: base-width blocks
    bool trunc = false;                       // Poly: all lower coeffs zero
    std::vector<size_t> children;             // Product: child node ids
    std::vector<uint64_t> prime_factors;      // Zmod: distinct primes of n
    std::vector<uint64_t> local_moduli;       // modulus per covered slot
  };

  size_t build(const RingPresentation& p);
  void sig_order(size_t node, size_t offset, std::vector<size_t>& out) const;
  std::vector<std::string> name_rec(size_t node) const;
  Elem one_rec(size_t node) const;
  void check_width(const Elem& a) const;
  void mul_span(size_t node, const uint32_t* a, const uint32_t* b, uint32_t* out) const;
  int unit_rec(size_t node, const uint32_t* a) const;  // 1 yes, 0 no, -1 undecided
  bool zero_span(const uint32_t* a, size_t w) const;
  std::string show_rec(size_t node, const uint32_t* a) const;
  Elem scalar_node(size_t node, int64_t k) const;
  Elem parse_rec(size_t node, const std::string& raw) const;

  RingPresentation pres_;
  std::vector<Node> nodes_;
  size_t root_ = 0;
  std::vector<uint64_t> moduli_;
  std::vector<std::string> names_;
  std::vector<uint64_t> strides_;
  std::vector<size_t> sig_;  // slot ids, most significant first
  uint64_t size_ = 0;
  Elem one_;
};

/// Ring axiom check. Unary laws run over every element (capped for very large
/// rings), binary and ternary laws over a deterministic sample of at most
/// sample_cap elements. Returns a description of the first violation.
std::optional<std::string> check_ring_axioms(const BasisRing& r, uint64_t sample_cap = 48);

/// Short human-readable name of a presentation, e.g. "Z_18[X]/(X^2 + 1)".
std::string presentation_name(const RingPresentation& p);

}  // namespace gril
