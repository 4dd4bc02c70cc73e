#pragma once

// Descriptors for the infinite abelian groups built from the basic blocks
//   ℤ, ℤ/m, ℤ_(p), ℤ[S⁻¹], ℚ, ℚ_l/ℤ_l, ℤ_p
// and block-wise evaluation of the additive functors used for p-adic
// completion: Tate module, maximal p-divisible subgroup, finite coefficients,
// lim and lim¹ of the multiplication-by-p tower.
//
// Equality is literal equality of normalized fields. No abstract isomorphism
// test is attempted beyond the normal forms documented in docs/derivations.md.

#include "brauerkit/fgab.hpp"
#include "brauerkit/numeric.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bk::groupclass {

using fgab::GroupStructure;

/// A finite cardinal or the cardinality of the continuum.
class ExtCardinal {
 public:
  constexpr ExtCardinal() = default;
  constexpr ExtCardinal(std::uint64_t n) : n_(n) {}  // NOLINT: implicit by design of Fin(n)
  static constexpr ExtCardinal continuum() {
    ExtCardinal c;
    c.continuum_ = true;
    return c;
  }

  constexpr bool is_continuum() const { return continuum_; }
  constexpr bool is_zero() const { return !continuum_ && n_ == 0; }
  /// Finite value; throws for the continuum.
  std::uint64_t value() const;

  /// k copies: k·c (0 when k = 0).
  ExtCardinal times(std::uint64_t k) const;

  friend ExtCardinal operator+(ExtCardinal a, ExtCardinal b);
  friend bool operator==(const ExtCardinal&, const ExtCardinal&) = default;
  friend bool operator<(const ExtCardinal& a, const ExtCardinal& b) {
    if (a.continuum_ != b.continuum_) return b.continuum_;
    return a.n_ < b.n_;
  }

  std::string to_string() const;

 private:
  bool continuum_ = false;
  std::uint64_t n_ = 0;
};

/// A function prime ↦ cardinal that equals `default_value` away from a finite
/// exception set.
class PrimeMultiplicity {
 public:
  PrimeMultiplicity() = default;
  explicit PrimeMultiplicity(ExtCardinal default_value,
                             std::map<Prime, ExtCardinal> exceptions = {});

  static PrimeMultiplicity at_prime(Prime l, ExtCardinal n);

  const ExtCardinal& default_value() const { return default_; }
  const std::map<Prime, ExtCardinal>& exceptions() const { return exceptions_; }

  ExtCardinal at(Prime l) const;
  void set(Prime l, ExtCardinal n);

  bool is_zero() const { return default_.is_zero() && exceptions_.empty(); }
  bool has_continuum() const;
  /// True when the value is zero at every prime other than `p`.
  bool supported_at(Prime p) const;

  friend PrimeMultiplicity operator+(const PrimeMultiplicity& a,
                                     const PrimeMultiplicity& b);
  friend bool operator==(const PrimeMultiplicity&, const PrimeMultiplicity&) = default;
  friend bool operator<(const PrimeMultiplicity& a, const PrimeMultiplicity& b);

 private:
  void normalize();

  ExtCardinal default_;
  std::map<Prime, ExtCardinal> exceptions_;
};

/// `multiplicity` copies of ℤ[S⁻¹] for a nonempty finite prime set S.
struct InvertedBlock {
  std::vector<Prime> primes;  // sorted, distinct
  std::uint64_t multiplicity = 0;

  bool inverts(Prime p) const;
  friend bool operator==(const InvertedBlock&, const InvertedBlock&) = default;
  friend bool operator<(const InvertedBlock& a, const InvertedBlock& b) {
    if (a.primes != b.primes) return a.primes < b.primes;
    return a.multiplicity < b.multiplicity;
  }
};

/// Formal direct sum of basic blocks. Fields are public for serialization;
/// call normalize() after editing them directly.
struct GroupDescriptor {
  std::uint64_t free_rank = 0;                  // ℤ
  std::vector<BigInt> cyclic;                   // ℤ/m, invariant-factor form
  std::map<Prime, std::uint64_t> local;         // ℤ_(p)
  std::vector<InvertedBlock> inverted;          // ℤ[S⁻¹]
  ExtCardinal rational;                         // ℚ
  PrimeMultiplicity pruefer;                    // ℚ_l/ℤ_l
  std::map<Prime, std::uint64_t> padic;         // ℤ_p as an abstract group
  std::set<Prime> finite_p_placeholders;        // finite p-group of unknown order

  static GroupDescriptor zero() { return {}; }
  static GroupDescriptor integers(std::uint64_t n = 1);
  static GroupDescriptor cyclic_group(const BigInt& m);
  static GroupDescriptor from_structure(const GroupStructure& g);
  static GroupDescriptor localized(Prime p, std::uint64_t n = 1);
  static GroupDescriptor inverted_primes(std::vector<Prime> S, std::uint64_t n = 1);
  static GroupDescriptor rationals(ExtCardinal n = 1);
  static GroupDescriptor pruefer_group(Prime l, ExtCardinal n = 1);
  static GroupDescriptor pruefer_all(PrimeMultiplicity m);
  /// ℚ/ℤ = ⊕_l ℚ_l/ℤ_l.
  static GroupDescriptor rationals_mod_integers(std::uint64_t n = 1);
  /// ℚ/ℤ[1/p] = ⊕_{l≠p} ℚ_l/ℤ_l.
  static GroupDescriptor rationals_mod_integers_away_from(Prime p, std::uint64_t n = 1);
  static GroupDescriptor padic_integers(Prime p, std::uint64_t n = 1);
  static GroupDescriptor finite_p_group(Prime p);

  /// Validates primes and moduli, merges duplicate blocks, drops zeros.
  /// Throws DomainError on malformed blocks.
  void normalize();

  bool is_zero() const;
  bool has_continuum() const;
  /// No ℤ, ℤ_(p), ℤ[S⁻¹], ℤ_p blocks, no continuum, no ℚ and no Prüfer blocks.
  bool is_finite() const;
  /// Only ℚ and Prüfer blocks.
  bool is_divisible() const;
  /// Every prime l ≠ p acts invertibly.
  bool is_zp_module(Prime p) const;
  /// Multiplication by p is surjective.
  bool is_p_divisible(Prime p) const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend bool operator<(const GroupDescriptor& a, const GroupDescriptor& b);
};

GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b);

/// Human-readable block expression, e.g. "ℤ_2 ⊕ ℚ^(c)".
std::string to_string(const GroupDescriptor& g);

GroupDescriptor tate_module(const GroupDescriptor& G, Prime p);
GroupDescriptor max_p_divisible(const GroupDescriptor& G, Prime p);

struct DescriptorCoefficients {
  GroupStructure quotient;  // G / p^j G
  GroupStructure torsion;   // p^j-torsion of G
};

/// Rejects any continuum multiplicity.
DescriptorCoefficients finite_coefficients_descriptor(const GroupDescriptor& G,
                                                      Prime p, unsigned j);

/// p^j-torsion only; rational and prime-to-p blocks may have any multiplicity.
GroupStructure p_power_torsion(const GroupDescriptor& G, Prime p, unsigned j);

/// lim¹ of the tower G <-p- G <-p- G ← ...
GroupDescriptor lim1_mult_p(const GroupDescriptor& G, Prime p);

struct ConsistencyCheck {
  std::string name;
  bool passed = false;
};

/// The six terms of the derived-limit sequence
///   0 → T_pG → lim(G,p) → lim p^jG → lim¹ {}_{p^j}G → lim¹(G,p) → lim¹ p^jG → 0
/// evaluated from the analytic block table, with checks against the
/// individual functors.
struct SixTermSequence {
  GroupDescriptor tate;
  GroupDescriptor lim;
  GroupDescriptor lim_images;
  GroupDescriptor lim1_torsion;
  GroupDescriptor lim1;
  GroupDescriptor lim1_images;
  std::vector<ConsistencyCheck> checks;

  bool consistent() const;
  std::vector<GroupDescriptor> terms() const {
    return {tate, lim, lim_images, lim1_torsion, lim1, lim1_images};
  }
};

SixTermSequence six_term_mult_p(const GroupDescriptor& G, Prime p);

/// Cokernel of the completion map on a ℤ_(p)-module H^i with successor
/// H^{i+1}: T_p(H^{i+1}) ⊕ lim¹(H^i, p).
GroupDescriptor compllemma_cokernel(const GroupDescriptor& current,
                                    const GroupDescriptor& next, Prime p);

/// All D ⊕ F' with F' a quotient of the finite group F, up to isomorphism,
/// sorted.
std::vector<GroupDescriptor> extension_classes(const GroupDescriptor& D,
                                               const GroupStructure& F);

/// Isomorphism types of quotients of a finite abelian group, sorted.
std::vector<GroupStructure> quotient_types(const GroupStructure& F);

}  // namespace bk::groupclass
