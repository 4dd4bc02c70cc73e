#pragma once

// Rank-1 torsion-free groups M = ℤ[{p^(-e_p)}] ⊆ ℚ and their Ext into ℤ.

#include "brauerkit/fgab.hpp"
#include "brauerkit/groupclass.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bk::rank1ext {

using fgab::GroupStructure;
using groupclass::GroupDescriptor;

/// e ∈ ℕ ∪ {∞}.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(std::uint64_t e) : e_(e) {}  // NOLINT: finite exponent
  static constexpr Exponent infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  std::uint64_t value() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.infinite_ != b.infinite_) return b.infinite_;
    return a.e_ < b.e_;
  }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(e_); }

 private:
  bool infinite_ = false;
  std::uint64_t e_ = 0;
};

/// The exponent function p ↦ e_p of M = ℤ[{p^(-e_p)}]: `default_value` away
/// from finitely many exceptions. Defaults are restricted to {0, 1, ∞}; a
/// larger finite default is replaced by 1, which has the same classification.
class EProfile {
 public:
  EProfile() = default;
  explicit EProfile(Exponent default_value, std::map<Prime, Exponent> exceptions = {});

  static EProfile integers() { return EProfile(); }
  /// ℤ[1/p] = ℤ[p^(-∞)].
  static EProfile invert(Prime p);
  /// ℤ_(p): every l ≠ p inverted.
  static EProfile localized_at(Prime p);

  const Exponent& default_value() const { return default_; }
  const std::map<Prime, Exponent>& exceptions() const { return exceptions_; }
  Exponent at(Prime p) const;

  /// Same isomorphism type with every finite exponent shifted to the default
  /// (or to 0 under an infinite default).
  EProfile canonical() const;

  friend bool operator==(const EProfile&, const EProfile&) = default;

 private:
  void normalize();

  Exponent default_;
  std::map<Prime, Exponent> exceptions_;
};

/// M = colim(ℤ -a_1-> ℤ -a_2-> ...) for the multiplier sequence
/// prefix, period, period, ...; returned in canonical form.
EProfile eprofile_from_multipliers(const std::vector<BigInt>& prefix,
                                   const std::vector<BigInt>& period);

/// Exponents of the multiplier sequence before canonicalization.
EProfile raw_eprofile_from_multipliers(const std::vector<BigInt>& prefix,
                                       const std::vector<BigInt>& period);

bool is_free(const EProfile& M);
GroupDescriptor ext_to_Z(const EProfile& M);
GroupDescriptor quotient_mod_Z(const EProfile& M);
GroupStructure hom_to_Z(const EProfile& M);

}  // namespace bk::rank1ext
