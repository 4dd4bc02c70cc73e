#pragma once

// ℤ_(p)-submodules M ⊆ ℚʳ with M ⊗ ℚ = ℚʳ, given by finitely many tagged
// generators, and the Brauer-kernel descriptors built from their (s, t) type.

#include "brauerkit/fgab.hpp"
#include "brauerkit/groupclass.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bk::submodq {

using fgab::GroupStructure;
using groupclass::GroupDescriptor;

enum class Tag { local, divisible };

/// `local` contributes ℤ_(p)·g, `divisible` contributes ℚ·g.
struct TaggedGenerators {
  std::size_t r = 1;
  Prime p = 2;
  std::vector<std::pair<RatVector, Tag>> generators;
};

/// M is an extension of ℚ^t by ℤ_(p)^s. `finite_unknown` marks a finite
/// p-group summand whose order is not determined.
struct STPair {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  GroupStructure finite_part;
  bool finite_unknown = false;

  friend bool operator==(const STPair&, const STPair&) = default;
};

/// Rank of a rational matrix by exact elimination.
std::size_t rational_rank(RatMatrix M);

/// Projection induction: peel off one coordinate at a time, recording a
/// ℚ-line when a divisible generator survives the projection and a ℤ_(p)-line
/// otherwise.
STPair classify_submodule(const TaggedGenerators& gens);

struct H2kDescription {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  bool torsion_finite_p_group = true;
  bool torsion_order_known = false;
  /// The torsion-free quotient is an extension of ℚ^t by ℤ_(p)^s; no
  /// splitting is claimed.
  bool extension_only = true;
  std::string torsion_free_shape;
};

H2kDescription h2k_structure(std::uint64_t r, std::uint64_t s);

/// (ℚ/ℤ[1/p])^s ⊕ (ℚ/ℤ)^t ⊕ P with P a finite p-group.
GroupDescriptor brauer_kernel_structure(std::uint64_t s, std::uint64_t t, Prime p);

}  // namespace bk::submodq
