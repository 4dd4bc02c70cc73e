#pragma once

// Inverse systems A_0 ← A_1 ← A_2 ← ... of free abelian groups of constant
// rank r with finite cokernels, described by a finite prefix of r×r integer
// matrices followed by an eventually periodic diagonal tail.
//
// Transition matrices are stored as maps A_{i+1} → A_i; the dual colimit
// colim Hom(A_i, ℤ) uses their transposes.

#include "brauerkit/fgab.hpp"
#include "brauerkit/groupclass.hpp"

#include <optional>
#include <vector>

namespace bk::prosys {

using fgab::GroupStructure;
using groupclass::GroupDescriptor;

struct InverseSystemSpec {
  std::size_t rank = 1;
  std::vector<IntMatrix> prefix;
  /// One length-`rank` diagonal per step of the period.
  std::vector<std::vector<BigInt>> tail;

  std::size_t period() const { return tail.size(); }
  /// Tail entries of coordinate j across the period.
  std::vector<BigInt> coordinate(std::size_t j) const;
};

struct ValidatedSystem {
  InverseSystemSpec spec;
  std::vector<GroupStructure> prefix_cokernels;
  std::vector<GroupStructure> tail_cokernels;
  /// Set when every cokernel is a p-group for one prime p and at least one
  /// cokernel is nontrivial.
  std::optional<Prime> single_prime;
};

/// Checks shapes, nonzero determinants and nonzero tail entries, and attaches
/// the cokernel of every transition map.
ValidatedSystem validate_system(const InverseSystemSpec& spec);

/// lim A_i: one copy of ℤ for each coordinate whose tail entries are all ±1.
GroupStructure lim_structure(const ValidatedSystem& system);

enum class Lim1Strategy { recursive, ext_oracle };

/// lim¹ A_i ≅ ℚ^{n_0} ⊕ ⊕_p (ℚ_p/ℤ_p)^{n_p}, or 0. Only the `rational` and
/// `pruefer` fields of the result are ever set.
using Lim1Class = GroupDescriptor;

Lim1Class lim1_classify(const ValidatedSystem& system,
                        Lim1Strategy strategy = Lim1Strategy::recursive);

bool is_mittag_leffler(const ValidatedSystem& system);

InverseSystemSpec drop_prefix(const InverseSystemSpec& spec, std::size_t k);

}  // namespace bk::prosys
