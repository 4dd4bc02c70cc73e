#pragma once

// Closed-form invariants of the Brauer group of a regular proper model over a
// p-adic ring of integers, and structure reports assembled from them.

#include "brauerkit/groupclass.hpp"
#include "brauerkit/submodq.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bk::brauer {

using groupclass::GroupDescriptor;

struct BrauerInvariants {
  std::uint64_t f = 1;  // [K : ℚ_p]
  Prime p = 2;
  std::optional<std::uint64_t> h01;  // unknown when absent
  std::optional<std::uint64_t> h02;
  std::uint64_t rho_X = 0;
  std::uint64_t rho_Xs = 0;
  std::uint64_t I = 1;  // irreducible components of the special fiber
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> dim_vl_br_xsbar;  // dim V_l Br(X̄)^{G_K}, l ≠ p
  std::optional<std::uint64_t> dim_vp_br_xsbar;  // dim V_p Br(X̄)^{G_K}
  std::optional<std::uint64_t> dim_vl_br_xs;     // dim V_l Br(special fiber)
  /// Br of the special fiber is known to be finite (Tate's theorem for
  /// abelian and K3 surfaces), so no conjecture is invoked.
  bool finiteness_proven = false;
};

struct CorankEntry {
  std::string prime;  // "l != p" or "p"
  std::string quantity;
  std::uint64_t value = 0;
};

struct StructureReport {
  std::uint64_t r = 0;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> t;
  /// Admissible (s, t) when s is not supplied and r > 0.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> st_candidates;
  std::optional<GroupDescriptor> kernel;
  std::uint64_t pic_rank = 0;
  std::optional<std::uint64_t> pic_zp_rank;
  std::optional<std::uint64_t> lim_kernel_rank_bound;
  std::vector<CorankEntry> coranks;
  std::vector<std::string> citations;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  bool conditional = false;
};

/// ρ_{special} − ρ_X − I + 1; throws when negative.
std::uint64_t compute_r(std::uint64_t rho_Xs, std::uint64_t rho_X, std::uint64_t I);

/// 1 + dim V_l Br(X̄)^{G_K}, plus f·h01 when l = p.
std::uint64_t corank_vl_br(bool l_equals_p, std::uint64_t f, std::uint64_t h01,
                           std::uint64_t dim_v_br_xsbar);

/// dim V_l Br(X̄)^{G_K} = r + dim V_l Br(special fiber), l ≠ p.
std::uint64_t corank_relation(std::uint64_t r, std::uint64_t dim_vl_br_xs);

/// Br of an abelian scheme or K3 family over ℤ_p: finite when r = 0, else
/// (ℚ/ℤ') ⊕ (ℚ/ℤ)^{r-1} ⊕ finite.
GroupDescriptor k3_abelian_structure(std::uint64_t r, Prime p);

struct SimpleSurface {};
struct ProductSurface {
  BigInt count1;
  BigInt count2;
  Prime p = 2;
};
using SurfaceShape = std::variant<SimpleSurface, ProductSurface>;

/// Picard rank of an ordinary abelian surface over 𝔽_p of the given shape.
std::uint64_t abelian_surface_picard_rank(const SurfaceShape& shape);

/// Jacobian of y² = x⁵ − 1 over ℤ_p with p ≡ −1 mod 5.
StructureReport jacobian_example_report(Prime p);

StructureReport invariant_report(const BrauerInvariants& inv);

}  // namespace bk::brauer
