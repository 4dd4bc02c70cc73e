#include "brauerkit/brauer.hpp"

#include <algorithm>

namespace bk::brauer {

namespace {

constexpr const char* kKernelRank = "kernel-of-reduction-structure";
constexpr const char* kPicard = "picard-group-rank-and-zp-rank";
constexpr const char* kFiniteRank = "kernel-finitely-generated-of-rank-r";
constexpr const char* kLimBound = "lim-brauer-rank-bound";
constexpr const char* kImageBeta = "s-is-dimension-of-image-of-beta";
constexpr const char* kCorank = "corank-of-brauer-group";
constexpr const char* kCorankRelation = "corank-relation-with-special-fiber";
constexpr const char* kK3Abelian = "abelian-and-k3-brauer-structure";
constexpr const char* kJacobian = "jacobian-of-y2-x5-minus-1";
constexpr const char* kPicardSurface = "abelian-surface-picard-rank";

constexpr const char* kArtin =
    "Artin: Br of the special fiber is finite (model independence of r, Br vs kernel)";

void add_kernel_coranks(StructureReport& report) {
  report.coranks.push_back({"l != p", "kernel corank", report.r});
  if (report.t) report.coranks.push_back({"p", "kernel corank", *report.t});
}

}  // namespace

std::uint64_t compute_r(std::uint64_t rho_Xs, std::uint64_t rho_X, std::uint64_t I) {
  if (I == 0) {
    throw DomainError("invalid_components", "special fiber needs I ≥ 1", kKernelRank);
  }
  if (rho_Xs + 1 < rho_X + I) {
    throw DomainError("negative_r",
                      "ρ_special − ρ_X − I + 1 is negative; inputs are inconsistent",
                      kKernelRank);
  }
  return rho_Xs + 1 - rho_X - I;
}

std::uint64_t corank_vl_br(bool l_equals_p, std::uint64_t f, std::uint64_t h01,
                           std::uint64_t dim_v_br_xsbar) {
  return 1 + dim_v_br_xsbar + (l_equals_p ? f * h01 : 0);
}

std::uint64_t corank_relation(std::uint64_t r, std::uint64_t dim_vl_br_xs) {
  return r + dim_vl_br_xs;
}

GroupDescriptor k3_abelian_structure(std::uint64_t r, Prime p) {
  return submodq::brauer_kernel_structure(std::min<std::uint64_t>(1, r),
                                          r == 0 ? 0 : r - 1, p);
}

std::uint64_t abelian_surface_picard_rank(const SurfaceShape& shape) {
  if (std::holds_alternative<SimpleSurface>(shape)) return 2;
  const auto& prod = std::get<ProductSurface>(shape);
  require_prime(prod.p, "p");
  // Hasse: |c − p − 1| ≤ 2√p ⇔ (c − p − 1)² ≤ 4p.
  const BigInt center = BigInt(static_cast<unsigned long>(prod.p)) + 1;
  const BigInt bound = 4 * BigInt(static_cast<unsigned long>(prod.p));
  for (const BigInt& c : {prod.count1, prod.count2}) {
    BigInt d = c - center;
    if (d * d > bound) {
      throw DomainError("hasse_bound", "point count " + c.get_str() +
                                           " is outside the Hasse interval",
                        kPicardSurface);
    }
  }
  return prod.count1 == prod.count2 ? 4 : 2;
}

StructureReport invariant_report(const BrauerInvariants& inv) {
  require_prime(inv.p, "p");
  if (inv.f == 0) throw DomainError("invalid_degree", "[K:ℚ_p] must be at least 1");
  StructureReport report;
  report.r = compute_r(inv.rho_Xs, inv.rho_X, inv.I);
  report.pic_rank = inv.rho_X;
  if (inv.h01) report.pic_zp_rank = inv.f * *inv.h01;
  if (inv.h02) report.lim_kernel_rank_bound = inv.f * *inv.h02;
  report.citations = {kKernelRank, kPicard, kFiniteRank, kLimBound, kImageBeta};

  const std::uint64_t s_max = report.lim_kernel_rank_bound.value_or(report.r);
  if (inv.h02 == 0u && report.r > 0) {
    throw DomainError("h02_zero_with_positive_r",
                      "H²(X,O_X) = 0 forces a finite kernel, but r = " +
                          std::to_string(report.r),
                      kImageBeta);
  }
  if (inv.s) {
    const std::uint64_t s = *inv.s;
    if (s > report.r) {
      throw DomainError("s_exceeds_r", "s = " + std::to_string(s) + " exceeds r = " +
                                           std::to_string(report.r),
                        kKernelRank);
    }
    if (report.r > 0 && s == 0) {
      throw DomainError("t_without_s", "r > 0 requires s > 0", kKernelRank);
    }
    if (s > s_max) {
      throw DomainError("s_exceeds_hodge_bound",
                        "s = " + std::to_string(s) + " exceeds f·h02 = " +
                            std::to_string(s_max),
                        kImageBeta);
    }
    report.s = s;
  } else if (report.r == 0) {
    report.s = 0;
  } else {
    for (std::uint64_t s = 1; s <= std::min(report.r, s_max); ++s) {
      report.st_candidates.emplace_back(s, report.r - s);
    }
    if (report.st_candidates.size() == 1) {
      report.s = report.st_candidates.front().first;
      report.notes.push_back(inv.h02 ? "s determined by 1 ≤ s ≤ min(r, f·h02)"
                                     : "s determined by 1 ≤ s ≤ r");
    } else {
      report.notes.push_back("s undetermined; supply s = dim of the image of beta");
    }
  }
  if (report.s) {
    report.t = report.r - *report.s;
    report.kernel = submodq::brauer_kernel_structure(*report.s, *report.t, inv.p);
  }
  add_kernel_coranks(report);

  if (inv.dim_vl_br_xsbar) {
    report.coranks.push_back({"l != p", "corank of Br(X)",
                              corank_vl_br(false, inv.f, 0, *inv.dim_vl_br_xsbar)});
    report.citations.push_back(kCorank);
  }
  if (inv.dim_vp_br_xsbar) {
    if (!inv.h01) {
      throw DomainError("missing_h01", "the p-corank of Br(X) needs h01", kCorank);
    }
    report.coranks.push_back({"p", "corank of Br(X)",
                              corank_vl_br(true, inv.f, *inv.h01, *inv.dim_vp_br_xsbar)});
    if (!inv.dim_vl_br_xsbar) report.citations.push_back(kCorank);
  }
  const std::uint64_t dim_xs = inv.dim_vl_br_xs.value_or(0);
  report.coranks.push_back({"l != p", "dim V_l Br(X̄)^{G_K}",
                            corank_relation(report.r, dim_xs)});
  report.citations.push_back(kCorankRelation);
  if (!inv.dim_vl_br_xs && !inv.finiteness_proven) {
    report.assumptions.push_back(kArtin);
    report.conditional = true;
  }
  if (inv.dim_vl_br_xsbar && *inv.dim_vl_br_xsbar != corank_relation(report.r, dim_xs)) {
    report.notes.push_back("supplied dim V_l Br(X̄)^{G_K} disagrees with r + dim V_l Br of the special fiber");
  }
  return report;
}

StructureReport jacobian_example_report(Prime p) {
  require_prime(p, "p");
  if (p % 5 != 4) {
    throw DomainError("p_not_minus_one_mod_5",
                      "p = " + std::to_string(p) + " is not ≡ −1 mod 5", kJacobian);
  }
  BrauerInvariants inv;
  inv.p = p;
  inv.f = 1;
  inv.h01 = 2;
  inv.h02 = 1;
  inv.rho_X = 1;
  inv.rho_Xs = 4;
  inv.I = 1;
  inv.s = 1;
  inv.finiteness_proven = true;
  StructureReport report = invariant_report(inv);
  report.citations.push_back(kK3Abelian);
  report.citations.push_back(kJacobian);
  report.notes.push_back("Br of an abelian scheme over ℤ_p agrees with the kernel up to a finite group");
  return report;
}

}  // namespace bk::brauer
