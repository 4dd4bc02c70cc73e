#include "brauerkit/brauer.hpp"
#include "brauerkit/submodq.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bk;
using namespace bk::brauer;
using groupclass::ExtCardinal;
using groupclass::PrimeMultiplicity;

namespace bk::groupclass {
void PrintTo(const GroupDescriptor& g, std::ostream* os) { *os << to_string(g); }
}  // namespace bk::groupclass

namespace {

// ℚ/ℤ' ⊕ (ℚ/ℤ)^{r-1} ⊕ P, built by hand.
GroupDescriptor expected_kernel(std::uint64_t s, std::uint64_t t, Prime p) {
  GroupDescriptor g;
  if (s + t > 0) g.pruefer = PrimeMultiplicity(s + t, {{p, t}});
  g.finite_p_placeholders = {p};
  return g;
}

std::string error_code(const BrauerInvariants& inv) {
  try {
    invariant_report(inv);
  } catch (const DomainError& e) {
    return e.code();
  }
  return "none";
}

BrauerInvariants jacobian_invariants(Prime p) {
  BrauerInvariants inv;
  inv.p = p;
  inv.f = 1;
  inv.h01 = 2;
  inv.h02 = 1;
  inv.rho_X = 1;
  inv.rho_Xs = 4;
  inv.I = 1;
  inv.s = 1;
  return inv;
}

bool cites(const StructureReport& r, const std::string& slug) {
  return std::find(r.citations.begin(), r.citations.end(), slug) != r.citations.end();
}

}  // namespace

TEST(ComputeR, Examples) {
  EXPECT_EQ(compute_r(4, 1, 1), 3u);
  EXPECT_EQ(compute_r(7, 7, 1), 0u);
  EXPECT_EQ(compute_r(2, 1, 2), 0u);
  EXPECT_THROW(compute_r(1, 3, 1), DomainError);
  EXPECT_THROW(compute_r(4, 1, 0), DomainError);
}

TEST(Coranks, Examples) {
  EXPECT_EQ(corank_vl_br(false, 3, 5, 0), 1u);
  EXPECT_EQ(corank_vl_br(true, 1, 2, 0), 3u);
  EXPECT_EQ(corank_vl_br(true, 2, 1, 4), 7u);
  EXPECT_EQ(corank_relation(3, 0), 3u);
  EXPECT_EQ(corank_relation(0, 0), 0u);
  EXPECT_EQ(corank_relation(2, 1), 3u);
  for (std::uint64_t f = 1; f <= 3; ++f) {
    for (std::uint64_t h = 0; h <= 3; ++h) {
      for (std::uint64_t dl = 0; dl <= 3; ++dl) {
        for (std::uint64_t dp = 0; dp <= 3; ++dp) {
          EXPECT_EQ(corank_vl_br(true, f, h, dp) - corank_vl_br(false, f, h, dl),
                    f * h + dp - dl);
        }
      }
    }
  }
}

TEST(K3Abelian, Examples) {
  EXPECT_EQ(k3_abelian_structure(0, 3), expected_kernel(0, 0, 3));
  EXPECT_TRUE(k3_abelian_structure(0, 3).is_finite());
  EXPECT_EQ(k3_abelian_structure(1, 3), expected_kernel(1, 0, 3));
  EXPECT_EQ(k3_abelian_structure(3, 19), expected_kernel(1, 2, 19));
  for (std::uint64_t r = 0; r <= 10; ++r) {
    EXPECT_EQ(k3_abelian_structure(r, 5),
              submodq::brauer_kernel_structure(std::min<std::uint64_t>(1, r), r > 0 ? r - 1 : 0, 5));
  }
}

TEST(AbelianSurfacePicardRank, Examples) {
  EXPECT_EQ(abelian_surface_picard_rank(SimpleSurface{}), 2u);
  EXPECT_EQ(abelian_surface_picard_rank(ProductSurface{10, 10, 11}), 4u);
  EXPECT_EQ(abelian_surface_picard_rank(ProductSurface{11, 13, 11}), 2u);
  try {
    abelian_surface_picard_rank(ProductSurface{30, 12, 11});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "hasse_bound");
  }
}

TEST(JacobianExample, MatchesWorkedValues) {
  for (Prime p : {19, 29, 59}) {
    auto rep = jacobian_example_report(p);
    EXPECT_EQ(rep.r, 3u);
    EXPECT_EQ(rep.s, std::optional<std::uint64_t>(1));
    EXPECT_EQ(rep.t, std::optional<std::uint64_t>(2));
    ASSERT_TRUE(rep.kernel.has_value());
    EXPECT_EQ(*rep.kernel, expected_kernel(1, 2, p));
    EXPECT_EQ(rep.pic_rank, 1u);
    EXPECT_FALSE(rep.conditional);
    EXPECT_TRUE(cites(rep, "jacobian-of-y2-x5-minus-1"));
  }
  try {
    jacobian_example_report(7);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "p_not_minus_one_mod_5");
  }
  EXPECT_THROW(jacobian_example_report(5), DomainError);
}

TEST(InvariantReport, Examples) {
  auto a = invariant_report(jacobian_invariants(19));
  EXPECT_EQ(a.r, 3u);
  EXPECT_EQ(a.t, std::optional<std::uint64_t>(2));
  EXPECT_EQ(*a.kernel, expected_kernel(1, 2, 19));
  EXPECT_EQ(a.pic_zp_rank, std::optional<std::uint64_t>(2));
  EXPECT_EQ(a.lim_kernel_rank_bound, std::optional<std::uint64_t>(1));
  EXPECT_TRUE(a.conditional);

  BrauerInvariants b;
  b.p = 3;
  b.h02 = 0;
  b.rho_X = 5;
  b.rho_Xs = 5;
  auto rb = invariant_report(b);
  EXPECT_EQ(rb.r, 0u);
  EXPECT_TRUE(rb.kernel->is_finite());

  BrauerInvariants c;
  c.p = 7;
  c.h01 = 0;
  c.h02 = 1;
  c.rho_X = 1;
  c.rho_Xs = 2;
  c.s = 1;
  auto rc = invariant_report(c);
  EXPECT_EQ(rc.r, 1u);
  EXPECT_EQ(rc.t, std::optional<std::uint64_t>(0));
  EXPECT_EQ(*rc.kernel, expected_kernel(1, 0, 7));
}

TEST(InvariantReport, MinimalInputWithoutHodgeData) {
  BrauerInvariants inv;
  inv.p = 19;
  inv.rho_X = 1;
  inv.rho_Xs = 4;
  inv.s = 1;
  auto rep = invariant_report(inv);
  EXPECT_EQ(rep.r, 3u);
  EXPECT_EQ(*rep.kernel, expected_kernel(1, 2, 19));
  EXPECT_FALSE(rep.pic_zp_rank.has_value());
  EXPECT_FALSE(rep.lim_kernel_rank_bound.has_value());
}

TEST(InvariantReport, ConstraintViolations) {
  auto inv = jacobian_invariants(19);
  inv.h02 = 0;
  EXPECT_EQ(error_code(inv), "h02_zero_with_positive_r");
  inv = jacobian_invariants(19);
  inv.s = 4;
  EXPECT_EQ(error_code(inv), "s_exceeds_r");
  inv.s = 0;
  EXPECT_EQ(error_code(inv), "t_without_s");
  inv.s = 2;
  EXPECT_EQ(error_code(inv), "s_exceeds_hodge_bound");
  inv = jacobian_invariants(19);
  inv.f = 0;
  EXPECT_EQ(error_code(inv), "invalid_degree");
  inv = jacobian_invariants(19);
  inv.h01.reset();
  inv.dim_vp_br_xsbar = 0;
  EXPECT_EQ(error_code(inv), "missing_h01");
}

TEST(InvariantReport, CandidatesWhenSAbsent) {
  auto inv = jacobian_invariants(19);
  inv.s.reset();
  auto one = invariant_report(inv);
  EXPECT_EQ(one.s, std::optional<std::uint64_t>(1));
  inv.h02 = 3;
  auto many = invariant_report(inv);
  EXPECT_FALSE(many.s.has_value());
  EXPECT_FALSE(many.kernel.has_value());
  EXPECT_EQ(many.st_candidates, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                                    {1, 2}, {2, 1}, {3, 0}}));
}

TEST(InvariantReport, ConditionalFlag) {
  auto inv = jacobian_invariants(19);
  EXPECT_TRUE(invariant_report(inv).conditional);
  inv.finiteness_proven = true;
  EXPECT_FALSE(invariant_report(inv).conditional);
  inv.finiteness_proven = false;
  inv.dim_vl_br_xs = 2;
  auto rep = invariant_report(inv);
  EXPECT_FALSE(rep.conditional);
  EXPECT_EQ(rep.coranks.back().value, 5u);
}

TEST(InvariantReport, CorankInvariantsOverGrid) {
  for (std::uint64_t rho_X = 0; rho_X <= 3; ++rho_X) {
    for (std::uint64_t extra = 0; extra <= 5; ++extra) {
      for (std::uint64_t I = 1; I <= 2; ++I) {
        const std::uint64_t rho_Xs = rho_X + extra + I - 1;
        const std::uint64_t r = extra;
        for (std::uint64_t s = 0; s <= r; ++s) {
          BrauerInvariants inv;
          inv.p = 5;
          inv.h02 = 6;
          inv.rho_X = rho_X;
          inv.rho_Xs = rho_Xs;
          inv.I = I;
          inv.s = s;
          if (r > 0 && s == 0) {
            EXPECT_EQ(error_code(inv), "t_without_s");
            continue;
          }
          auto rep = invariant_report(inv);
          ASSERT_EQ(rep.r, r);
          ASSERT_EQ(*rep.s + *rep.t, r);
          ASSERT_EQ(*rep.s == 0, r == 0);
          ASSERT_EQ(rep.kernel->pruefer.at(2), ExtCardinal(r));
          ASSERT_EQ(rep.kernel->pruefer.at(5), ExtCardinal(*rep.t));
          if (r > 0) ASSERT_TRUE(rep.kernel->pruefer.at(5) < rep.kernel->pruefer.at(2));
        }
      }
    }
  }
}
