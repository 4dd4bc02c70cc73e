#include "brauerkit/prosys.hpp"
#include "generators.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace bk;
using namespace bk::prosys;
using groupclass::ExtCardinal;
using groupclass::PrimeMultiplicity;

namespace bk::groupclass {
void PrintTo(const GroupDescriptor& g, std::ostream* os) { *os << to_string(g); }
}  // namespace bk::groupclass

namespace {

InverseSystemSpec diagonal_system(std::vector<std::vector<BigInt>> tail) {
  InverseSystemSpec spec;
  spec.rank = tail.front().size();
  spec.tail = std::move(tail);
  return spec;
}

IntMatrix mat2(long a, long b, long c, long d) {
  IntMatrix M(2, 2);
  M << a, b, c, d;
  return M;
}

bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

std::size_t non_unit_coordinates(const InverseSystemSpec& spec) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < spec.rank; ++j) {
    const auto c = spec.coordinate(j);
    n += !std::all_of(c.begin(), c.end(), is_unit);
  }
  return n;
}

// n_l counted directly: a non-unit coordinate contributes ℚ_l/ℤ_l exactly
// when l divides none of its period entries.
std::size_t pruefer_count(const InverseSystemSpec& spec, Prime l) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < spec.rank; ++j) {
    const auto c = spec.coordinate(j);
    if (std::all_of(c.begin(), c.end(), is_unit)) continue;
    n += std::none_of(c.begin(), c.end(), [&](const BigInt& a) { return a % l == 0; });
  }
  return n;
}

const std::vector<Prime> kProbePrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

TEST(ValidateSystem, Examples) {
  auto a = validate_system(diagonal_system({{7}}));
  EXPECT_EQ(a.single_prime, std::optional<Prime>(7));
  EXPECT_EQ(a.tail_cokernels.front(), GroupStructure::cyclic(7));

  InverseSystemSpec b = diagonal_system({{1, 1}});
  b.prefix = {mat2(1, 0, 0, 0)};
  try {
    validate_system(b);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "zero_determinant");
  }

  auto c = validate_system(diagonal_system({{1, 6}}));
  EXPECT_EQ(c.tail_cokernels.front(), GroupStructure::cyclic(6));
  EXPECT_FALSE(c.single_prime.has_value());

  EXPECT_THROW(validate_system(diagonal_system({{1, 0}})), DomainError);
  InverseSystemSpec d = diagonal_system({{1, 2}});
  d.tail.push_back({1});
  EXPECT_THROW(validate_system(d), DomainError);
}

TEST(LimStructure, Examples) {
  EXPECT_EQ(lim_structure(validate_system(diagonal_system({{1, 1}}))), GroupStructure::from_cyclic(2, {}));
  EXPECT_TRUE(lim_structure(validate_system(diagonal_system({{5}}))).is_trivial());
  EXPECT_EQ(lim_structure(validate_system(diagonal_system({{1, 6}}))), GroupStructure::from_cyclic(1, {}));
}

TEST(Lim1Classify, Examples) {
  for (auto strategy : {Lim1Strategy::recursive, Lim1Strategy::ext_oracle}) {
    auto a = lim1_classify(validate_system(diagonal_system({{3}})), strategy);
    EXPECT_EQ(a.rational, ExtCardinal::continuum());
    EXPECT_EQ(a.pruefer, PrimeMultiplicity(1, {{3, 0}}));
    EXPECT_TRUE(lim1_classify(validate_system(diagonal_system({{1, 1}})), strategy).is_zero());
    auto c = lim1_classify(validate_system(diagonal_system({{1, 6}})), strategy);
    EXPECT_EQ(c.rational, ExtCardinal::continuum());
    EXPECT_EQ(c.pruefer, PrimeMultiplicity(1, {{2, 0}, {3, 0}}));
  }
}

TEST(MittagLeffler, Examples) {
  EXPECT_TRUE(is_mittag_leffler(validate_system(diagonal_system({{1, -1}}))));
  EXPECT_FALSE(is_mittag_leffler(validate_system(diagonal_system({{2}}))));
  InverseSystemSpec s = diagonal_system({{1, 1}});
  s.prefix = {mat2(2, 1, 0, 3)};
  EXPECT_TRUE(is_mittag_leffler(validate_system(s)));
}

TEST(DropPrefix, Examples) {
  InverseSystemSpec s = diagonal_system({{2, 3}});
  s.prefix = {mat2(2, 1, 0, 3), mat2(1, 1, 0, 5)};
  EXPECT_EQ(drop_prefix(s, 0).prefix.size(), 2u);
  EXPECT_TRUE(drop_prefix(s, 2).prefix.empty());
  auto one = drop_prefix(s, 1);
  ASSERT_EQ(one.prefix.size(), 1u);
  EXPECT_EQ(one.prefix.front(), mat2(1, 1, 0, 5));
  EXPECT_EQ(lim1_classify(validate_system(one)), lim1_classify(validate_system(s)));
  try {
    drop_prefix(s, 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "prefix_too_short");
  }
}

TEST(Lim1Classify, RandomSystemsSatisfyStructureTheorem) {
  std::mt19937_64 rng(test::kSeed + 30);
  for (int trial = 0; trial < 500; ++trial) {
    const auto spec = test::random_system(rng);
    const auto sys = validate_system(spec);
    const auto rec = lim1_classify(sys, Lim1Strategy::recursive);
    ASSERT_EQ(rec, lim1_classify(sys, Lim1Strategy::ext_oracle));
    ASSERT_TRUE(rec.rational.is_zero() || rec.rational == ExtCardinal::continuum());
    ASSERT_EQ(rec.is_zero(), rec.rational.is_zero());
    const ExtCardinal r(spec.rank);
    ASSERT_FALSE(r < rec.pruefer.default_value());
    for (const auto& [p, n] : rec.pruefer.exceptions()) ASSERT_FALSE(r < n);
    for (Prime l : kProbePrimes) {
      ASSERT_EQ(rec.pruefer.at(l), ExtCardinal(pruefer_count(spec, l))) << "l=" << l;
    }
    ASSERT_EQ(is_mittag_leffler(sys), rec.is_zero());
    ASSERT_EQ(lim_structure(sys).free_rank + non_unit_coordinates(spec), spec.rank);
    ASSERT_TRUE(lim_structure(sys).invariant_factors.empty());
    for (std::size_t k = 0; k <= spec.prefix.size(); ++k) {
      ASSERT_EQ(lim1_classify(validate_system(drop_prefix(spec, k))), rec);
    }
  }
}

TEST(Lim1Classify, SinglePrimeSystems) {
  std::mt19937_64 rng(test::kSeed + 31);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p = test::pick_prime(rng);
    const auto sys = validate_system(test::random_p_system(rng, p));
    ASSERT_EQ(sys.single_prime, std::optional<Prime>(p));
    const auto out = lim1_classify(sys);
    if (out.is_zero()) continue;
    const auto n_l = out.pruefer.default_value();
    ASSERT_TRUE(out.pruefer.at(p) < n_l);
    for (Prime l : kProbePrimes) {
      if (l != p) ASSERT_EQ(out.pruefer.at(l), n_l);
    }
  }
}
