#pragma once

#include "brauerkit/groupclass.hpp"
#include "brauerkit/prosys.hpp"
#include "brauerkit/submodq.hpp"

#include <algorithm>
#include <random>

namespace bk::test {

using groupclass::ExtCardinal;
using groupclass::GroupDescriptor;
using groupclass::PrimeMultiplicity;

inline const std::vector<Prime> kSmallPrimes = {2, 3, 5, 7, 11};

inline Prime pick_prime(std::mt19937_64& rng) {
  return kSmallPrimes[rng() % kSmallPrimes.size()];
}

/// One basic block with small finite multiplicity.
inline GroupDescriptor random_block(std::mt19937_64& rng, bool allow_continuum = true) {
  const std::uint64_t n = 1 + rng() % 2;
  switch (rng() % (allow_continuum ? 11 : 10)) {
    case 0:
      return GroupDescriptor::integers(n);
    case 1:
      return GroupDescriptor::cyclic_group(2 + rng() % 60);
    case 2:
      return GroupDescriptor::localized(pick_prime(rng), n);
    case 3: {
      std::vector<Prime> S{pick_prime(rng)};
      if (rng() % 2) S.push_back(pick_prime(rng));
      return GroupDescriptor::inverted_primes(S, n);
    }
    case 4:
      return GroupDescriptor::rationals(n);
    case 5:
      return GroupDescriptor::pruefer_group(pick_prime(rng), n);
    case 6:
      return GroupDescriptor::rationals_mod_integers(n);
    case 7:
      return GroupDescriptor::rationals_mod_integers_away_from(pick_prime(rng), n);
    case 8:
      return GroupDescriptor::padic_integers(pick_prime(rng), n);
    case 9:
      return GroupDescriptor::finite_p_group(pick_prime(rng));
    default:
      return GroupDescriptor::rationals(ExtCardinal::continuum());
  }
}

inline GroupDescriptor random_descriptor(std::mt19937_64& rng, int max_blocks = 3,
                                         bool allow_continuum = true) {
  GroupDescriptor g;
  const int blocks = static_cast<int>(rng() % (max_blocks + 1));
  for (int i = 0; i < blocks; ++i) g = direct_sum(g, random_block(rng, allow_continuum));
  return g;
}

/// Nonzero integer in [-bound, bound]; units appear often enough to produce
/// Mittag-Leffler coordinates.
inline BigInt random_multiplier(std::mt19937_64& rng, int bound) {
  if (rng() % 3 == 0) return (rng() % 2) ? 1 : -1;
  std::uniform_int_distribution<int> d(1, bound);
  int v = d(rng);
  return (rng() % 2) ? v : -v;
}

/// r ≤ 4, |entries| ≤ 30, prefix ≤ 3, period ≤ 3.
inline prosys::InverseSystemSpec random_system(std::mt19937_64& rng, std::size_t max_rank = 4) {
  prosys::InverseSystemSpec spec;
  spec.rank = 1 + rng() % max_rank;
  const auto r = static_cast<Eigen::Index>(spec.rank);
  const std::size_t prefix = rng() % 4, period = 1 + rng() % 3;
  std::uniform_int_distribution<int> entry(-30, 30);
  while (spec.prefix.size() < prefix) {
    IntMatrix M(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < r; ++j) M(i, j) = entry(rng);
    }
    if (fgab::determinant(M) != 0) spec.prefix.push_back(M);
  }
  // A coordinate is either a unit column or a mix of units and non-units.
  std::vector<bool> unit_coordinate(spec.rank);
  for (std::size_t j = 0; j < spec.rank; ++j) unit_coordinate[j] = rng() % 3 == 0;
  for (std::size_t k = 0; k < period; ++k) {
    std::vector<BigInt> diag(spec.rank);
    for (std::size_t j = 0; j < spec.rank; ++j) {
      diag[j] = unit_coordinate[j] ? BigInt((rng() % 2) ? 1 : -1) : random_multiplier(rng, 30);
    }
    spec.tail.push_back(std::move(diag));
  }
  return spec;
}

/// A single-prime system: every cokernel is a p-group.
inline prosys::InverseSystemSpec random_p_system(std::mt19937_64& rng, Prime p) {
  prosys::InverseSystemSpec spec;
  spec.rank = 1 + rng() % 4;
  const std::size_t period = 1 + rng() % 3;
  for (std::size_t k = 0; k < period; ++k) {
    std::vector<BigInt> diag(spec.rank);
    for (auto& d : diag) d = (rng() % 2) ? BigInt(ipow(p, static_cast<unsigned>(rng() % 3))) : BigInt(1);
    spec.tail.push_back(std::move(diag));
  }
  spec.tail[0][0] = p;  // at least one nontrivial cokernel
  return spec;
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RatMatrix random_invertible_rational(std::mt19937_64& rng, int r) {
  while (true) {
    RatMatrix B(r, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) B(i, j) = random_rational(rng, 5);
    }
    if (submodq::rational_rank(B) == static_cast<std::size_t>(r)) return B;
  }
}

/// Generators realizing type (s, t) in ℚ^{s+t}: the first t basis vectors of
/// a random basis are divisible, the rest local, plus redundant extras.
inline submodq::TaggedGenerators random_generators(std::mt19937_64& rng, Prime p,
                                                   std::size_t s, std::size_t t) {
  submodq::TaggedGenerators g;
  g.r = s + t;
  g.p = p;
  const int r = static_cast<int>(g.r);
  RatMatrix B = random_invertible_rational(rng, r);
  for (int i = 0; i < r; ++i) {
    g.generators.emplace_back(B.col(i), i < static_cast<int>(t) ? submodq::Tag::divisible
                                                                : submodq::Tag::local);
  }
  // Extra local generators inside the span: ℤ_(p)-combinations of local ones
  // divided by a unit, and rational multiples of divisible ones.
  const int extras = static_cast<int>(rng() % 3);
  for (int e = 0; e < extras; ++e) {
    RatVector v = RatVector::Zero(r);
    for (int i = 0; i < r; ++i) {
      BigInt c = static_cast<long>(rng() % 7) - 3;
      if (i < static_cast<int>(t)) {
        v += Rational(random_rational(rng)) * B.col(i);
      } else {
        v += Rational(c) * B.col(i);
      }
    }
    if (v.isZero()) continue;
    // Dividing by a prime-to-p integer stays inside the ℤ_(p)-span.
    BigInt unit = 1;
    for (Prime q : kSmallPrimes) {
      if (q != p && rng() % 2) unit *= q;
    }
    v /= Rational(unit);
    g.generators.emplace_back(v, submodq::Tag::local);
  }
  std::shuffle(g.generators.begin(), g.generators.end(), rng);
  return g;
}

}  // namespace bk::test
