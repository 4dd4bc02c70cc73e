#pragma once

// Legendre's formula, p-adic valuations of binomial coefficients, and the
// unit-torsion identity (1 + p·y)^{p^{n+s}} = 1 in ℤ/pⁿ[y]/(y^{N+1}).

#include "brauerkit/numeric.hpp"

#include <cstdint>

namespace bk::pval {

/// v_p(n!) = Σ_{i≥1} ⌊n/pⁱ⌋.
BigInt vp_factorial(Prime p, const BigInt& n);

/// v_p(C(z, u)) via Legendre.
BigInt vp_binomial(Prime p, const BigInt& z, const BigInt& u);

/// v_p(C(p^{n+s}, u)) > n for every 0 < u < p^s.
bool check_binomial_lemma(Prime p, unsigned n, unsigned s);

/// ℤ/pⁿ[y] truncated above degree N.
struct TruncatedPolyRing {
  Prime p = 2;
  unsigned n = 1;
  unsigned N = 1;
};

/// (1 + p·y)^{p^k} == 1 in the ring. No precondition on k.
bool unit_power_is_one(const TruncatedPolyRing& ring, unsigned k);

/// unit_power_is_one at k = n + s; requires p^s ≥ n.
bool unit_power_check(const TruncatedPolyRing& ring, unsigned s);

}  // namespace bk::pval
