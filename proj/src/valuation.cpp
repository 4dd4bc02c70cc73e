#include "brauerkit/valuation.hpp"

#include <vector>

namespace bk::pval {

namespace {

constexpr const char* kBinomialCitation = "v_p(C(p^{n+s}, u)) > n for 0 < u < p^s";
constexpr const char* kUnitCitation = "(1+x)^{p^{n+s}} = 1 for x ∈ pA, p^s ≥ n";

void validate_ring(const TruncatedPolyRing& ring) {
  require_prime(ring.p, "p");
  if (ring.n == 0 || ring.N == 0) {
    throw DomainError("invalid_ring", "ring needs n ≥ 1 and N ≥ 1", kUnitCitation);
  }
}

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b, const BigInt& modulus) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (auto& x : c) x = x % modulus;
  return c;
}

}  // namespace

BigInt vp_factorial(Prime p, const BigInt& n) {
  require_prime(p, "p");
  if (n < 0) throw DomainError("negative_argument", "n must be nonnegative");
  BigInt total = 0;
  const BigInt base = BigInt(static_cast<unsigned long>(p));
  for (BigInt q = n / base; q > 0; q /= base) total += q;
  return total;
}

BigInt vp_binomial(Prime p, const BigInt& z, const BigInt& u) {
  if (u < 0 || u > z) {
    throw DomainError("u_exceeds_z", "binomial needs 0 ≤ u ≤ z");
  }
  return vp_factorial(p, z) - vp_factorial(p, u) - vp_factorial(p, z - u);
}

bool check_binomial_lemma(Prime p, unsigned n, unsigned s) {
  require_prime(p, "p");
  if (n == 0 || s == 0) {
    throw DomainError("invalid_exponent", "n and s must be positive", kBinomialCitation);
  }
  const BigInt z = ipow(p, n + s);
  const BigInt bound = ipow(p, s);
  for (BigInt u = 1; u < bound; ++u) {
    if (vp_binomial(p, z, u) <= n) return false;
  }
  return true;
}

bool unit_power_is_one(const TruncatedPolyRing& ring, unsigned k) {
  validate_ring(ring);
  const BigInt modulus = ipow(ring.p, ring.n);
  Poly x(ring.N + 1, 0);
  x[0] = 1;
  x[1] = BigInt(static_cast<unsigned long>(ring.p)) % modulus;
  // Raising to p^k = k successive p-th powers.
  for (unsigned step = 0; step < k; ++step) {
    Poly acc(ring.N + 1, 0);
    acc[0] = 1;
    for (Prime e = 0; e < ring.p; ++e) acc = multiply(acc, x, modulus);
    x = std::move(acc);
  }
  if (x[0] != 1 % modulus) return false;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

bool unit_power_check(const TruncatedPolyRing& ring, unsigned s) {
  validate_ring(ring);
  if (ipow(ring.p, s) < ring.n) {
    throw DomainError("precondition", "need p^s ≥ n", kUnitCitation);
  }
  return unit_power_is_one(ring, ring.n + s);
}

}  // namespace bk::pval
