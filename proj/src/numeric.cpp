#include "brauerkit/numeric.hpp"

#include <array>
#include <cctype>

namespace bk {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw DomainError("not_prime",
                      std::string(what) + " = " + std::to_string(p) +
                          " is not prime",
                      "prime parameter");
  }
}

std::map<Prime, unsigned> factorize(const BigInt& n) {
  if (n == 0) throw DomainError("zero", "cannot factor zero");
  BigInt m = abs(n);
  std::map<Prime, unsigned> out;
  for (std::uint64_t q = 2; q <= 1000000; q += (q == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (BigInt(q) * q > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++out[q];
    }
  }
  if (m != 1) {
    if (!m.fits_ulong_p() || !is_prime(static_cast<std::uint64_t>(m.get_ui()))) {
      throw DomainError("unsupported",
                        "integer " + n.get_str() +
                            " has a cofactor too large to factor");
    }
    ++out[static_cast<Prime>(m.get_ui())];
  }
  return out;
}

unsigned valuation(const BigInt& n, Prime p) {
  if (n == 0) throw DomainError("zero", "valuation of zero is infinite");
  BigInt m = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& q, Prime p) {
  return static_cast<long>(valuation(BigInt(q.get_num()), p)) -
         static_cast<long>(valuation(BigInt(q.get_den()), p));
}

BigInt ipow(Prime p, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

BigInt parse_bigint(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("empty integer: '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("malformed integer: '" + s + "'");
    }
  }
  return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace bk
