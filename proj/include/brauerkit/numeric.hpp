#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 400,
    MulCost = 400
  };
};

}  // namespace Eigen

namespace bk {

using BigInt = mpz_class;
using Rational = mpq_class;
using Prime = std::uint64_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Raised when an input violates a mathematical precondition. `code` is a
/// stable machine-readable identifier, `citation` names the statement whose
/// hypothesis was violated.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message,
              std::string citation = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        citation_(std::move(citation)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& citation() const noexcept { return citation_; }

 private:
  std::string code_;
  std::string citation_;
};

// Scalar helpers shared by the templated matrix routines.
inline BigInt scalar_abs(const BigInt& x) { return abs(x); }
inline std::int64_t scalar_abs(std::int64_t x) { return x < 0 ? -x : x; }
inline BigInt scalar_gcd(const BigInt& a, const BigInt& b) { return gcd(a, b); }
inline std::int64_t scalar_gcd(std::int64_t a, std::int64_t b) {
  a = scalar_abs(a);
  b = scalar_abs(b);
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);
void require_prime(std::uint64_t p, const char* what = "p");

/// Prime factorization of |n| by trial division; n must be nonzero.
/// Throws DomainError("unsupported") when a cofactor above 10^18 resists
/// trial division up to 10^6.
std::map<Prime, unsigned> factorize(const BigInt& n);

/// v_p(n) for nonzero n.
unsigned valuation(const BigInt& n, Prime p);
/// v_p(q) for nonzero rational q (may be negative).
long valuation(const Rational& q, Prime p);

BigInt ipow(Prime p, unsigned e);

/// Parses a decimal integer string (optional sign); throws std::invalid_argument.
BigInt parse_bigint(const std::string& s);
/// Parses "num/den" or an integer string; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bk
