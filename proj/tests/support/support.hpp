#pragma once

#include "brauerkit/numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bk::test {

inline constexpr std::uint64_t kSeed = 20240917;

inline IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) M(i, j) = entry(rng);
  }
  return M;
}

/// Laplace expansion; only for the small matrices used as oracles.
inline BigInt laplace_det(const IntMatrix& M) {
  const auto n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  BigInt total = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (M(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      for (Eigen::Index j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(i - 1, k++) = M(i, j);
      }
    }
    BigInt term = M(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Invariant factors from determinantal divisors d_k = gcd of k×k minors.
inline std::vector<BigInt> determinantal_invariants(const IntMatrix& M) {
  const int n = static_cast<int>(std::min(M.rows(), M.cols()));
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt d = 0;
    for (const auto& rows : subsets(static_cast<int>(M.rows()), k)) {
      for (const auto& cols : subsets(static_cast<int>(M.cols()), k)) {
        IntMatrix minor(k, k);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) minor(i, j) = M(rows[i], cols[j]);
        }
        d = gcd(d, laplace_det(minor));
      }
    }
    if (d == 0) {
      for (; k <= n; ++k) out.push_back(0);
      break;
    }
    out.push_back(d / previous);
    previous = d;
  }
  return out;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int steps = 8) {
  IntMatrix U = IntMatrix::Identity(n, n);
  if (n < 2) return U;
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-3, 3);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    U.row(i) += BigInt(coef(rng)) * U.row(j);
  }
  return U;
}

}  // namespace bk::test
