#pragma once

// Finitely generated abelian groups: Smith normal form over the integers and
// the invariant-factor structure of cokernels.

#include "brauerkit/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bk::fgab {

/// U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
/// `V_inverse` is tracked alongside V so kernels and coordinates can be read
/// off without a separate inversion.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  Matrix<Scalar> V_inverse;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) {
      d.push_back(D(i, i));
    }
    return d;
  }
};

namespace detail {

template <typename Scalar>
bool find_pivot(const Matrix<Scalar>& A, Eigen::Index t, Eigen::Index& pi,
                Eigen::Index& pj) {
  bool found = false;
  Scalar best{};
  for (Eigen::Index j = t; j < A.cols(); ++j) {
    for (Eigen::Index i = t; i < A.rows(); ++i) {
      if (A(i, j) == 0) continue;
      Scalar a = scalar_abs(Scalar(A(i, j)));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace detail

/// Smith normal form by elementary operations, always pivoting on the
/// nonzero entry of least absolute value in the active block.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index m = M.rows();
  const Index n = M.cols();

  SmithForm<Scalar> out;
  Matrix<Scalar> A = M;
  Matrix<Scalar> U = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar> V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar> Vi = Matrix<Scalar>::Identity(n, n);

  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    Index pi = 0, pj = 0;
    if (!detail::find_pivot(A, t, pi, pj)) break;
    for (;;) {
      if (pi != t) {
        A.row(t).swap(A.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        A.col(t).swap(A.col(pj));
        V.col(t).swap(V.col(pj));
        Vi.row(t).swap(Vi.row(pj));
      }
      const Scalar pivot = A(t, t);
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        const Scalar q = Scalar(A(i, t) / pivot);
        if (q != 0) {
          A.row(i) -= q * A.row(t);
          U.row(i) -= q * U.row(t);
        }
        if (A(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        const Scalar q = Scalar(A(t, j) / pivot);
        if (q != 0) {
          A.col(j) -= q * A.col(t);
          V.col(j) -= q * V.col(t);
          Vi.row(t) += q * Vi.row(j);
        }
        if (A(t, j) != 0) clean = false;
      }
      if (clean) {
        // Pull a row whose entries the pivot does not divide into row t.
        bool divides = true;
        for (Index i = t + 1; i < m && divides; ++i) {
          for (Index j = t + 1; j < n; ++j) {
            if (A(i, j) % pivot != 0) {
              A.row(t) += A.row(i);
              U.row(t) += U.row(i);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      detail::find_pivot(A, t, pi, pj);
    }
    if (A(t, t) < 0) {
      A.col(t) = -A.col(t);
      V.col(t) = -V.col(t);
      Vi.row(t) = -Vi.row(t);
    }
  }

  out.U = std::move(U);
  out.D = std::move(A);
  out.V = std::move(V);
  out.V_inverse = std::move(Vi);
  out.rank = t;
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& M) {
  return smith_normal_form(M).rank;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (M.rows() != M.cols()) {
    throw DomainError("dimension_mismatch", "determinant of a non-square matrix");
  }
  const Index n = M.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> A = M;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (A(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      A.row(k).swap(A.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        A(i, j) = Scalar((A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev);
      }
    }
    prev = A(k, k);
  }
  return Scalar(sign * A(n - 1, n - 1));
}

/// ℤ^free_rank ⊕ ℤ/d_1 ⊕ ... ⊕ ℤ/d_k with 2 ≤ d_1 | d_2 | ... | d_k.
struct GroupStructure {
  std::uint64_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  /// Normalizes an arbitrary list of cyclic orders (0 means ℤ, 1 is dropped).
  static GroupStructure from_cyclic(std::uint64_t free_rank,
                                    std::vector<BigInt> moduli);
  static GroupStructure trivial() { return {}; }
  static GroupStructure cyclic(const BigInt& m) { return from_cyclic(0, {m}); }

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of the torsion subgroup.
  BigInt torsion_order() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

bool operator<(const GroupStructure& a, const GroupStructure& b);

/// Generators e_1..e_n subject to the rows of `relations`.
struct GroupPresentation {
  std::size_t generators = 0;
  IntMatrix relations;

  GroupPresentation(std::size_t n, IntMatrix rel);
};

/// ℤ^rows / im(M) for M viewed as a map ℤ^cols → ℤ^rows.
GroupStructure cokernel_structure(const IntMatrix& M);

GroupStructure structure(const GroupPresentation& presentation);

struct FiniteCoefficients {
  GroupStructure quotient;  // A / mA
  GroupStructure torsion;   // m-torsion of A
};

FiniteCoefficients finite_coefficients(const GroupStructure& A, const BigInt& m);

GroupStructure direct_sum(const GroupStructure& A, const GroupStructure& B);

/// For f: ℤ^a → ℤ^b (b×a) and g: ℤ^b → ℤ^c (c×b), decides im f = ker g.
bool check_exact_at(const IntMatrix& f, const IntMatrix& g);

/// Basis of ker(M) ⊆ ℤ^cols as the columns of the returned matrix.
IntMatrix kernel_basis(const IntMatrix& M);

}  // namespace bk::fgab
