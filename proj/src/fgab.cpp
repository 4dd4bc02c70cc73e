#include "brauerkit/fgab.hpp"

namespace bk::fgab {

GroupStructure GroupStructure::from_cyclic(std::uint64_t free_rank,
                                           std::vector<BigInt> moduli) {
  GroupStructure g;
  g.free_rank = free_rank;
  std::vector<BigInt> finite;
  for (BigInt& m : moduli) {
    m = abs(m);
    if (m == 0) {
      ++g.free_rank;
    } else if (m != 1) {
      finite.push_back(std::move(m));
    }
  }
  // Pairwise (gcd, lcm) replacement turns any list into a divisibility chain.
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      BigInt d = gcd(finite[i], finite[j]);
      BigInt l = lcm(finite[i], finite[j]);
      finite[i] = std::move(d);
      finite[j] = std::move(l);
    }
  }
  for (BigInt& m : finite) {
    if (m != 1) g.invariant_factors.push_back(std::move(m));
  }
  return g;
}

BigInt GroupStructure::torsion_order() const {
  BigInt n = 1;
  for (const BigInt& d : invariant_factors) n *= d;
  return n;
}

bool operator<(const GroupStructure& a, const GroupStructure& b) {
  if (a.free_rank != b.free_rank) return a.free_rank < b.free_rank;
  return std::lexicographical_compare(
      a.invariant_factors.begin(), a.invariant_factors.end(),
      b.invariant_factors.begin(), b.invariant_factors.end(),
      [](const BigInt& x, const BigInt& y) { return cmp(x, y) < 0; });
}

GroupPresentation::GroupPresentation(std::size_t n, IntMatrix rel)
    : generators(n), relations(std::move(rel)) {
  if (static_cast<std::size_t>(relations.cols()) != generators) {
    if (relations.rows() == 0) {
      relations.resize(0, static_cast<Eigen::Index>(generators));
    } else {
      throw DomainError("dimension_mismatch",
                        "relation matrix must have one column per generator");
    }
  }
}

GroupStructure cokernel_structure(const IntMatrix& M) {
  auto snf = smith_normal_form(M);
  std::vector<BigInt> moduli;
  for (Eigen::Index i = 0; i < snf.rank; ++i) moduli.push_back(snf.D(i, i));
  auto free = static_cast<std::uint64_t>(M.rows() - snf.rank);
  return GroupStructure::from_cyclic(free, std::move(moduli));
}

GroupStructure structure(const GroupPresentation& presentation) {
  return cokernel_structure(presentation.relations.transpose());
}

FiniteCoefficients finite_coefficients(const GroupStructure& A, const BigInt& m) {
  if (m <= 0) {
    throw DomainError("nonpositive_modulus",
                      "finite coefficients need m >= 1, got " + m.get_str(),
                      "coefficient sequence for A ⊗ ℤ/m");
  }
  std::vector<BigInt> quotient(A.free_rank, m);
  std::vector<BigInt> torsion;
  for (const BigInt& d : A.invariant_factors) {
    BigInt g = gcd(d, m);
    quotient.push_back(g);
    torsion.push_back(g);
  }
  return {GroupStructure::from_cyclic(0, std::move(quotient)),
          GroupStructure::from_cyclic(0, std::move(torsion))};
}

GroupStructure direct_sum(const GroupStructure& A, const GroupStructure& B) {
  std::vector<BigInt> moduli = A.invariant_factors;
  moduli.insert(moduli.end(), B.invariant_factors.begin(),
                B.invariant_factors.end());
  return GroupStructure::from_cyclic(A.free_rank + B.free_rank, std::move(moduli));
}

IntMatrix kernel_basis(const IntMatrix& M) {
  auto snf = smith_normal_form(M);
  return snf.V.rightCols(M.cols() - snf.rank);
}

bool check_exact_at(const IntMatrix& f, const IntMatrix& g) {
  if (g.cols() != f.rows()) {
    throw DomainError("dimension_mismatch",
                      "g ∘ f undefined: g has " + std::to_string(g.cols()) +
                          " columns, f has " + std::to_string(f.rows()) +
                          " rows");
  }
  auto snf = smith_normal_form(g);
  // Coordinates of im f in the basis given by the columns of V; the last
  // (b - rank g) of those columns span the saturated lattice ker g.
  IntMatrix coords = snf.V_inverse * f;
  const Eigen::Index k = snf.rank;
  if (!(coords.topRows(k).array() == 0).all()) return false;
  IntMatrix in_kernel = coords.bottomRows(f.rows() - k);
  return cokernel_structure(in_kernel).is_trivial();
}

}  // namespace bk::fgab
