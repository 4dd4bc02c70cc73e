#include "brauerkit/submodq.hpp"

#include <algorithm>

namespace bk::submodq {

using groupclass::ExtCardinal;
using groupclass::PrimeMultiplicity;

namespace {

constexpr const char* kSubmoduleCitation =
    "ℤ_(p)-submodule of ℚ^r spanning ℚ^r is an extension of ℚ^t by ℤ_(p)^s";
constexpr const char* kKernelCitation =
    "kernel of reduction is (ℚ/ℤ')^s ⊕ (ℚ/ℤ)^t ⊕ P; t > 0 forces s > 0";

struct Generator {
  RatVector v;
  Tag tag;
};

// Minimal v_p over the nonzero last coordinates of local generators.
std::size_t pick_local(const std::vector<Generator>& gens, Eigen::Index last, Prime p) {
  std::size_t best = gens.size();
  long best_v = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].tag != Tag::local || gens[i].v(last) == 0) continue;
    long v = valuation(gens[i].v(last), p);
    if (best == gens.size() || v < best_v) {
      best = i;
      best_v = v;
    }
  }
  return best;
}

}  // namespace

std::size_t rational_rank(RatMatrix M) {
  std::size_t rank = 0;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  for (Eigen::Index c = 0; c < cols && static_cast<Eigen::Index>(rank) < rows; ++c) {
    const auto top = static_cast<Eigen::Index>(rank);
    Eigen::Index pivot = top;
    while (pivot < rows && M(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    M.row(top).swap(M.row(pivot));
    for (Eigen::Index i = top + 1; i < rows; ++i) {
      if (M(i, c) == 0) continue;
      Rational factor = M(i, c) / M(top, c);
      for (Eigen::Index k = c; k < cols; ++k) M(i, k) -= factor * M(top, k);
    }
    ++rank;
  }
  return rank;
}

STPair classify_submodule(const TaggedGenerators& input) {
  if (input.r == 0) {
    throw DomainError("invalid_rank", "ambient rank must be at least 1", kSubmoduleCitation);
  }
  require_prime(input.p, "p");
  const auto r = static_cast<Eigen::Index>(input.r);
  std::vector<Generator> gens;
  for (const auto& [v, tag] : input.generators) {
    if (v.size() != r) {
      throw DomainError("size_mismatch",
                        "generator has " + std::to_string(v.size()) +
                            " coordinates, expected " + std::to_string(r),
                        kSubmoduleCitation);
    }
    if (v.isZero()) {
      throw DomainError("zero_generator", "generators must be nonzero", kSubmoduleCitation);
    }
    gens.push_back({v, tag});
  }
  RatMatrix all(static_cast<Eigen::Index>(gens.size()), r);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    all.row(static_cast<Eigen::Index>(i)) = gens[i].v.transpose();
  }
  if (gens.empty() || rational_rank(all) != input.r) {
    throw DomainError("span_deficient", "generators do not span ℚ^r over ℚ",
                      kSubmoduleCitation);
  }

  STPair out;
  for (Eigen::Index dim = r; dim > 0; --dim) {
    const Eigen::Index last = dim - 1;
    auto d = std::find_if(gens.begin(), gens.end(), [last](const Generator& g) {
      return g.tag == Tag::divisible && g.v(last) != 0;
    });
    std::size_t pivot;
    if (d != gens.end()) {
      // A ℚ-line maps onto the image; split it off with rational coefficients.
      ++out.t;
      pivot = static_cast<std::size_t>(d - gens.begin());
    } else {
      pivot = pick_local(gens, last, input.p);
      if (pivot == gens.size()) {
        throw DomainError("span_deficient", "projection image is zero", kSubmoduleCitation);
      }
      // The image is ℤ_(p)·p^v; the minimal-valuation generator divides the
      // others with ℤ_(p) coefficients.
      ++out.s;
    }
    const RatVector v0 = gens[pivot].v / gens[pivot].v(last);
    std::vector<Generator> next;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == pivot) continue;
      RatVector w = gens[i].v - gens[i].v(last) * v0;
      RatVector head = w.head(last);
      if (!head.isZero()) next.push_back({head, gens[i].tag});
    }
    gens = std::move(next);
  }
  return out;
}

H2kDescription h2k_structure(std::uint64_t r, std::uint64_t s) {
  if (s > r) {
    throw DomainError("s_exceeds_r", "s = " + std::to_string(s) + " exceeds r = " +
                                          std::to_string(r),
                      kKernelCitation);
  }
  H2kDescription out;
  out.r = r;
  out.s = s;
  out.t = r - s;
  if (r == 0) {
    out.torsion_free_shape = "0";
  } else if (out.t == 0) {
    out.torsion_free_shape = "ℤ_(p)^" + std::to_string(s);
  } else if (s == 0) {
    out.torsion_free_shape = "ℚ^" + std::to_string(out.t);
  } else {
    out.torsion_free_shape = "extension of ℚ^" + std::to_string(out.t) + " by ℤ_(p)^" +
                             std::to_string(s);
  }
  return out;
}

GroupDescriptor brauer_kernel_structure(std::uint64_t s, std::uint64_t t, Prime p) {
  require_prime(p, "p");
  if (s == 0 && t > 0) {
    throw DomainError("t_without_s", "t > 0 requires s > 0", kKernelCitation);
  }
  GroupDescriptor g;
  g.pruefer = PrimeMultiplicity(s + t, {{p, ExtCardinal(t)}});
  g.finite_p_placeholders.insert(p);
  g.normalize();
  return g;
}

}  // namespace bk::submodq
