#include "brauerkit/prosys.hpp"

#include "brauerkit/rank1ext.hpp"

#include <algorithm>
#include <set>

namespace bk::prosys {

using groupclass::ExtCardinal;
using groupclass::PrimeMultiplicity;

namespace {

constexpr const char* kCitation =
    "inverse system of finitely generated groups of constant rank with finite cokernels";

bool is_unit(const BigInt& a) { return abs(a) == 1; }

bool eventually_units(const std::vector<BigInt>& multipliers) {
  return std::all_of(multipliers.begin(), multipliers.end(), is_unit);
}

// Rank-1 quotient system with multipliers a_i ≠ ±1 infinitely often:
// M = colim Hom(A''_i, ℤ) has e_p = ∞ exactly at the primes dividing a_i
// infinitely often, so lim¹ = ℚ^(c) ⊕ ⊕_{e_p < ∞} ℚ_p/ℤ_p.
Lim1Class rank_one_lim1(const std::vector<BigInt>& period) {
  std::map<Prime, ExtCardinal> infinite_exponent;
  for (const BigInt& a : period) {
    if (is_unit(a)) continue;
    for (const auto& [p, e] : factorize(a)) infinite_exponent[p] = 0;
  }
  Lim1Class out;
  out.rational = ExtCardinal::continuum();
  out.pruefer = PrimeMultiplicity(1, std::move(infinite_exponent));
  return out;
}

// Induction on the rank: peel off the first coordinate as the rank-1 quotient
// system A'' and recurse on the rank r-1 subsystem A'.
Lim1Class classify_recursive(const ValidatedSystem& system, std::size_t first) {
  if (first == system.spec.rank) return Lim1Class{};
  Lim1Class rest = classify_recursive(system, first + 1);
  std::vector<BigInt> a = system.spec.coordinate(first);
  if (eventually_units(a)) {
    // lim A'' = ℤ, lim¹ A'' = 0. For a diagonal tail the connecting map
    // ℤ → lim¹ A' is zero, so the parameters of A and A' agree.
    return rest;
  }
  // lim A'' = 0: 0 → lim¹ A' → lim¹ A → lim¹ A'' → 0, parameters add.
  return groupclass::direct_sum(rest, rank_one_lim1(a));
}

Lim1Class classify_ext_oracle(const ValidatedSystem& system) {
  // lim¹ A_i ≅ Ext(M, ℤ), M = colim Hom(A_i, ℤ). The prefix is not cofinal,
  // and on the diagonal tail M splits into rank-1 colimits per coordinate.
  Lim1Class out;
  for (std::size_t j = 0; j < system.spec.rank; ++j) {
    auto profile = rank1ext::eprofile_from_multipliers({}, system.spec.coordinate(j));
    out = groupclass::direct_sum(out, rank1ext::ext_to_Z(profile));
  }
  return out;
}

}  // namespace

std::vector<BigInt> InverseSystemSpec::coordinate(std::size_t j) const {
  std::vector<BigInt> out;
  out.reserve(tail.size());
  for (const auto& diag : tail) out.push_back(diag.at(j));
  return out;
}

ValidatedSystem validate_system(const InverseSystemSpec& spec) {
  if (spec.rank == 0) {
    throw DomainError("invalid_rank", "inverse system rank must be at least 1", kCitation);
  }
  const auto r = static_cast<Eigen::Index>(spec.rank);
  ValidatedSystem out{spec, {}, {}, std::nullopt};
  std::set<Prime> primes;
  auto collect = [&primes](const GroupStructure& g) {
    if (g.torsion_order() == 1) return;
    for (const auto& [p, e] : factorize(g.torsion_order())) primes.insert(p);
  };

  for (std::size_t i = 0; i < spec.prefix.size(); ++i) {
    const IntMatrix& M = spec.prefix[i];
    if (M.rows() != r || M.cols() != r) {
      throw DomainError("size_mismatch",
                        "prefix matrix " + std::to_string(i) + " is not " +
                            std::to_string(r) + "x" + std::to_string(r),
                        kCitation);
    }
    if (fgab::determinant(M) == 0) {
      throw DomainError("zero_determinant",
                        "prefix matrix " + std::to_string(i) +
                            " is singular; transition maps need finite cokernel",
                        kCitation);
    }
    out.prefix_cokernels.push_back(fgab::cokernel_structure(M));
    collect(out.prefix_cokernels.back());
  }
  if (spec.tail.empty()) {
    throw DomainError("empty_period", "tail period must be at least 1", kCitation);
  }
  for (std::size_t k = 0; k < spec.tail.size(); ++k) {
    const auto& diag = spec.tail[k];
    if (diag.size() != spec.rank) {
      throw DomainError("size_mismatch",
                        "tail diagonal " + std::to_string(k) + " has length " +
                            std::to_string(diag.size()) + ", expected " +
                            std::to_string(spec.rank),
                        kCitation);
    }
    if (std::any_of(diag.begin(), diag.end(), [](const BigInt& a) { return a == 0; })) {
      throw DomainError("zero_determinant",
                        "tail diagonal " + std::to_string(k) + " has a zero entry",
                        kCitation);
    }
    out.tail_cokernels.push_back(GroupStructure::from_cyclic(0, diag));
    collect(out.tail_cokernels.back());
  }
  if (primes.size() == 1) out.single_prime = *primes.begin();
  return out;
}

GroupStructure lim_structure(const ValidatedSystem& system) {
  std::uint64_t survivors = 0;
  for (std::size_t j = 0; j < system.spec.rank; ++j) {
    if (eventually_units(system.spec.coordinate(j))) ++survivors;
  }
  return GroupStructure{survivors, {}};
}

Lim1Class lim1_classify(const ValidatedSystem& system, Lim1Strategy strategy) {
  switch (strategy) {
    case Lim1Strategy::recursive:
      return classify_recursive(system, 0);
    case Lim1Strategy::ext_oracle:
      return classify_ext_oracle(system);
  }
  return {};
}

bool is_mittag_leffler(const ValidatedSystem& system) {
  return std::all_of(system.spec.tail.begin(), system.spec.tail.end(),
                     [](const auto& diag) {
                       return std::all_of(diag.begin(), diag.end(), is_unit);
                     });
}

InverseSystemSpec drop_prefix(const InverseSystemSpec& spec, std::size_t k) {
  if (k > spec.prefix.size()) {
    throw DomainError("prefix_too_short",
                      "cannot drop " + std::to_string(k) + " maps from a prefix of length " +
                          std::to_string(spec.prefix.size()));
  }
  InverseSystemSpec out = spec;
  out.prefix.erase(out.prefix.begin(), out.prefix.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace bk::prosys
