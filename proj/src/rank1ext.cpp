#include "brauerkit/rank1ext.hpp"

#include <algorithm>

namespace bk::rank1ext {

using groupclass::ExtCardinal;
using groupclass::PrimeMultiplicity;

std::uint64_t Exponent::value() const {
  if (infinite_) throw DomainError("infinite_exponent", "exponent is infinite");
  return e_;
}

EProfile::EProfile(Exponent default_value, std::map<Prime, Exponent> exceptions)
    : default_(default_value), exceptions_(std::move(exceptions)) {
  normalize();
}

EProfile EProfile::invert(Prime p) {
  return EProfile(0, {{p, Exponent::infinity()}});
}

EProfile EProfile::localized_at(Prime p) {
  return EProfile(Exponent::infinity(), {{p, 0}});
}

void EProfile::normalize() {
  if (default_.is_finite() && default_.value() > 1) default_ = 1;
  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    require_prime(it->first, "exception prime");
    it = it->second == default_ ? exceptions_.erase(it) : std::next(it);
  }
}

Exponent EProfile::at(Prime p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

EProfile EProfile::canonical() const {
  // Changing finitely many finite exponents by finite amounts does not change
  // the isomorphism type, so only the pattern of infinite exponents remains.
  const Exponent finite_target = default_.is_finite() ? default_ : Exponent(0);
  std::map<Prime, Exponent> exceptions;
  for (const auto& [p, e] : exceptions_) {
    exceptions[p] = e.is_infinite() ? e : finite_target;
  }
  return EProfile(default_, std::move(exceptions));
}

EProfile raw_eprofile_from_multipliers(const std::vector<BigInt>& prefix,
                                       const std::vector<BigInt>& period) {
  std::map<Prime, Exponent> exceptions;
  for (const BigInt& a : period) {
    if (a == 0) throw DomainError("zero_multiplier", "multipliers must be nonzero");
    if (abs(a) == 1) continue;
    for (const auto& [p, e] : factorize(a)) exceptions[p] = Exponent::infinity();
  }
  for (const BigInt& a : prefix) {
    if (a == 0) throw DomainError("zero_multiplier", "multipliers must be nonzero");
    if (abs(a) == 1) continue;
    for (const auto& [p, e] : factorize(a)) {
      Exponent& slot = exceptions[p];
      if (slot.is_finite()) slot = Exponent(slot.value() + e);
    }
  }
  return EProfile(0, std::move(exceptions));
}

EProfile eprofile_from_multipliers(const std::vector<BigInt>& prefix,
                                   const std::vector<BigInt>& period) {
  return raw_eprofile_from_multipliers(prefix, period).canonical();
}

bool is_free(const EProfile& M) {
  if (M.default_value() != Exponent(0)) return false;
  return std::all_of(M.exceptions().begin(), M.exceptions().end(),
                     [](const auto& e) { return e.second.is_finite(); });
}

GroupDescriptor ext_to_Z(const EProfile& M) {
  if (is_free(M)) return GroupDescriptor::zero();
  // ℚ^(continuum) ⊕ ⊕_p (ℚ_p/ℤ_p)^{n_p}, n_p = 1 iff e_p is finite.
  auto n = [](const Exponent& e) { return ExtCardinal(e.is_finite() ? 1 : 0); };
  std::map<Prime, ExtCardinal> exceptions;
  for (const auto& [p, e] : M.exceptions()) exceptions[p] = n(e);
  GroupDescriptor g;
  g.rational = ExtCardinal::continuum();
  g.pruefer = PrimeMultiplicity(n(M.default_value()), std::move(exceptions));
  return g;
}

GroupDescriptor quotient_mod_Z(const EProfile& M) {
  const Exponent& d = M.default_value();
  if (d.is_finite() && d.value() > 0) {
    throw DomainError("unsupported",
                      "M/ℤ has infinitely many nontrivial cyclic summands",
                      "M/ℤ ≅ ⊕_p ℤ/p^{e_p}");
  }
  GroupDescriptor g;
  std::map<Prime, ExtCardinal> pruefer_exceptions;
  for (const auto& [p, e] : M.exceptions()) {
    if (e.is_infinite()) {
      pruefer_exceptions[p] = 1;
    } else {
      pruefer_exceptions[p] = 0;
      if (e.value() > 0) g.cyclic.push_back(ipow(p, static_cast<unsigned>(e.value())));
    }
  }
  g.pruefer = PrimeMultiplicity(d.is_infinite() ? 1 : 0, std::move(pruefer_exceptions));
  g.normalize();
  return g;
}

GroupStructure hom_to_Z(const EProfile& M) {
  return is_free(M) ? GroupStructure{1, {}} : GroupStructure::trivial();
}

}  // namespace bk::rank1ext
