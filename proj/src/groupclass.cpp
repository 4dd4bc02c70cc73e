#include "brauerkit/groupclass.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bk::groupclass {

namespace {

void require_block_prime(Prime p) {
  if (!is_prime(p)) {
    throw DomainError("invalid_block",
                      "block index " + std::to_string(p) + " is not a prime",
                      "descriptor normal form");
  }
}

void normalize_counts(std::map<Prime, std::uint64_t>& m) {
  for (auto it = m.begin(); it != m.end();) {
    require_block_prime(it->first);
    it = it->second == 0 ? m.erase(it) : std::next(it);
  }
}

void add_counts(std::map<Prime, std::uint64_t>& into,
                const std::map<Prime, std::uint64_t>& from) {
  for (const auto& [p, n] : from) into[p] += n;
}

BigInt prime_to_p_part(BigInt d, Prime p) {
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
  }
  return d;
}

bool is_p_power(BigInt d, Prime p) { return prime_to_p_part(std::move(d), p) == 1; }

// (ℤ_p / ℤ[S⁻¹])^n for p ∉ S: ℚ^(c) ⊕ ⊕_{l ∉ S ∪ {p}} (ℚ_l/ℤ_l)^n.
GroupDescriptor completion_quotient(Prime p, const std::vector<Prime>& S,
                                    std::uint64_t n) {
  GroupDescriptor g;
  if (n == 0) return g;
  g.rational = ExtCardinal::continuum();
  std::map<Prime, ExtCardinal> exceptions{{p, 0}};
  for (Prime l : S) exceptions[l] = 0;
  g.pruefer = PrimeMultiplicity(n, std::move(exceptions));
  return g;
}

int compare_bigints(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtCardinal

std::uint64_t ExtCardinal::value() const {
  if (continuum_) {
    throw DomainError("continuum", "cardinal is the continuum, not a finite value");
  }
  return n_;
}

ExtCardinal ExtCardinal::times(std::uint64_t k) const {
  if (k == 0) return ExtCardinal(0);
  if (continuum_) return continuum();
  return ExtCardinal(n_ * k);
}

ExtCardinal operator+(ExtCardinal a, ExtCardinal b) {
  if (a.continuum_ || b.continuum_) return ExtCardinal::continuum();
  return ExtCardinal(a.n_ + b.n_);
}

std::string ExtCardinal::to_string() const {
  return continuum_ ? "continuum" : std::to_string(n_);
}

// ---------------------------------------------------------------------------
// PrimeMultiplicity

PrimeMultiplicity::PrimeMultiplicity(ExtCardinal default_value,
                                     std::map<Prime, ExtCardinal> exceptions)
    : default_(default_value), exceptions_(std::move(exceptions)) {
  normalize();
}

PrimeMultiplicity PrimeMultiplicity::at_prime(Prime l, ExtCardinal n) {
  return PrimeMultiplicity(0, {{l, n}});
}

void PrimeMultiplicity::normalize() {
  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    require_block_prime(it->first);
    it = it->second == default_ ? exceptions_.erase(it) : std::next(it);
  }
}

ExtCardinal PrimeMultiplicity::at(Prime l) const {
  auto it = exceptions_.find(l);
  return it == exceptions_.end() ? default_ : it->second;
}

void PrimeMultiplicity::set(Prime l, ExtCardinal n) {
  exceptions_[l] = n;
  normalize();
}

bool PrimeMultiplicity::has_continuum() const {
  if (default_.is_continuum()) return true;
  return std::any_of(exceptions_.begin(), exceptions_.end(),
                     [](const auto& e) { return e.second.is_continuum(); });
}

bool PrimeMultiplicity::supported_at(Prime p) const {
  if (!default_.is_zero()) return false;
  return std::all_of(exceptions_.begin(), exceptions_.end(),
                     [p](const auto& e) { return e.first == p || e.second.is_zero(); });
}

PrimeMultiplicity operator+(const PrimeMultiplicity& a, const PrimeMultiplicity& b) {
  std::map<Prime, ExtCardinal> exceptions;
  for (const auto& [l, n] : a.exceptions_) exceptions[l] = n + b.at(l);
  for (const auto& [l, n] : b.exceptions_) exceptions[l] = a.at(l) + n;
  return PrimeMultiplicity(a.default_ + b.default_, std::move(exceptions));
}

bool operator<(const PrimeMultiplicity& a, const PrimeMultiplicity& b) {
  if (a.default_ != b.default_) return a.default_ < b.default_;
  return a.exceptions_ < b.exceptions_;
}

// ---------------------------------------------------------------------------
// GroupDescriptor

bool InvertedBlock::inverts(Prime p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

GroupDescriptor GroupDescriptor::integers(std::uint64_t n) {
  GroupDescriptor g;
  g.free_rank = n;
  return g;
}

GroupDescriptor GroupDescriptor::cyclic_group(const BigInt& m) {
  GroupDescriptor g;
  g.cyclic = {m};
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::from_structure(const GroupStructure& s) {
  GroupDescriptor g;
  g.free_rank = s.free_rank;
  g.cyclic = s.invariant_factors;
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::localized(Prime p, std::uint64_t n) {
  GroupDescriptor g;
  g.local[p] = n;
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::inverted_primes(std::vector<Prime> S, std::uint64_t n) {
  GroupDescriptor g;
  g.inverted.push_back({std::move(S), n});
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::rationals(ExtCardinal n) {
  GroupDescriptor g;
  g.rational = n;
  return g;
}

GroupDescriptor GroupDescriptor::pruefer_group(Prime l, ExtCardinal n) {
  return pruefer_all(PrimeMultiplicity::at_prime(l, n));
}

GroupDescriptor GroupDescriptor::pruefer_all(PrimeMultiplicity m) {
  GroupDescriptor g;
  g.pruefer = std::move(m);
  return g;
}

GroupDescriptor GroupDescriptor::rationals_mod_integers(std::uint64_t n) {
  return pruefer_all(PrimeMultiplicity(n));
}

GroupDescriptor GroupDescriptor::rationals_mod_integers_away_from(Prime p,
                                                                  std::uint64_t n) {
  require_prime(p);
  return pruefer_all(PrimeMultiplicity(n, {{p, 0}}));
}

GroupDescriptor GroupDescriptor::padic_integers(Prime p, std::uint64_t n) {
  GroupDescriptor g;
  g.padic[p] = n;
  g.normalize();
  return g;
}

GroupDescriptor GroupDescriptor::finite_p_group(Prime p) {
  GroupDescriptor g;
  g.finite_p_placeholders.insert(p);
  g.normalize();
  return g;
}

void GroupDescriptor::normalize() {
  for (const BigInt& m : cyclic) {
    if (m < 1) {
      throw DomainError("invalid_block",
                        "cyclic modulus must be positive, got " + m.get_str(),
                        "descriptor normal form");
    }
  }
  cyclic = GroupStructure::from_cyclic(0, std::move(cyclic)).invariant_factors;
  normalize_counts(local);
  normalize_counts(padic);

  std::map<std::vector<Prime>, std::uint64_t> merged;
  for (InvertedBlock& b : inverted) {
    std::sort(b.primes.begin(), b.primes.end());
    b.primes.erase(std::unique(b.primes.begin(), b.primes.end()), b.primes.end());
    if (b.primes.empty()) {
      throw DomainError("invalid_block", "ℤ[S⁻¹] needs a nonempty prime set S",
                        "descriptor normal form");
    }
    for (Prime l : b.primes) require_block_prime(l);
    merged[b.primes] += b.multiplicity;
  }
  inverted.clear();
  for (auto& [S, n] : merged) {
    if (n != 0) inverted.push_back({S, n});
  }
  for (Prime l : finite_p_placeholders) require_block_prime(l);
}

bool GroupDescriptor::is_zero() const { return *this == GroupDescriptor{}; }

bool GroupDescriptor::has_continuum() const {
  return rational.is_continuum() || pruefer.has_continuum();
}

bool GroupDescriptor::is_finite() const {
  return free_rank == 0 && local.empty() && inverted.empty() && rational.is_zero() &&
         pruefer.is_zero() && padic.empty();
}

bool GroupDescriptor::is_divisible() const {
  return free_rank == 0 && cyclic.empty() && local.empty() && inverted.empty() &&
         padic.empty() && finite_p_placeholders.empty();
}

bool GroupDescriptor::is_zp_module(Prime p) const {
  if (free_rank != 0 || !inverted.empty()) return false;
  if (!std::all_of(cyclic.begin(), cyclic.end(),
                   [p](const BigInt& d) { return is_p_power(d, p); })) {
    return false;
  }
  auto only_p = [p](const auto& m) {
    return std::all_of(m.begin(), m.end(), [p](const auto& e) { return e.first == p; });
  };
  if (!only_p(local) || !only_p(padic)) return false;
  if (!pruefer.supported_at(p)) return false;
  return std::all_of(finite_p_placeholders.begin(), finite_p_placeholders.end(),
                     [p](Prime q) { return q == p; });
}

bool GroupDescriptor::is_p_divisible(Prime p) const {
  if (free_rank != 0 || local.count(p) || padic.count(p) ||
      finite_p_placeholders.count(p)) {
    return false;
  }
  if (!std::all_of(cyclic.begin(), cyclic.end(), [p](const BigInt& d) {
        return !mpz_divisible_ui_p(d.get_mpz_t(), p);
      })) {
    return false;
  }
  return std::all_of(inverted.begin(), inverted.end(),
                     [p](const InvertedBlock& b) { return b.inverts(p); });
}

bool operator<(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.free_rank != b.free_rank) return a.free_rank < b.free_rank;
  if (int c = compare_bigints(a.cyclic, b.cyclic); c != 0) return c < 0;
  if (a.local != b.local) return a.local < b.local;
  if (a.inverted != b.inverted) return a.inverted < b.inverted;
  if (a.rational != b.rational) return a.rational < b.rational;
  if (a.pruefer != b.pruefer) return a.pruefer < b.pruefer;
  if (a.padic != b.padic) return a.padic < b.padic;
  return a.finite_p_placeholders < b.finite_p_placeholders;
}

GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b) {
  GroupDescriptor g = a;
  g.free_rank += b.free_rank;
  g.cyclic.insert(g.cyclic.end(), b.cyclic.begin(), b.cyclic.end());
  add_counts(g.local, b.local);
  g.inverted.insert(g.inverted.end(), b.inverted.begin(), b.inverted.end());
  g.rational = a.rational + b.rational;
  g.pruefer = a.pruefer + b.pruefer;
  add_counts(g.padic, b.padic);
  g.finite_p_placeholders.insert(b.finite_p_placeholders.begin(),
                                 b.finite_p_placeholders.end());
  g.normalize();
  return g;
}

std::string to_string(const GroupDescriptor& g) {
  std::vector<std::string> parts;
  auto power = [](const std::string& base, const std::string& n) {
    return n == "1" ? base : base + "^" + n;
  };
  if (g.free_rank) parts.push_back(power("ℤ", std::to_string(g.free_rank)));
  for (const BigInt& d : g.cyclic) parts.push_back("ℤ/" + d.get_str());
  for (const auto& [p, n] : g.local) {
    parts.push_back(power("ℤ_(" + std::to_string(p) + ")", std::to_string(n)));
  }
  for (const InvertedBlock& b : g.inverted) {
    std::string s = "ℤ[1/";
    for (std::size_t i = 0; i < b.primes.size(); ++i) {
      s += (i ? "," : "") + std::to_string(b.primes[i]);
    }
    parts.push_back(power(s + "]", std::to_string(b.multiplicity)));
  }
  if (!g.rational.is_zero()) {
    parts.push_back(g.rational.is_continuum() ? "ℚ^(continuum)"
                                              : power("ℚ", g.rational.to_string()));
  }
  if (!g.pruefer.is_zero()) {
    const ExtCardinal& d = g.pruefer.default_value();
    if (d.is_zero()) {
      for (const auto& [l, n] : g.pruefer.exceptions()) {
        std::string L = std::to_string(l);
        parts.push_back(power("ℚ_" + L + "/ℤ_" + L, n.to_string()));
      }
    } else {
      std::string s = power("(ℚ/ℤ)", d.to_string());
      if (!g.pruefer.exceptions().empty()) {
        s += " with ℚ_l/ℤ_l-multiplicity";
        for (const auto& [l, n] : g.pruefer.exceptions()) {
          s += " " + n.to_string() + " at l=" + std::to_string(l);
        }
      }
      parts.push_back(s);
    }
  }
  for (const auto& [p, n] : g.padic) {
    parts.push_back(power("ℤ_" + std::to_string(p), std::to_string(n)));
  }
  for (Prime p : g.finite_p_placeholders) {
    parts.push_back("P(finite " + std::to_string(p) + "-group)");
  }
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " ⊕ " : "") << parts[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Functors

GroupDescriptor tate_module(const GroupDescriptor& G, Prime p) {
  require_prime(p);
  GroupDescriptor out;
  ExtCardinal n = G.pruefer.at(p);
  if (n.is_continuum()) {
    throw DomainError("unsupported",
                      "Tate module of a continuum of Prüfer groups is not representable");
  }
  if (!n.is_zero()) out.padic[p] = n.value();
  return out;
}

GroupDescriptor max_p_divisible(const GroupDescriptor& G, Prime p) {
  require_prime(p);
  GroupDescriptor out;
  for (const BigInt& d : G.cyclic) out.cyclic.push_back(prime_to_p_part(d, p));
  for (const auto& [q, n] : G.local) {
    if (q != p) out.local[q] = n;
  }
  for (const InvertedBlock& b : G.inverted) {
    if (b.inverts(p)) out.inverted.push_back(b);
  }
  out.rational = G.rational;
  out.pruefer = G.pruefer;
  for (const auto& [q, n] : G.padic) {
    if (q != p) out.padic[q] = n;
  }
  for (Prime q : G.finite_p_placeholders) {
    if (q != p) out.finite_p_placeholders.insert(q);
  }
  out.normalize();
  return out;
}

GroupStructure p_power_torsion(const GroupDescriptor& G, Prime p, unsigned j) {
  require_prime(p);
  if (G.finite_p_placeholders.count(p)) {
    throw DomainError("unsupported", "torsion of a finite p-group of unknown order");
  }
  ExtCardinal n = G.pruefer.at(p);
  if (n.is_continuum()) {
    throw DomainError("continuum", "p-power torsion of a continuum of Prüfer groups");
  }
  const BigInt pj = ipow(p, j);
  std::vector<BigInt> moduli(n.value(), pj);
  for (const BigInt& d : G.cyclic) moduli.push_back(gcd(d, pj));
  return GroupStructure::from_cyclic(0, std::move(moduli));
}

DescriptorCoefficients finite_coefficients_descriptor(const GroupDescriptor& G,
                                                      Prime p, unsigned j) {
  require_prime(p);
  if (j == 0) {
    throw DomainError("invalid_exponent", "finite coefficients need j >= 1");
  }
  if (G.has_continuum()) {
    throw DomainError("continuum",
                      "finite coefficients are not finitely describable for "
                      "continuum multiplicities");
  }
  const BigInt pj = ipow(p, j);
  std::uint64_t copies = G.free_rank;
  if (auto it = G.local.find(p); it != G.local.end()) copies += it->second;
  if (auto it = G.padic.find(p); it != G.padic.end()) copies += it->second;
  for (const InvertedBlock& b : G.inverted) {
    if (!b.inverts(p)) copies += b.multiplicity;
  }
  std::vector<BigInt> quotient(copies, pj);
  for (const BigInt& d : G.cyclic) quotient.push_back(gcd(d, pj));
  return {GroupStructure::from_cyclic(0, std::move(quotient)), p_power_torsion(G, p, j)};
}

GroupDescriptor lim1_mult_p(const GroupDescriptor& G, Prime p) {
  require_prime(p);
  GroupDescriptor out = completion_quotient(p, {}, G.free_rank);
  for (const InvertedBlock& b : G.inverted) {
    if (!b.inverts(p)) out = direct_sum(out, completion_quotient(p, b.primes, b.multiplicity));
  }
  // ℤ_p / ℤ_(p) is uniquely divisible of continuum cardinality.
  if (auto it = G.local.find(p); it != G.local.end() && it->second > 0) {
    out = direct_sum(out, GroupDescriptor::rationals(ExtCardinal::continuum()));
  }
  return out;
}

bool SixTermSequence::consistent() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConsistencyCheck& c) { return c.passed; });
}

SixTermSequence six_term_mult_p(const GroupDescriptor& G, Prime p) {
  require_prime(p);
  SixTermSequence seq;
  auto add = [](GroupDescriptor& term, const GroupDescriptor& block) {
    term = direct_sum(term, block);
  };
  // Blocks on which p acts bijectively: the tower is constant, so lim(G,p)
  // and lim p^jG are the block itself and every other term vanishes.
  auto bijective = [&](const GroupDescriptor& block) {
    add(seq.lim, block);
    add(seq.lim_images, block);
  };
  // Torsion-free blocks with ∩ p^j = 0: only the completion quotient survives,
  // once as lim¹(G,p) and once as lim¹ p^jG.
  auto completing = [&](const GroupDescriptor& quotient) {
    add(seq.lim1, quotient);
    add(seq.lim1_images, quotient);
  };

  completing(completion_quotient(p, {}, G.free_rank));
  for (const BigInt& d : G.cyclic) {
    BigInt away = prime_to_p_part(d, p);
    if (away != 1) bijective(GroupDescriptor::cyclic_group(away));
    // The p-primary part is killed by a power of p: all six terms vanish.
  }
  for (const auto& [q, n] : G.local) {
    if (q == p) {
      completing(GroupDescriptor::rationals(ExtCardinal::continuum()));
    } else {
      bijective(GroupDescriptor::localized(q, n));
    }
  }
  for (const InvertedBlock& b : G.inverted) {
    if (b.inverts(p)) {
      bijective(GroupDescriptor::inverted_primes(b.primes, b.multiplicity));
    } else {
      completing(completion_quotient(p, b.primes, b.multiplicity));
    }
  }
  if (!G.rational.is_zero()) bijective(GroupDescriptor::rationals(G.rational));

  ExtCardinal at_p = G.pruefer.at(p);
  if (at_p.is_continuum()) {
    throw DomainError("unsupported",
                      "Tate module of a continuum of Prüfer groups is not representable");
  }
  if (!at_p.is_zero()) {
    // 0 → ℤ_p → ℚ_p → ℚ_p/ℤ_p → 0; the p^j-torsion tower ℤ/p^j <-p- ℤ/p^{j+1}
    // is surjective, so both lim¹ terms of the torsion part vanish.
    add(seq.tate, GroupDescriptor::padic_integers(p, at_p.value()));
    add(seq.lim, GroupDescriptor::rationals(ExtCardinal::continuum()));
    add(seq.lim_images, GroupDescriptor::pruefer_group(p, at_p));
  }
  PrimeMultiplicity away = G.pruefer;
  away.set(p, 0);
  if (!away.is_zero()) bijective(GroupDescriptor::pruefer_all(away));

  for (const auto& [q, n] : G.padic) {
    if (q != p) bijective(GroupDescriptor::padic_integers(q, n));
    // ℤ_p is p-adically complete and has no divisible part: all terms vanish.
  }
  for (Prime q : G.finite_p_placeholders) {
    if (q != p) bijective(GroupDescriptor::finite_p_group(q));
  }

  auto check = [&](std::string name, bool ok) {
    seq.checks.push_back({std::move(name), ok});
  };
  check("term1_is_tate_module", seq.tate == tate_module(G, p));
  check("term5_is_lim1_mult_p", seq.lim1 == lim1_mult_p(G, p));
  check("term3_is_max_p_divisible", seq.lim_images == max_p_divisible(G, p));
  check("term4_vanishes_for_finite_torsion", seq.lim1_torsion.is_zero());
  check("term5_iso_term6_when_term4_zero",
        !seq.lim1_torsion.is_zero() || seq.lim1 == seq.lim1_images);
  check("term2_iso_term3_when_term1_zero",
        !seq.tate.is_zero() || seq.lim == seq.lim_images);
  check("term3_is_p_divisible", seq.lim_images.is_p_divisible(p));
  return seq;
}

GroupDescriptor compllemma_cokernel(const GroupDescriptor& current,
                                    const GroupDescriptor& next, Prime p) {
  require_prime(p);
  if (!current.is_zp_module(p)) {
    throw DomainError("hypothesis_violation",
                      "the splitting of coker(c^i) is only known when H^i is a "
                      "ℤ_(p)-module; got " + to_string(current),
                      "completion cokernel corollary (ℤ_(p)-module hypothesis)");
  }
  return direct_sum(tate_module(next, p), lim1_mult_p(current, p));
}

std::vector<GroupStructure> quotient_types(const GroupStructure& F) {
  if (!F.is_finite()) {
    throw DomainError("not_finite", "quotient enumeration needs a finite group");
  }
  // Per prime, the quotient types of a p-group of type λ are the partitions
  // μ with μ_i ≤ λ_i.
  std::map<Prime, std::vector<unsigned>> partitions;
  for (const BigInt& d : F.invariant_factors) {
    for (const auto& [p, e] : factorize(d)) partitions[p].push_back(e);
  }
  std::vector<std::vector<BigInt>> acc{{}};
  for (auto& [p, lambda] : partitions) {
    std::sort(lambda.rbegin(), lambda.rend());
    std::vector<std::vector<unsigned>> mus;
    std::vector<unsigned> mu(lambda.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned cap) {
      if (i == lambda.size()) {
        mus.push_back(mu);
        return;
      }
      for (unsigned v = 0; v <= std::min(cap, lambda[i]); ++v) {
        mu[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, lambda.front());
    std::vector<std::vector<BigInt>> next;
    for (const auto& base : acc) {
      for (const auto& m : mus) {
        auto moduli = base;
        for (unsigned e : m) moduli.push_back(ipow(p, e));
        next.push_back(std::move(moduli));
      }
    }
    acc = std::move(next);
  }
  std::vector<GroupStructure> out;
  for (auto& moduli : acc) out.push_back(GroupStructure::from_cyclic(0, std::move(moduli)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupDescriptor> extension_classes(const GroupDescriptor& D,
                                               const GroupStructure& F) {
  if (!D.is_divisible()) {
    throw DomainError("not_divisible",
                      "extension splitting needs a divisible group, got " + to_string(D),
                      "divisible-by-finite splitting lemma");
  }
  if (!F.is_finite()) {
    throw DomainError("not_finite", "extension splitting needs a finite kernel",
                      "divisible-by-finite splitting lemma");
  }
  std::vector<GroupDescriptor> out;
  for (const GroupStructure& q : quotient_types(F)) {
    out.push_back(direct_sum(D, GroupDescriptor::from_structure(q)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bk::groupclass
