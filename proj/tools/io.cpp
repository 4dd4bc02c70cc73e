#include "io.hpp"

#include <limits>

namespace bk::io {

using groupclass::ExtCardinal;
using groupclass::GroupDescriptor;
using groupclass::PrimeMultiplicity;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

std::string prime_key(Prime p) { return std::to_string(p); }

Prime read_prime_key(const std::string& key) {
  BigInt v;
  try {
    v = parse_bigint(key);
  } catch (const std::invalid_argument&) {
    malformed("prime key '" + key + "' is not an integer");
  }
  if (v < 2 || !v.fits_ulong_p()) malformed("prime key '" + key + "' out of range");
  Prime p = v.get_ui();
  require_prime(p, "prime key");
  return p;
}

template <typename F>
void for_each_element(const Json& j, const char* what, F&& f) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  for (const auto& x : j) f(x);
}

Json write_prime_map(const std::map<Prime, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [p, n] : m) out[prime_key(p)] = write_count(n);
  return out;
}

std::map<Prime, std::uint64_t> read_prime_map(const Json& j) {
  if (!j.is_object()) malformed("prime map must be an object");
  std::map<Prime, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) out[read_prime_key(k)] += read_count(v);
  return out;
}

Json write(const rank1ext::Exponent& e) {
  return e.is_infinite() ? Json("inf") : write_count(e.value());
}

rank1ext::Exponent read_exponent(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return rank1ext::Exponent::infinity();
  return rank1ext::Exponent(read_count(j));
}

}  // namespace

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

BigInt read_bigint(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      malformed(e.what());
    }
  }
  malformed("expected an integer or a decimal string");
}

std::uint64_t read_count(const Json& j) {
  BigInt v = read_bigint(j);
  if (v < 0) malformed("expected a nonnegative integer, got " + v.get_str());
  if (!v.fits_ulong_p()) malformed("integer " + v.get_str() + " is too large");
  return v.get_ui();
}

Prime read_prime(const Json& j) {
  std::uint64_t p = read_count(j);
  require_prime(p, "p");
  return p;
}

bool read_bool(const Json& j) {
  if (!j.is_boolean()) malformed("expected a boolean");
  return j.get<bool>();
}

std::string read_string(const Json& j) {
  if (!j.is_string()) malformed("expected a string");
  return j.get<std::string>();
}

Json write(const BigInt& x) { return x.get_str(); }
Json write_count(std::uint64_t n) { return std::to_string(n); }

IntMatrix read_matrix(const Json& j) {
  const Json* entries = &j;
  std::optional<std::uint64_t> rows, cols;
  if (j.is_object()) {
    rows = read_count(field(j, "rows"));
    cols = read_count(field(j, "cols"));
    entries = &field(j, "entries");
  }
  if (!entries->is_array()) malformed("matrix entries must be an array of rows");
  const std::uint64_t n = entries->size();
  if (rows && *rows != n) malformed("matrix has " + std::to_string(n) + " rows, declared " +
                                    std::to_string(*rows));
  std::uint64_t m = cols ? *cols : (n > 0 ? (*entries)[0].size() : 0);
  IntMatrix M(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::uint64_t i = 0; i < n; ++i) {
    const Json& row = (*entries)[i];
    if (!row.is_array() || row.size() != m) {
      malformed("matrix row " + std::to_string(i) + " does not have " + std::to_string(m) +
                " entries");
    }
    for (std::uint64_t k = 0; k < m; ++k) {
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = read_bigint(row[k]);
    }
  }
  return M;
}

Json write(const IntMatrix& M) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(M(i, k).get_str());
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = write_count(static_cast<std::uint64_t>(M.rows()));
  out["cols"] = write_count(static_cast<std::uint64_t>(M.cols()));
  out["entries"] = std::move(entries);
  return out;
}

fgab::GroupStructure read_structure(const Json& j) {
  std::uint64_t free_rank = has(j, "free_rank") ? read_count(j["free_rank"]) : 0;
  std::vector<BigInt> factors;
  if (has(j, "invariant_factors")) {
    for_each_element(j["invariant_factors"], "invariant_factors",
                     [&](const Json& x) { factors.push_back(read_bigint(x)); });
  }
  for (const BigInt& d : factors) {
    if (d <= 0) throw DomainError("invalid_factor", "cyclic orders must be positive");
  }
  return fgab::GroupStructure::from_cyclic(free_rank, factors);
}

Json write(const fgab::GroupStructure& g) {
  Json out;
  out["free_rank"] = write_count(g.free_rank);
  Json factors = Json::array();
  for (const BigInt& d : g.invariant_factors) factors.push_back(d.get_str());
  out["invariant_factors"] = std::move(factors);
  return out;
}

ExtCardinal read_cardinal(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "continuum") return ExtCardinal::continuum();
  return ExtCardinal(read_count(j));
}

Json write(const ExtCardinal& c) {
  return c.is_continuum() ? Json("continuum") : write_count(c.value());
}

GroupDescriptor read_descriptor(const Json& j) {
  if (!j.is_object()) malformed("descriptor must be an object");
  static const std::set<std::string> known = {
      "free_rank", "cyclic",  "local", "inverted",
      "rational",  "pruefer", "padic", "finite_p_placeholders", "text"};
  for (const auto& [k, v] : j.items()) {
    if (!known.contains(k)) malformed("unknown descriptor field '" + k + "'");
  }
  GroupDescriptor g;
  if (has(j, "free_rank")) g.free_rank = read_count(j["free_rank"]);
  if (has(j, "cyclic")) {
    for_each_element(j["cyclic"], "cyclic", [&](const Json& x) { g.cyclic.push_back(read_bigint(x)); });
  }
  if (has(j, "local")) g.local = read_prime_map(j["local"]);
  if (has(j, "inverted")) {
    for_each_element(j["inverted"], "inverted", [&](const Json& x) {
      groupclass::InvertedBlock b;
      for_each_element(field(x, "primes"), "primes",
                       [&](const Json& p) { b.primes.push_back(read_prime(p)); });
      b.multiplicity = has(x, "multiplicity") ? read_count(x["multiplicity"]) : 1;
      g.inverted.push_back(std::move(b));
    });
  }
  if (has(j, "rational")) g.rational = read_cardinal(j["rational"]);
  if (has(j, "pruefer")) {
    const Json& pj = j["pruefer"];
    ExtCardinal def = has(pj, "default") ? read_cardinal(pj["default"]) : ExtCardinal(0);
    std::map<Prime, ExtCardinal> exceptions;
    if (has(pj, "exceptions")) {
      if (!pj["exceptions"].is_object()) malformed("pruefer exceptions must be an object");
      for (const auto& [k, v] : pj["exceptions"].items()) {
        exceptions[read_prime_key(k)] = read_cardinal(v);
      }
    }
    g.pruefer = PrimeMultiplicity(def, std::move(exceptions));
  }
  if (has(j, "padic")) g.padic = read_prime_map(j["padic"]);
  if (has(j, "finite_p_placeholders")) {
    for_each_element(j["finite_p_placeholders"], "finite_p_placeholders",
                     [&](const Json& x) { g.finite_p_placeholders.insert(read_prime(x)); });
  }
  g.normalize();
  return g;
}

Json write(const GroupDescriptor& g) {
  Json out;
  out["free_rank"] = write_count(g.free_rank);
  Json cyclic = Json::array();
  for (const BigInt& m : g.cyclic) cyclic.push_back(m.get_str());
  out["cyclic"] = std::move(cyclic);
  out["local"] = write_prime_map(g.local);
  Json inverted = Json::array();
  for (const auto& b : g.inverted) {
    Json primes = Json::array();
    for (Prime p : b.primes) primes.push_back(prime_key(p));
    Json block;
    block["primes"] = std::move(primes);
    block["multiplicity"] = write_count(b.multiplicity);
    inverted.push_back(std::move(block));
  }
  out["inverted"] = std::move(inverted);
  out["rational"] = write(g.rational);
  Json pruefer;
  pruefer["default"] = write(g.pruefer.default_value());
  Json exceptions = Json::object();
  for (const auto& [p, n] : g.pruefer.exceptions()) exceptions[prime_key(p)] = write(n);
  pruefer["exceptions"] = std::move(exceptions);
  out["pruefer"] = std::move(pruefer);
  out["padic"] = write_prime_map(g.padic);
  Json placeholders = Json::array();
  for (Prime p : g.finite_p_placeholders) placeholders.push_back(prime_key(p));
  out["finite_p_placeholders"] = std::move(placeholders);
  out["text"] = groupclass::to_string(g);
  return out;
}

rank1ext::EProfile read_eprofile(const Json& j) {
  if (!j.is_object()) malformed("e-profile must be an object");
  rank1ext::Exponent def = has(j, "default") ? read_exponent(j["default"]) : rank1ext::Exponent(0);
  std::map<Prime, rank1ext::Exponent> exceptions;
  if (has(j, "exceptions")) {
    if (!j["exceptions"].is_object()) malformed("e-profile exceptions must be an object");
    for (const auto& [k, v] : j["exceptions"].items()) exceptions[read_prime_key(k)] = read_exponent(v);
  }
  return rank1ext::EProfile(def, std::move(exceptions));
}

Json write(const rank1ext::EProfile& M) {
  Json out;
  out["default"] = write(M.default_value());
  Json exceptions = Json::object();
  for (const auto& [p, e] : M.exceptions()) exceptions[prime_key(p)] = write(e);
  out["exceptions"] = std::move(exceptions);
  return out;
}

prosys::InverseSystemSpec read_system(const Json& j) {
  prosys::InverseSystemSpec spec;
  spec.rank = read_count(field(j, "rank"));
  if (has(j, "prefix")) {
    for_each_element(j["prefix"], "prefix", [&](const Json& m) { spec.prefix.push_back(read_matrix(m)); });
  }
  const Json& tail = field(j, "tail");
  const Json& diagonals = field(tail, "diagonals");
  for_each_element(diagonals, "diagonals", [&](const Json& d) {
    std::vector<BigInt> diag;
    for_each_element(d, "diagonal", [&](const Json& x) { diag.push_back(read_bigint(x)); });
    spec.tail.push_back(std::move(diag));
  });
  if (has(tail, "period") && read_count(tail["period"]) != spec.tail.size()) {
    malformed("tail period does not match the number of diagonals");
  }
  return spec;
}

Json write(const prosys::InverseSystemSpec& spec) {
  Json out;
  out["rank"] = write_count(spec.rank);
  Json prefix = Json::array();
  for (const auto& M : spec.prefix) prefix.push_back(write(M));
  out["prefix"] = std::move(prefix);
  Json diagonals = Json::array();
  for (const auto& d : spec.tail) {
    Json row = Json::array();
    for (const BigInt& x : d) row.push_back(x.get_str());
    diagonals.push_back(std::move(row));
  }
  Json tail;
  tail["period"] = write_count(spec.period());
  tail["diagonals"] = std::move(diagonals);
  out["tail"] = std::move(tail);
  return out;
}

submodq::TaggedGenerators read_generators(const Json& j) {
  submodq::TaggedGenerators out;
  out.r = read_count(field(j, "r"));
  out.p = read_prime(field(j, "p"));
  for_each_element(field(j, "generators"), "generators", [&](const Json& g) {
    const Json& v = field(g, "vector");
    if (!v.is_array()) malformed("generator vector must be an array");
    RatVector vec(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational q;
      if (v[i].is_string()) {
        try {
          q = parse_rational(v[i].get<std::string>());
        } catch (const std::invalid_argument& e) {
          malformed(e.what());
        }
      } else {
        q = Rational(read_bigint(v[i]));
      }
      vec(static_cast<Eigen::Index>(i)) = q;
    }
    std::string tag = read_string(field(g, "tag"));
    submodq::Tag t;
    if (tag == "local") {
      t = submodq::Tag::local;
    } else if (tag == "divisible") {
      t = submodq::Tag::divisible;
    } else {
      malformed("generator tag must be 'local' or 'divisible'");
    }
    out.generators.emplace_back(std::move(vec), t);
  });
  return out;
}

Json write(const submodq::STPair& st) {
  Json out;
  out["s"] = write_count(st.s);
  out["t"] = write_count(st.t);
  out["finite_part"] = write(st.finite_part);
  out["finite_unknown"] = st.finite_unknown;
  return out;
}

Json write(const submodq::H2kDescription& h) {
  Json out;
  out["r"] = write_count(h.r);
  out["s"] = write_count(h.s);
  out["t"] = write_count(h.t);
  out["torsion_finite_p_group"] = h.torsion_finite_p_group;
  out["torsion_order_known"] = h.torsion_order_known;
  out["extension_only"] = h.extension_only;
  out["torsion_free_shape"] = h.torsion_free_shape;
  return out;
}

brauer::BrauerInvariants read_invariants(const Json& j) {
  if (!j.is_object()) malformed("invariants must be an object");
  brauer::BrauerInvariants inv;
  auto opt = [&j](const char* key) -> std::optional<std::uint64_t> {
    if (!has(j, key) || j[key].is_null()) return std::nullopt;
    return read_count(j[key]);
  };
  if (auto v = opt("f")) inv.f = *v;
  if (has(j, "p")) inv.p = read_prime(j["p"]);
  if (auto v = opt("h01")) inv.h01 = *v;
  if (auto v = opt("h02")) inv.h02 = *v;
  inv.rho_X = read_count(field(j, "rho_X"));
  inv.rho_Xs = read_count(field(j, "rho_Xs"));
  if (auto v = opt("I")) inv.I = *v;
  inv.s = opt("s");
  inv.dim_vl_br_xsbar = opt("dimVlBrXsbar");
  inv.dim_vp_br_xsbar = opt("dimVpBrXsbar");
  inv.dim_vl_br_xs = opt("dimVlBrXs");
  if (has(j, "finiteness_proven")) inv.finiteness_proven = read_bool(j["finiteness_proven"]);
  return inv;
}

Json write(const brauer::StructureReport& report) {
  auto optional_count = [](const std::optional<std::uint64_t>& v) {
    return v ? write_count(*v) : Json(nullptr);
  };
  Json out;
  out["r"] = write_count(report.r);
  out["s"] = optional_count(report.s);
  out["t"] = optional_count(report.t);
  Json candidates = Json::array();
  for (const auto& [s, t] : report.st_candidates) {
    Json c;
    c["s"] = write_count(s);
    c["t"] = write_count(t);
    candidates.push_back(std::move(c));
  }
  out["st_candidates"] = std::move(candidates);
  out["kernel"] = report.kernel ? write(*report.kernel) : Json(nullptr);
  Json pic;
  pic["rank"] = write_count(report.pic_rank);
  pic["zp_rank"] = optional_count(report.pic_zp_rank);
  out["pic"] = std::move(pic);
  out["lim_kernel_rank_bound"] = optional_count(report.lim_kernel_rank_bound);
  Json coranks = Json::array();
  for (const auto& c : report.coranks) {
    Json e;
    e["prime"] = c.prime;
    e["quantity"] = c.quantity;
    e["value"] = write_count(c.value);
    coranks.push_back(std::move(e));
  }
  out["coranks"] = std::move(coranks);
  out["citations"] = report.citations;
  out["assumptions"] = report.assumptions;
  out["notes"] = report.notes;
  out["conditional"] = report.conditional;
  return out;
}

}  // namespace bk::io
