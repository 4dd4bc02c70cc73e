#include "cli.hpp"

#include "io.hpp"
#include "schemas.hpp"

#include "brauerkit/valuation.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace bk::cli {

using io::field;
using io::has;
using io::Json;
using io::write;
using io::write_count;

namespace {

std::string op_of(const Json& in, const char* fallback) {
  return has(in, "op") ? io::read_string(in["op"]) : std::string(fallback);
}

[[noreturn]] void unknown_op(const std::string& op) {
  throw io::MalformedInput("unknown op '" + op + "'");
}

Json snf(const Json& in) {
  IntMatrix M = io::read_matrix(has(in, "matrix") ? in["matrix"] : in);
  auto form = fgab::smith_normal_form(M);
  Json out;
  out["U"] = write(form.U);
  out["D"] = write(form.D);
  out["V"] = write(form.V);
  out["rank"] = write_count(static_cast<std::uint64_t>(form.rank));
  Json diagonal = Json::array();
  for (const BigInt& d : form.diagonal()) diagonal.push_back(d.get_str());
  out["diagonal"] = std::move(diagonal);
  out["cokernel"] = write(fgab::cokernel_structure(M));
  return out;
}

Json group(const Json& in) {
  const std::string op = op_of(in, "cokernel");
  Json out;
  out["op"] = op;
  if (op == "cokernel") {
    out["structure"] = write(fgab::cokernel_structure(io::read_matrix(field(in, "matrix"))));
  } else if (op == "presentation") {
    fgab::GroupPresentation pres(io::read_count(field(in, "generators")),
                                 io::read_matrix(field(in, "relations")));
    out["structure"] = write(fgab::structure(pres));
  } else if (op == "finite_coefficients") {
    auto fc = fgab::finite_coefficients(io::read_structure(field(in, "group")),
                                        io::read_bigint(field(in, "m")));
    out["quotient"] = write(fc.quotient);
    out["torsion"] = write(fc.torsion);
  } else if (op == "direct_sum") {
    out["structure"] = write(fgab::direct_sum(io::read_structure(field(in, "a")),
                                              io::read_structure(field(in, "b"))));
  } else if (op == "check_exact") {
    out["exact"] = fgab::check_exact_at(io::read_matrix(field(in, "f")),
                                        io::read_matrix(field(in, "g")));
  } else {
    unknown_op(op);
  }
  return out;
}

Json descriptor(const Json& in) {
  using namespace groupclass;
  const std::string op = op_of(in, "normalize");
  auto G = [&] { return io::read_descriptor(field(in, "group")); };
  auto p = [&] { return io::read_prime(field(in, "p")); };
  Json out;
  out["op"] = op;
  if (op == "normalize") {
    out["result"] = write(G());
  } else if (op == "tate_module") {
    out["result"] = write(tate_module(G(), p()));
  } else if (op == "max_p_divisible") {
    out["result"] = write(max_p_divisible(G(), p()));
  } else if (op == "finite_coefficients") {
    auto j = io::read_count(field(in, "j"));
    if (j == 0 || j > 1000000) throw DomainError("invalid_exponent", "j must be in [1, 10^6]");
    auto fc = finite_coefficients_descriptor(G(), p(), static_cast<unsigned>(j));
    out["quotient"] = write(fc.quotient);
    out["torsion"] = write(fc.torsion);
  } else if (op == "lim1_mult_p") {
    out["result"] = write(lim1_mult_p(G(), p()));
  } else if (op == "six_term") {
    auto seq = six_term_mult_p(G(), p());
    Json terms = Json::array();
    for (const auto& t : seq.terms()) terms.push_back(write(t));
    out["terms"] = std::move(terms);
    Json checks = Json::array();
    for (const auto& c : seq.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      checks.push_back(std::move(e));
    }
    out["checks"] = std::move(checks);
    out["consistent"] = seq.consistent();
  } else if (op == "compllemma_cokernel") {
    out["result"] = write(compllemma_cokernel(G(), io::read_descriptor(field(in, "next")), p()));
  } else if (op == "extension_classes") {
    Json classes = Json::array();
    for (const auto& d : extension_classes(G(), io::read_structure(field(in, "finite")))) {
      classes.push_back(write(d));
    }
    out["classes"] = std::move(classes);
  } else if (op == "direct_sum") {
    out["result"] = write(direct_sum(G(), io::read_descriptor(field(in, "other"))));
  } else {
    unknown_op(op);
  }
  return out;
}

prosys::Lim1Strategy read_strategy(const Json& in) {
  if (!has(in, "strategy")) return prosys::Lim1Strategy::recursive;
  std::string s = io::read_string(in["strategy"]);
  if (s == "recursive") return prosys::Lim1Strategy::recursive;
  if (s == "ext_oracle") return prosys::Lim1Strategy::ext_oracle;
  throw io::MalformedInput("strategy must be 'recursive' or 'ext_oracle'");
}

prosys::ValidatedSystem read_validated(const Json& in) {
  auto spec = io::read_system(has(in, "system") ? in["system"] : in);
  if (has(in, "drop_prefix")) spec = prosys::drop_prefix(spec, io::read_count(in["drop_prefix"]));
  return prosys::validate_system(spec);
}

Json lim1(const Json& in) {
  auto system = read_validated(in);
  auto cls = prosys::lim1_classify(system, read_strategy(in));
  Json out;
  out["lim"] = write(prosys::lim_structure(system));
  out["lim1"] = write(cls);
  out["mittag_leffler"] = prosys::is_mittag_leffler(system);
  out["single_prime"] = system.single_prime ? write_count(*system.single_prime) : Json(nullptr);
  return out;
}

Json ml(const Json& in) {
  auto system = read_validated(in);
  Json out;
  out["mittag_leffler"] = prosys::is_mittag_leffler(system);
  Json cokernels = Json::array();
  for (const auto& g : system.prefix_cokernels) cokernels.push_back(write(g));
  for (const auto& g : system.tail_cokernels) cokernels.push_back(write(g));
  out["cokernels"] = std::move(cokernels);
  return out;
}

Json ext_rank1(const Json& in) {
  const std::string op = op_of(in, "ext");
  // M/ℤ sees the finite exponents, so the quotient works on the raw profile.
  const bool raw = op == "quotient";
  rank1ext::EProfile M;
  if (has(in, "multipliers")) {
    const Json& m = in["multipliers"];
    std::vector<BigInt> prefix, period;
    if (has(m, "prefix")) {
      if (!m["prefix"].is_array()) throw io::MalformedInput("prefix must be an array");
      for (const auto& x : m["prefix"]) prefix.push_back(io::read_bigint(x));
    }
    const Json& pj = field(m, "period");
    if (!pj.is_array()) throw io::MalformedInput("period must be an array");
    for (const auto& x : pj) period.push_back(io::read_bigint(x));
    M = raw ? rank1ext::raw_eprofile_from_multipliers(prefix, period)
            : rank1ext::eprofile_from_multipliers(prefix, period);
  } else {
    M = io::read_eprofile(field(in, "profile"));
    if (!raw) M = M.canonical();
  }
  Json out;
  out["op"] = op;
  out["profile"] = write(M);
  if (op == "ext") {
    out["is_free"] = rank1ext::is_free(M);
    out["ext"] = write(rank1ext::ext_to_Z(M));
    out["hom"] = write(rank1ext::hom_to_Z(M));
  } else if (op == "quotient") {
    out["quotient"] = write(rank1ext::quotient_mod_Z(M));
  } else {
    unknown_op(op);
  }
  return out;
}

Json classify_submodule(const Json& in) {
  const std::string op = op_of(in, "classify");
  Json out;
  out["op"] = op;
  if (op == "classify") {
    out["result"] = write(submodq::classify_submodule(io::read_generators(in)));
  } else if (op == "h2k") {
    out["result"] = write(submodq::h2k_structure(io::read_count(field(in, "r")),
                                                 io::read_count(field(in, "s"))));
  } else if (op == "kernel") {
    out["result"] = write(submodq::brauer_kernel_structure(io::read_count(field(in, "s")),
                                                           io::read_count(field(in, "t")),
                                                           io::read_prime(field(in, "p"))));
  } else {
    unknown_op(op);
  }
  return out;
}

unsigned read_small(const Json& j, const char* what, std::uint64_t limit) {
  auto v = io::read_count(j);
  if (v > limit) {
    throw DomainError("too_large", std::string(what) + " exceeds " + std::to_string(limit));
  }
  return static_cast<unsigned>(v);
}

Json valuation(const Json& in) {
  const std::string op = io::read_string(field(in, "op"));
  const Prime p = io::read_prime(field(in, "p"));
  Json out;
  out["op"] = op;
  if (op == "factorial") {
    out["result"] = write(pval::vp_factorial(p, io::read_bigint(field(in, "n"))));
  } else if (op == "binomial") {
    out["result"] = write(pval::vp_binomial(p, io::read_bigint(field(in, "z")),
                                            io::read_bigint(field(in, "u"))));
  } else if (op == "lemma") {
    out["result"] = pval::check_binomial_lemma(p, read_small(field(in, "n"), "n", 64),
                                               read_small(field(in, "s"), "s", 20));
  } else if (op == "unit_power") {
    pval::TruncatedPolyRing ring{p, read_small(field(in, "n"), "n", 256),
                                 read_small(field(in, "N"), "N", 4096)};
    out["result"] = pval::unit_power_check(ring, read_small(field(in, "s"), "s", 20));
  } else {
    unknown_op(op);
  }
  return out;
}

Json brauer_json(const Json& in) {
  const std::string op = op_of(in, "report");
  Json out;
  out["op"] = op;
  if (op == "report") {
    out["report"] = write(brauer::invariant_report(io::read_invariants(in)));
  } else if (op == "jacobian") {
    out["report"] = write(brauer::jacobian_example_report(io::read_prime(field(in, "p"))));
  } else if (op == "compute_r") {
    out["result"] = write_count(brauer::compute_r(io::read_count(field(in, "rho_Xs")),
                                                  io::read_count(field(in, "rho_X")),
                                                  io::read_count(field(in, "I"))));
  } else if (op == "corank") {
    out["result"] = write_count(brauer::corank_vl_br(
        io::read_bool(field(in, "l_equals_p")), io::read_count(field(in, "f")),
        io::read_count(field(in, "h01")), io::read_count(field(in, "dim"))));
  } else if (op == "corank_relation") {
    out["result"] = write_count(brauer::corank_relation(io::read_count(field(in, "r")),
                                                        io::read_count(field(in, "dimVlBrXs"))));
  } else if (op == "k3_abelian") {
    out["result"] = write(brauer::k3_abelian_structure(io::read_count(field(in, "r")),
                                                       io::read_prime(field(in, "p"))));
  } else if (op == "picard") {
    const std::string shape = io::read_string(field(in, "shape"));
    brauer::SurfaceShape s;
    if (shape == "simple") {
      s = brauer::SimpleSurface{};
    } else if (shape == "product") {
      s = brauer::ProductSurface{io::read_bigint(field(in, "count1")),
                                 io::read_bigint(field(in, "count2")),
                                 io::read_prime(field(in, "p"))};
    } else {
      throw io::MalformedInput("shape must be 'simple' or 'product'");
    }
    out["result"] = write_count(brauer::abelian_surface_picard_rank(s));
  } else {
    unknown_op(op);
  }
  return out;
}

std::string summary(const brauer::StructureReport& r) {
  std::ostringstream s;
  s << "r = " << r.r;
  if (r.s && r.t) {
    s << ", s = " << *r.s << ", t = " << *r.t;
  } else {
    s << ", s undetermined (" << r.st_candidates.size() << " candidates)";
  }
  if (r.kernel) s << "; ker(Br(model) -> Br(special fiber)) = " << groupclass::to_string(*r.kernel);
  s << "; Pic(X) rank " << r.pic_rank;
  if (r.pic_zp_rank) s << ", Z_p-rank " << *r.pic_zp_rank;
  if (r.lim_kernel_rank_bound) s << "; lim-kernel rank <= " << *r.lim_kernel_rank_bound;
  s << (r.conditional ? "; conditional on finiteness of Br(special fiber)" : "; unconditional");
  return s.str();
}

Json report(const Json& in) {
  brauer::StructureReport r = has(in, "jacobian_p")
                                  ? brauer::jacobian_example_report(io::read_prime(in["jacobian_p"]))
                                  : brauer::invariant_report(io::read_invariants(in));
  Json out;
  out["summary"] = summary(r);
  out["report"] = write(r);
  return out;
}

const std::map<std::string, std::function<Json(const Json&)>>& handlers() {
  static const std::map<std::string, std::function<Json(const Json&)>> table = {
      {"snf", snf},
      {"group", group},
      {"descriptor", descriptor},
      {"lim1", lim1},
      {"ml", ml},
      {"ext-rank1", ext_rank1},
      {"classify-submodule", classify_submodule},
      {"valuation", valuation},
      {"brauer", brauer_json},
      {"report", report},
  };
  return table;
}

std::string error_document(const std::string& code, const std::string& message,
                           const std::string& citation) {
  Json err;
  err["code"] = code;
  err["message"] = message;
  err["citation"] = citation;
  Json out;
  out["error"] = std::move(err);
  return out.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "snf", "group", "descriptor", "lim1", "ml", "ext-rank1",
      "classify-submodule", "valuation", "brauer", "report"};
  return names;
}

std::optional<std::string> schema(const std::string& subcommand) {
  for (const auto& [name, text] : embedded_schemas()) {
    if (name == subcommand) return std::string(text);
  }
  return std::nullopt;
}

Outcome run(const std::string& subcommand, const std::string& payload) {
  auto it = handlers().find(subcommand);
  if (it == handlers().end()) {
    return {2, error_document("unknown_subcommand", "unknown subcommand '" + subcommand + "'", "")};
  }
  try {
    Json in = Json::parse(payload);
    if (!in.is_object()) throw io::MalformedInput("payload must be a JSON object");
    return {0, it->second(in).dump(2) + "\n"};
  } catch (const DomainError& e) {
    return {1, error_document(e.code(), e.what(), e.citation())};
  } catch (const io::MalformedInput& e) {
    return {2, error_document("malformed_input", e.what(), "")};
  } catch (const Json::exception& e) {
    return {2, error_document("malformed_input", e.what(), "")};
  } catch (const std::invalid_argument& e) {
    return {2, error_document("malformed_input", e.what(), "")};
  }
}

}  // namespace bk::cli
