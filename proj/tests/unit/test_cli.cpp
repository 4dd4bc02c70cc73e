#include "cli.hpp"
#include "io.hpp"

#include <gtest/gtest.h>

using bk::cli::run;
using bk::io::Json;

namespace {

Json ok(const std::string& sub, const std::string& payload) {
  auto out = run(sub, payload);
  EXPECT_EQ(out.exit_code, 0) << sub << " " << payload << "\n" << out.output;
  return Json::parse(out.output);
}

std::string error_code(const std::string& sub, const std::string& payload, int exit_code) {
  auto out = run(sub, payload);
  EXPECT_EQ(out.exit_code, exit_code) << sub << " " << payload << "\n" << out.output;
  return Json::parse(out.output).at("error").at("code").get<std::string>();
}

}  // namespace

TEST(Cli, Lim1Example) {
  auto j = ok("lim1", R"({"rank":1,"prefix":[],"tail":{"period":1,"diagonals":[[2]]}})");
  EXPECT_EQ(j["lim1"]["rational"], "continuum");
  EXPECT_EQ(j["lim1"]["pruefer"]["default"], "1");
  EXPECT_EQ(j["lim1"]["pruefer"]["exceptions"]["2"], "0");
  EXPECT_EQ(j["mittag_leffler"], false);
  auto oracle = ok("lim1", R"({"system":{"rank":1,"tail":{"period":1,"diagonals":[[2]]}},
                               "strategy":"ext_oracle"})");
  EXPECT_EQ(oracle["lim1"], j["lim1"]);
}

TEST(Cli, BrauerJacobianExample) {
  auto j = ok("brauer", R"({"rho_Xs":4,"rho_X":1,"I":1,"s":1,"p":19,"f":1,"h01":2,"h02":1})");
  EXPECT_EQ(j["report"]["r"], "3");
  EXPECT_EQ(j["report"]["t"], "2");
  EXPECT_EQ(j["report"]["kernel"]["pruefer"]["default"], "3");
  EXPECT_EQ(j["report"]["kernel"]["pruefer"]["exceptions"]["19"], "2");
  EXPECT_EQ(j["report"]["kernel"]["finite_p_placeholders"], Json::array({"19"}));
  auto minimal = ok("brauer", R"({"rho_Xs":4,"rho_X":1,"I":1,"s":1,"p":19})");
  EXPECT_EQ(minimal["report"]["kernel"], j["report"]["kernel"]);
}

TEST(Cli, ValuationLemmaExample) {
  auto j = ok("valuation", R"({"op":"lemma","p":2,"n":1,"s":2})");
  EXPECT_EQ(j["result"], true);
  EXPECT_EQ(ok("valuation", R"({"op":"factorial","p":2,"n":"10"})")["result"], "8");
  EXPECT_EQ(ok("valuation", R"({"op":"binomial","p":2,"z":8,"u":3})")["result"], "3");
  EXPECT_EQ(ok("valuation", R"({"op":"unit_power","p":2,"n":3,"N":10,"s":2})")["result"], true);
}

TEST(Cli, SnfAndGroup) {
  auto j = ok("snf", R"({"matrix":[[2,4],[6,8]]})");
  EXPECT_EQ(j["diagonal"], Json::array({"2", "4"}));
  EXPECT_EQ(j["cokernel"]["invariant_factors"], Json::array({"2", "4"}));
  auto big = ok("snf", R"({"matrix":[["123456789012345678901234567890","7"],["14","-98765432109876543210"]]})");
  EXPECT_EQ(big["rank"], "2");
  auto g = ok("group", R"({"op":"cokernel","matrix":[[2,0],[0,4]]})");
  EXPECT_EQ(g["structure"]["invariant_factors"], Json::array({"2", "4"}));
}

TEST(Cli, DescriptorSixTerm) {
  auto j = ok("descriptor", R"({"op":"six_term","p":2,"group":{"pruefer":{"exceptions":{"2":1}}}})");
  EXPECT_EQ(j["consistent"], true);
  EXPECT_EQ(j["terms"].size(), 6u);
  EXPECT_EQ(j["terms"][0]["padic"]["2"], "1");
}

TEST(Cli, ExtRank1AndSubmodule) {
  auto e = ok("ext-rank1", R"({"multipliers":{"prefix":[],"period":[5]}})");
  EXPECT_EQ(e["ext"]["pruefer"]["exceptions"]["5"], "0");
  auto q = ok("ext-rank1", R"({"op":"quotient","multipliers":{"prefix":[4,3],"period":[]}})");
  EXPECT_EQ(q["quotient"]["cyclic"], Json::array({"12"}));
  auto c = ok("classify-submodule",
              R"({"r":2,"p":5,"generators":[{"vector":["1","1"],"tag":"divisible"},
                  {"vector":["1","0"],"tag":"local"},{"vector":["0","1/3"],"tag":"local"}]})");
  EXPECT_EQ(c["result"]["s"], "1");
  EXPECT_EQ(c["result"]["t"], "1");
}

TEST(Cli, ReportSummary) {
  auto j = ok("report", R"({"jacobian_p":29})");
  EXPECT_NE(j["summary"].get<std::string>().find("r = 3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(error_code("lim1", R"({"rank":1,"tail":{"period":1,"diagonals":[[0]]}})", 1),
            "zero_determinant");
  EXPECT_EQ(error_code("brauer", R"({"op":"jacobian","p":7})", 1), "p_not_minus_one_mod_5");
  EXPECT_EQ(error_code("valuation", R"({"op":"factorial","p":6,"n":3})", 1), "not_prime");
  EXPECT_EQ(error_code("lim1", R"({"rank":1)", 2), "malformed_input");
  EXPECT_EQ(error_code("lim1", R"({"rank":1,"tail":{"period":2,"diagonals":[[2]]}})", 2),
            "malformed_input");
  EXPECT_EQ(error_code("snf", R"({"matrix":[[1.5]]})", 2), "malformed_input");
  EXPECT_EQ(error_code("nope", "{}", 2), "unknown_subcommand");
  auto domain = Json::parse(run("brauer", R"({"rho_Xs":4,"rho_X":1,"s":0})").output);
  EXPECT_FALSE(domain["error"]["citation"].get<std::string>().empty());
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"lim1", R"({"rank":2,"tail":{"period":1,"diagonals":[[1,6]]}})"},
      {"brauer", R"({"op":"jacobian","p":19})"},
      {"descriptor", R"({"op":"six_term","p":3,"group":{"free_rank":1,"pruefer":{"default":1}}})"},
  };
  for (const auto& [sub, payload] : cases) {
    const auto first = run(sub, payload);
    for (int k = 0; k < 3; ++k) {
      const auto again = run(sub, payload);
      ASSERT_EQ(again.exit_code, first.exit_code);
      ASSERT_EQ(again.output, first.output);
    }
  }
}

TEST(Cli, EverySubcommandPublishesASchema) {
  ASSERT_EQ(bk::cli::subcommands().size(), 10u);
  for (const auto& sub : bk::cli::subcommands()) {
    auto text = bk::cli::schema(sub);
    ASSERT_TRUE(text.has_value()) << sub;
    auto j = Json::parse(*text);
    EXPECT_TRUE(j.contains("$defs")) << sub;
  }
  EXPECT_FALSE(bk::cli::schema("nope").has_value());
}
