#include "brauerkit/groupclass.hpp"
#include "io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace bk;
using namespace bk::groupclass;

namespace bk::groupclass {
void PrintTo(const GroupDescriptor& g, std::ostream* os) { *os << to_string(g); }
}  // namespace bk::groupclass

namespace {

io::Json load_appendix() {
  std::ifstream in(BRAUERKIT_SOURCE_DIR "/docs/derivations.md");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string open = "```json\n";
  const auto start = text.find(open);
  if (start == std::string::npos) return io::Json();
  const auto body = start + open.size();
  const auto end = text.find("```", body);
  return io::Json::parse(text.substr(body, end - body));
}

}  // namespace

TEST(Derivations, AppendixMatchesSixTermSequence) {
  const io::Json instances = load_appendix();
  ASSERT_TRUE(instances.is_array());
  ASSERT_GE(instances.size(), 10u);
  for (const auto& inst : instances) {
    SCOPED_TRACE(inst.at("name").get<std::string>());
    const Prime p = io::read_prime(inst.at("p"));
    const auto status = inst.at("status").get<std::string>();
    ASSERT_TRUE(status == "derived" || status == "extrapolated");
    const auto seq = six_term_mult_p(io::read_descriptor(inst.at("input")), p);
    ASSERT_TRUE(seq.consistent());
    const auto got = seq.terms();
    ASSERT_EQ(inst.at("terms").size(), got.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i], io::read_descriptor(inst.at("terms")[i])) << "term " << i + 1;
    }
  }
}
