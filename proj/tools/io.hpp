#pragma once

// JSON encoding of brauerkit values. Every integer is written as a decimal
// string; readers accept strings or JSON integers. Structural problems throw
// MalformedInput, mathematical ones DomainError.

#include "brauerkit/brauer.hpp"
#include "brauerkit/fgab.hpp"
#include "brauerkit/groupclass.hpp"
#include "brauerkit/prosys.hpp"
#include "brauerkit/rank1ext.hpp"
#include "brauerkit/submodq.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bk::io {

using Json = nlohmann::ordered_json;

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Json& field(const Json& j, const char* key);
bool has(const Json& j, const char* key);

BigInt read_bigint(const Json& j);
std::uint64_t read_count(const Json& j);
Prime read_prime(const Json& j);
bool read_bool(const Json& j);
std::string read_string(const Json& j);

Json write(const BigInt& x);
Json write_count(std::uint64_t n);

IntMatrix read_matrix(const Json& j);
Json write(const IntMatrix& M);

fgab::GroupStructure read_structure(const Json& j);
Json write(const fgab::GroupStructure& g);

groupclass::ExtCardinal read_cardinal(const Json& j);
Json write(const groupclass::ExtCardinal& c);

groupclass::GroupDescriptor read_descriptor(const Json& j);
Json write(const groupclass::GroupDescriptor& g);

rank1ext::EProfile read_eprofile(const Json& j);
Json write(const rank1ext::EProfile& M);

prosys::InverseSystemSpec read_system(const Json& j);
Json write(const prosys::InverseSystemSpec& spec);

submodq::TaggedGenerators read_generators(const Json& j);
Json write(const submodq::STPair& st);
Json write(const submodq::H2kDescription& h);

brauer::BrauerInvariants read_invariants(const Json& j);
Json write(const brauer::StructureReport& report);

}  // namespace bk::io
