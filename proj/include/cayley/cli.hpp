#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cayley/burnside.hpp"
#include "cayley/closedform.hpp"
#include "cayley/group.hpp"
#include "cayley/poly.hpp"

namespace cayley::cli {

enum class Relation { kWeak, kEquiv };
enum class Method { kBurnside, kClosed, kOracle };
enum class Format { kText, kCsv, kJson };

const char* to_string(Relation r);
const char* to_string(Method m);
Relation parse_relation(const std::string& s);
Method parse_method(const std::string& s);
Format parse_format(const std::string& s);

/// A parsed --group argument. `family` is "zn", "dn", "product", "table" or
/// "fixture"; `param` is n for zn and dn, 0 otherwise.
struct GroupSpec {
  std::string text;
  std::string family;
  std::uint64_t param = 0;
  GroupTable group;
};

/// Accepts zn:N, dn:N, product:SPEC,SPEC[,...], table:PATH, fixture:NAME.
/// Throws std::invalid_argument on malformed specs.
GroupSpec parse_group_spec(const std::string& text);

struct ComputeOptions {
  burnside::EngineOptions engine;
  closedform::Variant variant = closedform::Variant::kCorrected;
};

/// Psi for the spec by the chosen route. The closed route throws
/// std::invalid_argument when no closed form covers the group.
IntPoly compute(const GroupSpec& spec, Relation rel, Method method, const ComputeOptions& opts = {});

/// Closed form for zn:n, weak relation; std::nullopt when none applies.
std::optional<IntPoly> closed_weak_cyclic(std::uint64_t n, closedform::Variant v = closedform::Variant::kCorrected);

struct CensusReport {
  std::string group;
  std::uint64_t order = 0;
  Relation relation = Relation::kWeak;
  Method method = Method::kBurnside;
  IntPoly poly;
  BigInt count;
  std::optional<std::string> verdict;
};

std::string format_text(const CensusReport& r);
std::string csv_header();
std::string format_csv(const CensusReport& r);
nlohmann::json format_json(const CensusReport& r);

/// Entry point of the command-line tool; returns the exit status
/// (0 ok, 1 verification failure, 2 usage error, 3 resource bound).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
