#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/burnside.hpp"
#include "cayley/cli.hpp"

namespace cayley::verify {

enum class Status { kPass, kFail, kDiscrepancy };

struct Item {
  Status status;
  std::string name;
  std::string detail;
};

struct Report {
  std::vector<Item> items;

  bool ok() const;
  std::size_t count(Status s) const;
  /// One line per item, then a summary line.
  std::string to_text() const;
};

/// Engine against the printed tables for n = 2..min(max_n, 20). A row that
/// disagrees is a discrepancy when the oracle agrees with the engine, and a
/// failure otherwise.
Report tables(std::uint64_t max_n, std::optional<cli::Relation> relation, const burnside::EngineOptions& opts = {});

/// Engine against oracle, both relations, for Z_n and D_n of order <= max_n
/// and every fixture group of order <= max_n.
Report crossmethod(std::uint64_t max_n, const burnside::EngineOptions& opts = {});

/// Every closed form against the engine on its test domain, restricted to
/// group order <= max_n. Literal transcriptions that disagree while the
/// corrected form agrees are reported as discrepancies.
Report closedforms(std::uint64_t max_n, const burnside::EngineOptions& opts = {});

const char* label(Status s);

}  // namespace cayley::verify
