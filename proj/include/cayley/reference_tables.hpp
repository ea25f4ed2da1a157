#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/poly.hpp"

namespace cayley::reference {

/// One printed row of a reference table, kept exactly as printed.
struct TableRow {
  std::uint64_t n;
  std::string polynomial;
  BigInt count;
  /// Nonempty when the printed row is known to be defective.
  std::string notes;

  /// Terms as written, duplicates kept.
  std::vector<Term> terms() const { return parse_terms(polynomial); }
  /// Like terms combined.
  IntPoly poly() const { return IntPoly::parse(polynomial); }
  bool flagged() const { return !notes.empty(); }
};

/// Circulants up to equivalence, n = 2..20.
const std::vector<TableRow>& equivalence_table();
/// Circulants up to weak equivalence, n = 2..20.
const std::vector<TableRow>& weak_table();

/// Parses the CSV layout n,polynomial,count,notes (header line required).
std::vector<TableRow> parse_table_csv(const std::string& text);

/// Self-consistency of a printed row: no degree written twice and the
/// coefficients sum to the printed count. Returns a description of the first
/// defect, or an empty string.
std::string printed_defect(const TableRow& row);

}  // namespace cayley::reference
