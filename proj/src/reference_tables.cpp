#include "cayley/reference_tables.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "reference_tables_data.hpp"

namespace cayley::reference {

std::vector<TableRow> parse_table_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,polynomial,count", 0) != 0)
    throw std::invalid_argument("table csv: missing header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      const std::size_t c = line.find(',', pos);
      if (c == std::string::npos) throw std::invalid_argument("table csv: short line '" + line + "'");
      f.push_back(line.substr(pos, c - pos));
      pos = c + 1;
    }
    f.push_back(line.substr(pos));
    rows.push_back({std::stoull(f[0]), f[1], BigInt(f[2]), f[3]});
  }
  return rows;
}

const std::vector<TableRow>& equivalence_table() {
  static const std::vector<TableRow> rows = parse_table_csv(data::kEquivalenceCsv);
  return rows;
}

const std::vector<TableRow>& weak_table() {
  static const std::vector<TableRow> rows = parse_table_csv(data::kWeakCsv);
  return rows;
}

std::string printed_defect(const TableRow& row) {
  std::set<std::size_t> seen;
  BigInt total = 0;
  for (const auto& t : row.terms()) {
    if (!seen.insert(t.degree).second) return "degree " + std::to_string(t.degree) + " is written twice";
    total += t.coeff;
  }
  if (total != row.count)
    return "coefficients sum to " + total.get_str() + " but the printed count is " + row.count.get_str();
  return {};
}

}  // namespace cayley::reference
