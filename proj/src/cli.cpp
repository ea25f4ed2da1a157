#include "cayley/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cayley/error.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/numtheory.hpp"
#include "cayley/oracle.hpp"
#include "cayley/reference_tables.hpp"
#include "cayley/verify.hpp"

namespace cayley::cli {
namespace {

using u64 = std::uint64_t;

// Thrown for bad command-line input; mapped to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

u64 parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(what + ": expected a positive integer, got '" + s + "'");
  return std::stoull(s);
}

bool is_prime_power(u64 n, u64& p, unsigned& m) {
  const auto f = nt::factorize(n);
  if (f.size() != 1) return false;
  p = f[0].prime;
  m = f[0].exponent;
  return true;
}

}  // namespace

const char* to_string(Relation r) { return r == Relation::kWeak ? "weak" : "equiv"; }

const char* to_string(Method m) {
  switch (m) {
    case Method::kBurnside:
      return "burnside";
    case Method::kClosed:
      return "closed";
    case Method::kOracle:
      return "oracle";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "weak") return Relation::kWeak;
  if (s == "equiv") return Relation::kEquiv;
  throw std::invalid_argument("relation must be weak or equiv");
}

Method parse_method(const std::string& s) {
  if (s == "burnside") return Method::kBurnside;
  if (s == "closed") return Method::kClosed;
  if (s == "oracle") return Method::kOracle;
  throw std::invalid_argument("method must be burnside, closed or oracle");
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw std::invalid_argument("format must be text, csv or json");
}

GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec '" + text + "' has no family prefix");
  const std::string family = text.substr(0, colon), rest = text.substr(colon + 1);
  GroupSpec spec{text, family, 0, cyclic(1)};
  if (family == "zn" || family == "dn") {
    spec.param = parse_count(rest, text);
    if (spec.param == 0) throw std::invalid_argument(text + ": n must be positive");
    if (spec.param > 4096) throw ResourceError(text + ": n is beyond the supported range");
    spec.group = family == "zn" ? cyclic(spec.param) : dihedral(spec.param);
  } else if (family == "product") {
    std::vector<GroupSpec> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = rest.find(',', pos);
      const std::string part = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (part.rfind("product:", 0) == 0) throw std::invalid_argument("nested product specs are not supported");
      parts.push_back(parse_group_spec(part));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.size() < 2) throw std::invalid_argument("product spec needs at least two factors");
    spec.group = parts[0].group;
    std::size_t order = parts[0].group.order();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      order *= parts[i].group.order();
      if (order > 4096) throw ResourceError(text + ": product order is beyond the supported range");
      spec.group = direct_product(spec.group, parts[i].group);
    }
  } else if (family == "table") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open group table file '" + rest + "'");
    spec.group = GroupTable::parse_text(in, rest);
  } else if (family == "fixture") {
    spec.group = fixtures::find(rest);
  } else {
    throw std::invalid_argument("unknown group family '" + family + "' (expected zn, dn, product, table, fixture)");
  }
  return spec;
}

std::optional<IntPoly> closed_weak_cyclic(u64 n, closedform::Variant v) {
  if (n == 2) return closedform::psi_equiv_cyclic(2);  // Aut(Z_2) is trivial
  u64 p = 0;
  unsigned m = 0;
  if (is_prime_power(n, p, m)) {
    if (p == 2) return closedform::psi_weak_cyclic_2m(m);
    if (m == 1) return closedform::psi_weak_zp(p);
    return closedform::psi_weak_cyclic_pm(p, m);
  }
  if (n % 2 == 0 && is_prime_power(n / 2, p, m) && p != 2) {
    if (m == 1) return closedform::psi_weak_z2p(p);
    return closedform::psi_weak_cyclic_2pm(p, m);
  }
  if (n % 4 == 0 && n / 4 > 2 && nt::is_prime(n / 4)) return closedform::psi_weak_cyclic_4p(n / 4);
  if (nt::is_square_free(n)) {
    closedform::SquareFreeSpec spec;
    spec.include_factor_two = n % 2 == 0;
    for (const auto& f : nt::factorize(n))
      if (f.prime != 2) spec.odd_primes.push_back(f.prime);
    return closedform::psi_weak_cyclic_squarefree(spec, v);
  }
  return std::nullopt;
}

IntPoly compute(const GroupSpec& spec, Relation rel, Method method, const ComputeOptions& opts) {
  const GroupTable& g = spec.group;
  switch (method) {
    case Method::kBurnside:
      return rel == Relation::kWeak ? burnside::psi_weak(g, opts.engine) : burnside::psi_equiv(g, opts.engine);
    case Method::kOracle: {
      const auto autos = rel == Relation::kWeak ? automorphisms(g, opts.engine.cap) : inner_automorphisms(g);
      return oracle::psi_from_census(oracle::orbit_census(g, autos));
    }
    case Method::kClosed:
      break;
  }
  const std::string none = "no closed form for " + std::string(to_string(rel)) + " classes of " + spec.text;
  if (rel == Relation::kEquiv) {
    if (spec.family == "zn") return closedform::psi_equiv_cyclic(spec.param);
    if (spec.family == "dn" && spec.param >= 3) return closedform::psi_equiv_dihedral(spec.param, opts.variant);
    if (g.is_abelian()) return closedform::psi_equiv_abelian(g);
    throw UsageError(none);
  }
  if (spec.family == "zn") {
    if (auto p = closed_weak_cyclic(spec.param, opts.variant)) return *p;
  } else if (spec.family == "dn" && spec.param >= 3 && nt::is_prime(spec.param)) {
    return closedform::psi_weak_dihedral_p(spec.param, opts.variant);
  }
  throw UsageError(none);
}

std::string format_text(const CensusReport& r) {
  std::string s = r.poly.to_string() + " (" + r.count.get_str() + " classes)";
  if (r.verdict) s += " [" + *r.verdict + "]";
  return s;
}

std::string csv_header() { return "n,label,relation,method,polynomial,count,verdict"; }

std::string format_csv(const CensusReport& r) {
  std::ostringstream os;
  os << r.order << "," << r.group << "," << to_string(r.relation) << "," << to_string(r.method) << ","
     << r.poly.to_string() << "," << r.count.get_str() << "," << r.verdict.value_or("");
  return os.str();
}

nlohmann::json format_json(const CensusReport& r) {
  nlohmann::json j;
  j["group"] = r.group;
  j["relation"] = to_string(r.relation);
  j["method"] = to_string(r.method);
  j["poly"] = to_json(r.poly);
  j["count"] = r.count.get_str();
  j["verdict"] = r.verdict ? nlohmann::json(*r.verdict) : nlohmann::json(nullptr);
  return j;
}

namespace {

std::string verdict_against(const IntPoly& mine, const IntPoly& other, const char* other_name) {
  if (mine == other) return std::string("match ") + other_name;
  return std::string("mismatch ") + other_name + " diff " + (mine - other).to_string();
}

// Verdict of a table row against the printed reference, when one exists.
std::optional<std::string> reference_verdict(u64 n, Relation rel, const IntPoly& poly) {
  const auto& rows = rel == Relation::kEquiv ? reference::equivalence_table() : reference::weak_table();
  for (const auto& row : rows) {
    if (row.n != n) continue;
    if (poly == row.poly() && poly.eval(1) == row.count) return std::string("match");
    if (!reference::printed_defect(row).empty()) return std::string("discrepancy(paper)");
    return "mismatch diff " + (poly - row.poly()).to_string();
  }
  return std::nullopt;
}

void emit(const std::vector<CensusReport>& reports, Format fmt, bool table_layout, std::ostream& out) {
  if (fmt == Format::kJson) {
    if (reports.size() == 1 && !table_layout) {
      out << format_json(reports[0]).dump() << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(format_json(r));
      out << arr.dump() << "\n";
    }
    return;
  }
  if (fmt == Format::kCsv) {
    out << csv_header() << "\n";
    for (const auto& r : reports) out << format_csv(r) << "\n";
    return;
  }
  for (const auto& r : reports) {
    if (table_layout)
      out << r.order << ", " << r.poly.to_string() << ", " << r.count.get_str() << "\n";
    else
      out << format_text(r) << "\n";
  }
}

struct Flags {
  std::string group;
  std::string relation = "weak";
  std::string method = "burnside";
  std::string format = "text";
  std::string cross_check;
  std::string suite;
  u64 max_n = 20;
  unsigned threads = 1;
  bool literal = false;
  bool verbose = false;
  bool relation_given = false;
};

ComputeOptions options(const Flags& f) {
  ComputeOptions o;
  o.engine.threads = std::max(1u, f.threads);
  o.variant = f.literal ? closedform::Variant::kLiteral : closedform::Variant::kCorrected;
  return o;
}

CensusReport census(const GroupSpec& spec, Relation rel, Method method, const ComputeOptions& opts) {
  if (spec.group.order() < 2) throw UsageError("group must have order ≥ 2");
  CensusReport r;
  r.group = spec.group.label();
  r.order = spec.group.order();
  r.relation = rel;
  r.method = method;
  r.poly = compute(spec, rel, method, opts);
  r.count = r.poly.eval(1);
  return r;
}

int cmd_psi(const Flags& f, bool count_only, std::ostream& out) {
  const GroupSpec spec = parse_group_spec(f.group);
  const Relation rel = parse_relation(f.relation);
  const Method method = parse_method(f.method);
  const Format fmt = parse_format(f.format);
  const ComputeOptions opts = options(f);
  CensusReport r = census(spec, rel, method, opts);
  if (!f.cross_check.empty()) {
    const Method other = parse_method(f.cross_check);
    r.verdict = verdict_against(r.poly, compute(spec, rel, other, opts), to_string(other));
  }
  if (count_only && fmt == Format::kText) {
    out << r.count.get_str() << "\n";
  } else {
    emit({r}, fmt, false, out);
  }
  return r.verdict && r.verdict->rfind("mismatch", 0) == 0 ? 1 : 0;
}

int cmd_table(const Flags& f, std::ostream& out) {
  if (f.max_n < 2) throw UsageError("--max-n must be at least 2");
  const Relation rel = parse_relation(f.relation);
  const Method method = parse_method(f.method);
  const Format fmt = parse_format(f.format);
  const ComputeOptions opts = options(f);
  std::vector<CensusReport> rows;
  for (u64 n = 2; n <= f.max_n; ++n) {
    CensusReport r = census(parse_group_spec("zn:" + std::to_string(n)), rel, method, opts);
    r.verdict = reference_verdict(n, rel, r.poly);
    rows.push_back(std::move(r));
  }
  emit(rows, fmt, true, out);
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const burnside::EngineOptions opts = options(f).engine;
  std::optional<Relation> rel;
  if (f.relation_given) rel = parse_relation(f.relation);
  verify::Report report;
  if (f.suite == "tables")
    report = verify::tables(f.max_n, rel, opts);
  else if (f.suite == "crossmethod")
    report = verify::crossmethod(f.max_n, opts);
  else if (f.suite == "closedforms")
    report = verify::closedforms(f.max_n, opts);
  else
    throw UsageError("suite must be tables, crossmethod or closedforms");
  out << report.to_text();
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree distributions of Cayley graph classes"};
  app.name("cayley-census");
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--relation", f.relation, "weak or equiv")->check(CLI::IsMember({"weak", "equiv"}));
    sub->add_option("--threads", f.threads, "worker threads for the engine");
    sub->add_flag("--verbose", f.verbose, "timings on standard error");
  };
  auto computing = [&](CLI::App* sub) {
    sub->add_option("--method", f.method, "burnside, closed or oracle")
        ->check(CLI::IsMember({"burnside", "closed", "oracle"}));
    sub->add_option("--format", f.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_flag("--literal-formulas", f.literal, "closed forms exactly as printed");
  };

  CLI::App* psi = app.add_subcommand("psi", "degree distribution polynomial of one group");
  psi->add_option("--group", f.group, "zn:N, dn:N, product:A,B, table:PATH or fixture:NAME")->required();
  psi->add_option("--cross-check", f.cross_check, "second method to compare against")
      ->check(CLI::IsMember({"burnside", "closed", "oracle"}));
  common(psi);
  computing(psi);

  CLI::App* count = app.add_subcommand("count", "number of classes of one group");
  count->add_option("--group", f.group, "group spec")->required();
  count->add_option("--cross-check", f.cross_check, "second method to compare against")
      ->check(CLI::IsMember({"burnside", "closed", "oracle"}));
  common(count);
  computing(count);

  CLI::App* table = app.add_subcommand("table", "circulant table for n = 2..max-n");
  table->add_option("--max-n", f.max_n, "largest n")->required();
  common(table);
  computing(table);

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", f.suite, "tables, crossmethod or closedforms")
      ->required()
      ->check(CLI::IsMember({"tables", "crossmethod", "closedforms"}));
  ver->add_option("--max-n", f.max_n, "largest group order");
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* sub : {psi, count, table, ver})
    if (sub->count("--relation")) f.relation_given = true;

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (psi->parsed())
      status = cmd_psi(f, false, out);
    else if (count->parsed())
      status = cmd_psi(f, true, out);
    else if (table->parsed())
      status = cmd_table(f, out);
    else
      status = cmd_verify(f, out);
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (f.verbose) {
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    err << "elapsed " << secs.count() << " s\n";
  }
  return status;
}

}  // namespace cayley::cli
