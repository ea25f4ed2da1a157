#include "cayley/verify.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "cayley/error.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/oracle.hpp"
#include "cayley/reference_tables.hpp"

namespace cayley::verify {
namespace {

using closedform::Variant;
using u64 = std::uint64_t;

std::string describe(const IntPoly& p) { return p.to_string() + " (" + p.eval(1).get_str() + ")"; }

std::string mismatch(const IntPoly& expected, const IntPoly& got, const char* expected_name, const char* got_name) {
  return std::string(expected_name) + " " + describe(expected) + "; " + got_name + " " + describe(got) +
         "; difference " + (got - expected).to_string();
}

IntPoly engine(const GroupTable& g, cli::Relation rel, const burnside::EngineOptions& opts) {
  return rel == cli::Relation::kWeak ? burnside::psi_weak(g, opts) : burnside::psi_equiv(g, opts);
}

IntPoly oracle_psi(const GroupTable& g, cli::Relation rel, const burnside::EngineOptions& opts) {
  const auto autos = rel == cli::Relation::kWeak ? automorphisms(g, opts.cap) : inner_automorphisms(g);
  return oracle::psi_from_census(oracle::orbit_census(g, autos));
}

}  // namespace

const char* label(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kDiscrepancy:
      return "DISCREPANCY(paper)";
  }
  return "?";
}

bool Report::ok() const { return count(Status::kFail) == 0; }

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& i : items) n += i.status == s;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << label(i.status) << " " << i.name;
    if (!i.detail.empty()) os << ": " << i.detail;
    os << "\n";
  }
  os << "summary: " << count(Status::kPass) << " pass, " << count(Status::kFail) << " fail, "
     << count(Status::kDiscrepancy) << " discrepancy\n";
  return os.str();
}

Report tables(u64 max_n, std::optional<cli::Relation> relation, const burnside::EngineOptions& opts) {
  Report report;
  for (cli::Relation rel : {cli::Relation::kEquiv, cli::Relation::kWeak}) {
    if (relation && *relation != rel) continue;
    const auto& rows = rel == cli::Relation::kEquiv ? reference::equivalence_table() : reference::weak_table();
    const std::string table = rel == cli::Relation::kEquiv ? "tables/equiv" : "tables/weak";
    for (const auto& row : rows) {
      if (row.n > max_n) continue;
      const std::string name = table + " n=" + std::to_string(row.n);
      const GroupTable g = cyclic(row.n);
      const IntPoly got = engine(g, rel, opts);
      if (got == row.poly() && got.eval(1) == row.count) {
        report.items.push_back({Status::kPass, name, describe(got)});
        continue;
      }
      // Disagreement with the printed row: the exhaustive oracle decides
      // whether the engine or the printed row is at fault.
      const IntPoly ref = oracle_psi(g, rel, opts);
      if (ref != got) {
        report.items.push_back({Status::kFail, name,
                                mismatch(row.poly(), got, "printed", "computed") + "; oracle " + describe(ref)});
        continue;
      }
      const std::string defect = reference::printed_defect(row);
      const std::string why = defect.empty() ? "printed row disagrees with the exhaustive count"
                                             : "printed row is self-inconsistent: " + defect;
      report.items.push_back({Status::kDiscrepancy, name,
                              why + "; printed " + row.polynomial + " (" + row.count.get_str() +
                                  "); engine and oracle agree on " + describe(got) + "; difference " +
                                  (got - row.poly()).to_string()});
    }
  }
  return report;
}

Report crossmethod(u64 max_n, const burnside::EngineOptions& opts) {
  Report report;
  std::vector<GroupTable> groups;
  std::set<std::string> labels;
  auto add = [&](GroupTable g) {
    if (g.order() <= max_n && labels.insert(g.label()).second) groups.push_back(std::move(g));
  };
  for (u64 n = 2; n <= max_n; ++n) add(cyclic(n));
  for (u64 n = 3; 2 * n <= max_n; ++n) add(dihedral(n));
  for (auto& g : fixtures::small_groups()) add(std::move(g));

  for (const auto& g : groups)
    for (cli::Relation rel : {cli::Relation::kWeak, cli::Relation::kEquiv}) {
      const std::string name = std::string("crossmethod/") + cli::to_string(rel) + " " + g.label();
      const IntPoly a = engine(g, rel, opts), b = oracle_psi(g, rel, opts);
      if (a == b)
        report.items.push_back({Status::kPass, name, describe(a)});
      else
        report.items.push_back({Status::kFail, name, mismatch(b, a, "oracle", "engine")});
    }
  return report;
}

Report closedforms(u64 max_n, const burnside::EngineOptions& opts) {
  Report report;

  // Compares a closed form against the engine. `literal`, when given, is the
  // as-printed variant of the same formula.
  auto check = [&](const std::string& name, const GroupTable& g, cli::Relation rel,
                   const std::function<IntPoly(Variant)>& formula, bool has_literal) {
    if (g.order() > max_n) return;
    const IntPoly want = engine(g, rel, opts);
    IntPoly got;
    try {
      got = formula(Variant::kCorrected);
    } catch (const InternalError& e) {
      report.items.push_back({Status::kFail, name, e.what()});
      return;
    }
    if (got != want) {
      report.items.push_back({Status::kFail, name, mismatch(want, got, "engine", "closed form")});
      return;
    }
    report.items.push_back({Status::kPass, name, describe(got)});
    if (!has_literal) return;
    try {
      const IntPoly lit = formula(Variant::kLiteral);
      if (lit != want)
        report.items.push_back({Status::kDiscrepancy, name + " [literal]",
                                "as printed gives " + describe(lit) + "; engine " + describe(want)});
    } catch (const InternalError& e) {
      report.items.push_back({Status::kDiscrepancy, name + " [literal]",
                              std::string("as printed is not integral (") + e.what() + "); engine " + describe(want)});
    }
  };
  auto plain = [](std::function<IntPoly()> f) { return [f](Variant) { return f(); }; };
  const auto weak = cli::Relation::kWeak, equiv = cli::Relation::kEquiv;

  for (auto& g : fixtures::small_groups())
    if (g.is_abelian())
      check("closed/equiv abelian " + g.label(), g, equiv, plain([&g] { return closedform::psi_equiv_abelian(g); }),
            false);
  for (u64 n = 2; n <= 30; ++n)
    check("closed/equiv cyclic Z" + std::to_string(n), cyclic(n), equiv,
          plain([n] { return closedform::psi_equiv_cyclic(n); }), false);
  for (u64 n = 3; n <= 10; ++n) {
    check("closed/equiv dihedral D" + std::to_string(n), dihedral(n), equiv,
          [n](Variant v) { return closedform::psi_equiv_dihedral(n, v); }, true);
    if (2 * n <= max_n) {
      const std::string name = "closed/equiv dihedral count D" + std::to_string(n);
      const BigInt want = burnside::count_equiv(dihedral(n), opts);
      const BigInt got = closedform::count_equiv_dihedral(n);
      if (got == want)
        report.items.push_back({Status::kPass, name, got.get_str()});
      else
        report.items.push_back({Status::kFail, name, "engine " + want.get_str() + "; closed form " + got.get_str()});
    }
  }

  for (unsigned m = 2; m <= 5; ++m)
    check("closed/weak 2^m Z" + std::to_string(1u << m), cyclic(1u << m), weak,
          plain([m] { return closedform::psi_weak_cyclic_2m(m); }), false);
  const std::vector<std::pair<u64, unsigned>> prime_powers{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
  for (auto [p, m] : prime_powers) {
    u64 n = 1;
    for (unsigned i = 0; i < m; ++i) n *= p;
    check("closed/weak p^m Z" + std::to_string(n), cyclic(n), weak,
          plain([p = p, m = m] { return closedform::psi_weak_cyclic_pm(p, m); }), false);
  }
  for (u64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29})
    for (unsigned m = 1; m <= 3; ++m) {
      u64 n = 2;
      for (unsigned i = 0; i < m; ++i) n *= p;
      if (n > 60) break;
      check("closed/weak 2p^m Z" + std::to_string(n), cyclic(n), weak,
            plain([p, m] { return closedform::psi_weak_cyclic_2pm(p, m); }), false);
    }
  for (u64 p : {3, 5, 7})
    check("closed/weak 4p Z" + std::to_string(4 * p), cyclic(4 * p), weak,
          plain([p] { return closedform::psi_weak_cyclic_4p(p); }), false);

  const std::vector<std::vector<u64>> odd_sets{{3, 5}, {3, 7}, {3, 11}, {5, 7}, {3, 5, 7}};
  for (const auto& ps : odd_sets)
    for (bool two : {false, true}) {
      u64 n = two ? 2 : 1;
      for (u64 p : ps) n *= p;
      if (two && n > 42) continue;
      check(std::string("closed/weak squarefree ") + (two ? "even" : "odd") + " Z" + std::to_string(n), cyclic(n),
            weak, [ps, two](Variant v) { return closedform::psi_weak_cyclic_squarefree({ps, two}, v); }, two);
    }
  for (u64 p : {3, 5, 7})
    check("closed/weak squarefree even Z" + std::to_string(2 * p), cyclic(2 * p), weak,
          [p](Variant v) { return closedform::psi_weak_cyclic_squarefree({{p}, true}, v); }, true);

  for (u64 p : {3, 5, 7, 11, 13}) {
    check("closed/weak order p Z" + std::to_string(p), cyclic(p), weak,
          plain([p] { return closedform::psi_weak_zp(p); }), false);
    check("closed/weak order 2p Z" + std::to_string(2 * p), cyclic(2 * p), weak,
          plain([p] { return closedform::psi_weak_z2p(p); }), false);
  }
  for (u64 p : {3, 5, 7})
    check("closed/weak dihedral D" + std::to_string(p), dihedral(p), weak,
          [p](Variant v) { return closedform::psi_weak_dihedral_p(p, v); }, true);

  // Specializations of the square-free formula to a single prime.
  for (u64 p : {3, 5, 7, 11, 13}) {
    if (2 * p > max_n) continue;
    const std::string name = "closed/consistency squarefree vs order p, 2p (p=" + std::to_string(p) + ")";
    const IntPoly a = closedform::psi_weak_cyclic_squarefree({{p}, false}), b = closedform::psi_weak_zp(p);
    const IntPoly c = closedform::psi_weak_cyclic_squarefree({{p}, true}), d = closedform::psi_weak_z2p(p);
    if (a == b && c == d)
      report.items.push_back({Status::kPass, name, ""});
    else
      report.items.push_back({Status::kFail, name, "odd " + a.to_string() + " vs " + b.to_string() + "; even " +
                                                       c.to_string() + " vs " + d.to_string()});
  }
  return report;
}

}  // namespace cayley::verify
