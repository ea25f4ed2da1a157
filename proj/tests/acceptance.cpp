// Acceptance checks, one line per criterion. `acceptance` runs all of them,
// `acceptance --criterion N` runs one; the exit status is nonzero on failure.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "cayley/burnside.hpp"
#include "cayley/closedform.hpp"
#include "cayley/error.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/oracle.hpp"
#include "cayley/reference_tables.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (!pass) why << "; ";
    pass = false;
    why << s;
  }
};

burnside::EngineOptions engine_opts() {
  burnside::EngineOptions o;
  o.threads = 2;
  return o;
}

std::vector<GroupTable> cyclic_dihedral(std::size_t max_order) {
  std::vector<GroupTable> out;
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back(cyclic(n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) out.push_back(dihedral(n));
  return out;
}

const verify::Item* find_item(const verify::Report& r, const std::string& name) {
  for (const auto& i : r.items)
    if (i.name == name) return &i;
  return nullptr;
}

// Table 1 over n = 2..20: exact rows everywhere but n=18; at n=18 engine and
// oracle agree, the count is 548 and the mismatch is reported as a discrepancy.
void table_equiv(Outcome& o) {
  const auto report = verify::tables(20, cli::Relation::kEquiv, engine_opts());
  std::vector<std::uint64_t> inexact;
  for (const auto& row : reference::equivalence_table()) {
    const GroupTable g = cyclic(row.n);
    const IntPoly got = burnside::psi_equiv(g, engine_opts());
    if (row.n != 18) {
      if (got != row.poly() || got.eval(1) != row.count) inexact.push_back(row.n);
      continue;
    }
    const IntPoly ref = oracle::psi_from_census(oracle::orbit_census(g, inner_automorphisms(g)));
    if (ref != got) o.fail("n=18 engine and oracle disagree");
    if (got.eval(1) != 548)
      o.fail("n=18 count is " + got.eval(1).get_str() + ", not 548 (engine = oracle = " + ref.eval(1).get_str() + ")");
    const auto* item = find_item(report, "tables/equiv n=18");
    if (!item || item->status != verify::Status::kDiscrepancy) o.fail("n=18 not reported as DISCREPANCY(paper)");
  }
  if (!inexact.empty()) {
    std::string s = "rows without exact match:";
    for (auto n : inexact) s += " n=" + std::to_string(n);
    o.fail(s);
  }
  if (report.count(verify::Status::kFail)) o.fail("verify reported FAIL rows");
}

void table_weak(Outcome& o) {
  const auto report = verify::tables(20, cli::Relation::kWeak, engine_opts());
  if (report.items.size() != 19) o.fail(std::to_string(report.items.size()) + " rows, expected 19");
  for (const auto& i : report.items)
    if (i.status != verify::Status::kPass) o.fail(i.name + ": " + i.detail);
  for (auto [n, c] : {std::pair{12, 38}, {16, 76}, {20, 314}})
    if (burnside::count_weak(cyclic(n), engine_opts()) != c) o.fail("count at n=" + std::to_string(n));
}

void crossmethod(Outcome& o) {
  const auto report = verify::crossmethod(30, engine_opts());
  std::size_t groups = 0;
  for (const auto& i : report.items) {
    groups += i.name.rfind("crossmethod/weak", 0) == 0;
    if (i.status != verify::Status::kPass) o.fail(i.name + ": " + i.detail);
  }
  // Z_2..Z_30, D_3..D_15, plus the fixtures not already among them
  if (groups < 29 + 13 + 20) o.fail("only " + std::to_string(groups) + " groups checked");
  if (o.pass) o.why << groups << " groups, both relations";
}

void closedforms(Outcome& o) {
  const auto report = verify::closedforms(128, engine_opts());
  for (const auto& i : report.items)
    if (i.status == verify::Status::kFail) o.fail(i.name + ": " + i.detail);
  for (const char* must : {"closed/weak p^m Z27", "closed/weak squarefree odd Z105", "closed/weak squarefree even Z42",
                           "closed/weak 4p Z28", "closed/weak dihedral D7", "closed/weak order 2p Z26"}) {
    const auto* i = find_item(report, must);
    if (!i || i->status != verify::Status::kPass) o.fail(std::string("missing or failing: ") + must);
  }
  if (o.pass)
    o.why << report.count(verify::Status::kPass) << " checks, " << report.count(verify::Status::kDiscrepancy)
          << " literal-variant discrepancies listed";
}

void fix_polys(Outcome& o) {
  auto groups = fixtures::small_groups();
  for (auto& g : cyclic_dihedral(30)) groups.push_back(std::move(g));
  std::size_t checked = 0;
  for (const auto& g : groups) {
    const burnside::MoebiusLattice lattice(g);
    const burnside::DirectFixPoly direct(g);
    for (const auto& a : automorphisms(g)) {
      const IntPoly m = lattice.fix_poly(a), d = direct(a);
      if (m != d) {
        o.fail(g.label() + ": direct " + d.to_string() + " vs lattice " + m.to_string());
        return;
      }
      // the conventions differ by sum of mu over the lattice, zero unless G is trivial
      if (g.order() > 1 &&
          lattice.moebius_sum(a, burnside::EmptySet::kIncluded) != lattice.moebius_sum(a, burnside::EmptySet::kExcluded)) {
        o.fail(g.label() + ": empty-set conventions differ");
        return;
      }
      ++checked;
    }
  }
  if (o.pass) o.why << checked << " automorphisms over " << groups.size() << " groups";
}

void moebius(Outcome& o) {
  const auto groups = fixtures::lattice_groups();
  std::size_t pairs = 0;
  for (const auto& g : groups) {
    if (g.order() > 64) continue;
    const auto subs = lattice_moebius(g, subgroups(g));
    for (const auto& k : subs) {
      long long s = 0;
      for (const auto& h : subs)
        if (k.members.is_subset_of(h.members)) s += h.moebius, ++pairs;
      if (s != (k.order() == g.order() ? 1 : 0)) {
        o.fail(g.label() + ": sum over a subgroup of order " + std::to_string(k.order()) + " is " + std::to_string(s));
        return;
      }
    }
  }
  if (o.pass) o.why << groups.size() << " groups, " << pairs << " containments";
}

void dihedral_adjudication(Outcome& o) {
  for (std::uint64_t n = 3; n <= 10; ++n)
    if (closedform::psi_equiv_dihedral(n) != burnside::psi_equiv(dihedral(n), engine_opts()))
      o.fail("equiv D" + std::to_string(n));
  for (std::uint64_t p : {3, 5, 7})
    if (closedform::psi_weak_dihedral_p(p) != burnside::psi_weak(dihedral(p), engine_opts()))
      o.fail("weak D" + std::to_string(p));
  const GroupTable d3 = dihedral(3);
  const IntPoly want = IntPoly::parse("x^2+2x^3+x^4+x^5");
  if (oracle::psi_from_census(oracle::orbit_census(d3, automorphisms(d3))) != want) o.fail("oracle D3");
  if (burnside::psi_weak(d3) != want) o.fail("engine D3");
  // every literal transcription that deviates must show up in the report
  const auto report = verify::closedforms(30, engine_opts());
  std::size_t listed = 0;
  for (std::uint64_t n = 3; n <= 10; ++n)
    if (closedform::psi_equiv_dihedral(n, closedform::Variant::kLiteral) != closedform::psi_equiv_dihedral(n)) {
      const auto* i = find_item(report, "closed/equiv dihedral D" + std::to_string(n) + " [literal]");
      if (!i || i->status != verify::Status::kDiscrepancy) o.fail("literal D" + std::to_string(n) + " not listed");
      ++listed;
    }
  for (std::uint64_t p : {3, 5, 7}) {
    const auto* i = find_item(report, "closed/weak dihedral D" + std::to_string(p) + " [literal]");
    if (!i || i->status != verify::Status::kDiscrepancy) o.fail("literal weak D" + std::to_string(p) + " not listed");
    ++listed;
  }
  if (o.pass) o.why << listed << " literal deviations listed";
}

void refinement(Outcome& o) {
  auto groups = fixtures::lattice_groups();
  for (auto& g : cyclic_dihedral(30)) groups.push_back(std::move(g));
  std::string skipped;
  for (const auto& g : groups) {
    IntPoly e, w;
    try {
      w = burnside::psi_weak(g, engine_opts());
    } catch (const ResourceError&) {
      skipped += " " + g.label();
      continue;
    }
    e = burnside::psi_equiv(g, engine_opts());
    if (!(e - w).all_nonnegative()) o.fail(g.label() + ": " + (e - w).to_string());
  }
  if (o.pass) o.why << groups.size() << " groups";
  if (!skipped.empty()) o.why << "; automorphism group over the search bound, skipped:" << skipped;
}

struct Criterion {
  const char* title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"Table 1 reproduction (equiv, n=2..20)", 10, table_equiv},
      {"Table 2 reproduction (weak, n=2..20)", 10, table_weak},
      {"cross-method engine vs oracle", 60, crossmethod},
      {"closed-form conformance", 60, closedforms},
      {"fix-polynomial equivalence", 60, fix_polys},
      {"Moebius recursion", 30, moebius},
      {"dihedral adjudication", 60, dihedral_adjudication},
      {"refinement a_k >= a^w_k", 60, refinement},
  };
  return all;
}

bool run_one(std::size_t k) {
  const auto& c = criteria()[k - 1];
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > c.budget_s) o.fail("took " + std::to_string(secs) + " s");
  std::printf("%s criterion %zu: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", k, c.title, secs, o.why.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const long k = std::strtol(argv[2], nullptr, 10);
    if (k < 1 || k > static_cast<long>(criteria().size())) return 2;
    return run_one(static_cast<std::size_t>(k)) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t k = 1; k <= criteria().size(); ++k) ok &= run_one(k);
  return ok ? 0 : 1;
}
