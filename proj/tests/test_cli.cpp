#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cayley/cli.hpp"

using namespace cayley;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "cayley-census");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PsiText) {
  auto r = run({"psi", "--group", "zn:12", "--relation", "weak", "--method", "burnside", "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x^2+x^3+6x^4+6x^5+7x^6+7x^7+4x^8+4x^9+x^10+x^11 (38 classes)\n");
  r = run({"psi", "--group", "dn:3", "--relation", "weak", "--method", "oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find(' ')), "x^2+2x^3+x^4+x^5");
}

TEST(Cli, MethodsAgree) {
  for (const char* g : {"zn:12", "zn:30", "dn:5", "product:zn:2,zn:4"}) {
    const auto a = run({"psi", "--group", g, "--method", "burnside"});
    const auto b = run({"psi", "--group", g, "--method", "oracle"});
    EXPECT_EQ(a.out, b.out) << g;
  }
  const auto c = run({"psi", "--group", "zn:30", "--method", "closed"});
  EXPECT_EQ(c.out, run({"psi", "--group", "zn:30"}).out);
  const auto x = run({"psi", "--group", "zn:12", "--cross-check", "oracle"});
  EXPECT_EQ(x.code, 0) << x.err;
}

TEST(Cli, UsageErrors) {
  auto r = run({"psi", "--group", "zn:1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("group must have order ≥ 2"), std::string::npos);
  EXPECT_EQ(run({"psi", "--group", "zz:4"}).code, 2);
  EXPECT_EQ(run({"psi", "--group", "zn:4", "--relation", "iso"}).code, 2);
  EXPECT_EQ(run({"psi", "--group", "zn:36", "--method", "closed"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ResourceBound) {
  const auto r = run({"psi", "--group", "zn:64", "--method", "oracle"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, Count) {
  const auto r = run({"count", "--group", "zn:12", "--relation", "equiv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("54"), std::string::npos);
}

TEST(Cli, Formats) {
  auto r = run({"psi", "--group", "zn:5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("count"), "2");
  EXPECT_EQ(poly_from_json(j.at("poly")), IntPoly::parse("x^2+x^4"));
  r = run({"psi", "--group", "zn:5", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), cli::csv_header());
}

TEST(Cli, Table) {
  auto r = run({"table", "--max-n", "2", "--relation", "weak"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2, x, 1\n");
  r = run({"table", "--max-n", "20", "--relation", "equiv", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;  // header
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 19);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--suite", "crossmethod", "--max-n", "20"}).code, 0);
  const auto t = run({"verify", "--suite", "tables", "--max-n", "20"});
  EXPECT_EQ(t.code, 0) << t.out;
  EXPECT_NE(t.out.find("DISCREPANCY(paper) tables/equiv n=18"), std::string::npos);
  EXPECT_EQ(t.out.find("FAIL"), std::string::npos);
  const auto c = run({"verify", "--suite", "closedforms", "--max-n", "30"});
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_NE(c.out.find("[literal]"), std::string::npos);
}

TEST(Cli, TableFile) {
  const std::string path = testing::TempDir() + "/z3.txt";
  std::ofstream(path) << "3\n0 1 2\n1 2 0\n2 0 1\n";
  const std::string arg = "table:" + path;
  const auto r = run({"psi", "--group", arg.c_str()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x^2 (1 classes)\n");
}

TEST(Cli, GroupSpecs) {
  EXPECT_EQ(cli::parse_group_spec("product:zn:2,dn:3").group.order(), 12u);
  EXPECT_EQ(cli::parse_group_spec("fixture:Q8").group.order(), 8u);
  EXPECT_EQ(cli::parse_group_spec("dn:4").param, 4u);
  EXPECT_THROW(cli::parse_group_spec("zn:"), std::invalid_argument);
  EXPECT_THROW(cli::parse_group_spec("zn:-3"), std::invalid_argument);
}
