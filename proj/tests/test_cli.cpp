#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "codforge/cli.hpp"
#include "codforge/generators.hpp"
#include "codforge/serialize.hpp"
#include "codforge/structure.hpp"
#include "codforge/verify.hpp"
#include "support.hpp"

namespace codforge {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("codforge_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, GenerateText) {
  const Outcome o = run({"generate", "--family", "Gw", "--n", "3", "--w", "2"});
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 4u);
  for (const auto& l : ls) EXPECT_EQ(std::count(l.begin(), l.end(), ' '), 2);
  EXPECT_TRUE(parse_text(o.out).same_cells(gen_Gw(3, 2)));
}

TEST(Cli, GenerateJsonKeepsNames) {
  const Outcome o = run({"generate", "--family", "Hm", "--n", "4", "--format", "json"});
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  EXPECT_EQ(parse_json(o.out), gen_Hm(4));
}

TEST(Cli, GenerateNegativeWeight) {
  const Outcome o = run({"generate", "--family", "Gw", "--n", "3", "--w=-1"});
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  EXPECT_EQ(o.out, "0 0 0\n");
}

TEST(Cli, GenerateSeedScrambles) {
  const Outcome a = run({"generate", "--family", "Gw", "--n", "4", "--w", "2", "--seed", "7"});
  const Outcome b = run({"generate", "--family", "Gw", "--n", "4", "--w", "2", "--seed", "7"});
  ASSERT_EQ(a.status, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const CODMatrix m = parse_text(a.out);
  EXPECT_TRUE(is_cod(m));
  EXPECT_TRUE(equivalent(m, gen_Gw(4, 2)));
}

TEST(Cli, VerifyYesAndNo) {
  const Outcome yes = run({"verify"}, testing::kDesign433);
  EXPECT_EQ(yes.status, cli::kOk);
  EXPECT_EQ(lines(yes.out).front(), "COD: yes");

  const Outcome no = run({"verify"}, "z1 z2\nz2 z1\n");
  EXPECT_EQ(no.status, cli::kFalse);
  EXPECT_EQ(lines(no.out).front(), "COD: no");
  EXPECT_NE(no.out.find("Gram cell (1, 2)"), std::string::npos);

  const Outcome j = run({"verify", "--format", "json"}, "z1 z2\nz2 z1\n");
  EXPECT_EQ(j.status, cli::kFalse);
  EXPECT_NE(j.out.find("\"cod\":false"), std::string::npos);
}

TEST(Cli, AnalyzeReportsSignature) {
  const Outcome o = run({"analyze"}, testing::kDesign433);
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  EXPECT_NE(o.out.find("[4, 3, 3]"), std::string::npos);
  EXPECT_NE(o.out.find("t_1=1"), std::string::npos);
}

TEST(Cli, DecomposeParts) {
  const Outcome o = run({"decompose"}, "z1 z2\n-z2* z1*\n-z3* 0\n0 z3*\n");
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "# part 1: rows 1,2, class Gw{1}, [2, 2, 2]");
  EXPECT_EQ(ls[3], "# part 2: rows 3,4, class Gw{0}, [2, 2, 1]");
  EXPECT_EQ(ls[4], "-z1* 0");
}

TEST(Cli, CanonicalizeReachesGenerator) {
  const Outcome o = run({"canonicalize"}, testing::kSignedG23);
  ASSERT_EQ(o.status, cli::kOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_GE(ls.size(), 6u);
  EXPECT_EQ(ls[0].rfind("# part 1", 0), 0u);
  EXPECT_EQ(ls[1].rfind("# transcript: ", 0), 0u);
  std::string body;
  for (std::size_t i = 2; i < ls.size(); ++i) body += ls[i] + "\n";
  EXPECT_TRUE(parse_text(body).same_cells(gen_Gw(3, 1)));
}

TEST(Cli, EquivalentFilesAndStdin) {
  const std::string a = temp_file("a.txt", testing::kDesign433);
  const std::string b = temp_file("b.txt", testing::kSignedG23);
  const Outcome yes = run({"equivalent", a, b});
  EXPECT_EQ(yes.status, cli::kOk) << yes.err;
  EXPECT_EQ(lines(yes.out).front(), "equivalent: yes");

  const Outcome no = run({"equivalent", a}, serialize(gen_Gw(3, 0), Format::Text));
  EXPECT_EQ(no.status, cli::kFalse) << no.err;
  EXPECT_EQ(lines(no.out).front(), "equivalent: no");
}

TEST(Cli, Feasible) {
  const Outcome o = run({"feasible", "--p", "4", "--n", "3", "--k", "3"});
  EXPECT_EQ(o.status, cli::kOk);
  EXPECT_EQ(o.out, "t_1=1\n");
  const Outcome none = run({"feasible", "--p", "2", "--n", "3", "--k", "2"});
  EXPECT_EQ(none.status, cli::kFalse);
  EXPECT_EQ(none.out, "infeasible\n");
}

TEST(Cli, Tradeoff) {
  const Outcome o = run({"tradeoff", "--n", "14"});
  ASSERT_EQ(o.status, cli::kOk);
  const auto ls = lines(o.out);
  EXPECT_NE(std::find(ls.begin(), ls.end(), "7 6006 3432 4/7 0.5714"), ls.end());
  const Outcome csv = run({"tradeoff", "--n", "4", "--format", "csv"});
  ASSERT_EQ(csv.status, cli::kOk);
  EXPECT_EQ(lines(csv.out).front(), "w,p,k,rate_num,rate_den,rate_decimal");
  EXPECT_EQ(lines(csv.out).back().rfind("Hm,", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "Gw", "--n", "3"}).status, cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "Q", "--n", "3"}).status, cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "H", "--n", "6"}).status, cli::kUsage);
  EXPECT_EQ(run({"feasible", "--p", "4"}).status, cli::kUsage);
  EXPECT_EQ(run({"equivalent", "/nonexistent/codforge"}).status, cli::kUsage);
  const Outcome parse = run({"verify"}, "z1 q\n");
  EXPECT_EQ(parse.status, cli::kUsage);
  EXPECT_NE(parse.err.find("error"), std::string::npos);
}

}  // namespace
}  // namespace codforge
