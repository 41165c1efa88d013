#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "gmss/generators.hpp"
#include "gmss/io.hpp"
#include "gmss/lawcheck.hpp"

using namespace gmss;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(GMSS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

const std::string ex3 = "4,-5,6,-3,2,0,-4,5,-6,5";
const std::string ex7 = "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))";

TEST(Cli, Mss) {
  EXPECT_EQ(cli("mss --algo linear --input " + quote(ex3)).out, "6\n");
  EXPECT_EQ(cli("mss --algo prefix --input " + quote(ex3)).out, "5\n");
  const auto r = cli("mss --algo linear --input ''");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, MssJson) {
  const auto r = cli("mss --algo spec --json --input " + quote(ex3));
  ASSERT_EQ(r.status, 0);
  const auto rep = nlohmann::json::parse(r.out).get<MssReport>();
  EXPECT_EQ(rep, (MssReport{"spec", 6, 10}));
}

TEST(Cli, MssAgreesAcrossAlgorithms) {
  Rng rng(stream_seed(42, "cli"));
  for (int i = 0; i < 100; ++i) {
    std::string in;
    for (Label x : random_labels(rng, 40, -50, 50)) in += (in.empty() ? "" : ",") + std::to_string(x);
    const auto spec = cli("mss --algo spec --input " + quote(in));
    ASSERT_EQ(spec.status, 0);
    EXPECT_EQ(cli("mss --algo quadratic --input " + quote(in)).out, spec.out) << in;
    EXPECT_EQ(cli("mss --algo linear --input " + quote(in)).out, spec.out) << in;
  }
}

TEST(Cli, Tree) {
  EXPECT_EQ(cli("tree --shape htree --semiring max-plus --input " + quote(ex7)).out, "11\n");
  EXPECT_EQ(cli("tree --shape htree --semiring max-plus --input '(leaf -7)'").out, "0\n");
  const auto check = cli("tree --shape htree --check --input " + quote(ex7));
  EXPECT_EQ(check.status, 0);
  EXPECT_EQ(check.out, "scan: 11\nbrute: 11\n");
  const auto j = cli("tree --shape htree --via brute --json --input " + quote(ex7));
  ASSERT_EQ(j.status, 0);
  const auto rep = nlohmann::json::parse(j.out).get<TreeReport>();
  EXPECT_EQ(rep.value, 11);
  EXPECT_EQ(rep.nodes, 5u);
  EXPECT_EQ(rep.via, "brute");
}

TEST(Cli, TreeGate) {
  const std::string t = "tree --shape htree --semiring plus-times --monad set --input " + quote(ex7);
  EXPECT_EQ(cli(t).status, 3);
  EXPECT_EQ(cli(t + " --force").status, 0);
}

TEST(Cli, Prune) {
  EXPECT_EQ(cli("prune --shape htree --count --input " + quote(ex7)).out, "11\n");
  EXPECT_EQ(cli("prune --shape htree --input '(leaf 2)'").out, "<E, (leaf 2)>\n");
  EXPECT_EQ(cli("prune --shape list --count --input '(cons 1 (cons 2 nil))'").out, "4\n");
  const auto j = cli("prune --shape htree --json --input '(leaf 2)'");
  ASSERT_EQ(j.status, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).get<PruneReport>(),
            (PruneReport{"htree", "bag", 2, {"E", "(leaf 2)"}}));
}

std::string complete_htree(int depth) {
  if (depth == 0) return "(leaf 1)";
  const auto k = complete_htree(depth - 1);
  return "(fork 1 " + k + " " + k + ")";
}

TEST(Cli, SizeGuard) {
  EXPECT_EQ(cli("prune --shape htree --count --input " + quote(complete_htree(5))).status, 5);
  EXPECT_EQ(cli("tree --shape htree --via brute --input " + quote(complete_htree(5))).status, 5);
  // The scan route never enumerates.
  EXPECT_EQ(cli("tree --shape htree --input " + quote(complete_htree(5))).status, 0);
}

TEST(Cli, Laws) {
  const auto r = cli("laws --id set-plus-nonidempotent");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("witness: [1]"), std::string::npos) << r.out;
  EXPECT_EQ(cli("laws --id nosuch").status, 2);
  const auto j = cli("laws --seed 42 --trials 20 --id scan-lemma --id prune-counts --json");
  ASSERT_EQ(j.status, 0);
  const auto reports = nlohmann::json::parse(j.out).get<std::vector<LawReport>>();
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].id, "scan-lemma");
  EXPECT_TRUE(reports[1].met());
}

TEST(Cli, Bench) {
  const auto one = cli("bench --sizes 100 --algos linear --json");
  ASSERT_EQ(one.status, 0);
  const auto rows = nlohmann::json::parse(one.out).get<std::vector<BenchRow>>();
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].algo, "linear");
  EXPECT_EQ(rows[0].n, 100u);
  EXPECT_EQ(cli("bench --sizes 800,400").status, 2);
  EXPECT_EQ(cli("bench --sizes 0").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("mss --input '1,x'").status, 2);
  EXPECT_EQ(cli("mss --algo bogus --input '1'").status, 2);
  EXPECT_EQ(cli("mss --shape htree --input '(leaf 1)'").status, 2);
  EXPECT_EQ(cli("tree --shape htree --input '(fork 1 (leaf 2))'").status, 2);
  EXPECT_EQ(cli("tree --shape list --input '(leaf 2)'").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, Overflow) {
  EXPECT_EQ(cli("mss --input '9223372036854775807,1'").status, 4);
  EXPECT_EQ(cli("tree --shape list --semiring plus-times --input "
                "'(cons 4294967296 (cons 4294967296 nil))'").status, 4);
}

TEST(Cli, FileInputAndLimit) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto small = dir / "gmss_cli_small.txt";
  std::ofstream(small) << ex3 << "\n";
  EXPECT_EQ(cli("mss --file " + small.string()).out, "6\n");

  const auto big = dir / "gmss_cli_big.txt";
  {
    std::ofstream f(big);
    for (std::size_t i = 0; i <= max_list_input; ++i) f << "0 ";
  }
  EXPECT_EQ(cli("mss --file " + big.string()).status, 2);
  EXPECT_EQ(cli("mss --file /nonexistent/gmss").status, 2);
  std::filesystem::remove(small);
  std::filesystem::remove(big);
}

}  // namespace
