#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using pushall::cli::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = pushall::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Decide) {
  auto r = run({"decide", "2431"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PUSHALL\n");
  r = run({"decide", "132465"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT-PUSHALL\n");
  EXPECT_EQ(run({"decide", "1 1"}).code, 2);
  EXPECT_EQ(run({"decide", "12x"}).code, 2);
  EXPECT_EQ(run({"decide"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, DecideWord) {
  auto r = run({"decide", "2431", "--word"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string verdict, word;
  std::getline(lines, verdict);
  std::getline(lines, word);
  EXPECT_EQ(verdict, "PUSHALL");
  auto w = pushall::StackWord::parse(word);
  EXPECT_TRUE(pushall::is_valid_word({2, 4, 3, 1}, w));
  EXPECT_TRUE(pushall::is_pushall_word(w));
}

TEST(Cli, DecideJson) {
  auto r = run({"decide", "2 4 3 1", "--json", "--word"});
  auto j = json::parse(r.out);
  EXPECT_EQ(j["perm"], json({2, 4, 3, 1}));
  EXPECT_EQ(j["pushall"], true);
  EXPECT_EQ(j["word"].get<std::string>().size(), 12u);
}

TEST(Cli, DecideBatchKeepsOrder) {
  const std::string input = "# header\n2431\n\n132465   # in B+\n321\n";
  auto r = run({"decide", "--batch", "-", "--threads", "4"}, input);
  EXPECT_EQ(r.out, "2431 PUSHALL\n132465 NOT-PUSHALL\n321 PUSHALL\n");
  EXPECT_EQ(r.code, 1);
  r = run({"decide", "--batch", "-"}, "12\n1 1\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.substr(0, 11), "12 PUSHALL\n");
  EXPECT_EQ(run({"decide", "--batch", "/nonexistent/file"}).code, 2);
}

TEST(Cli, DecideBatchFromFile) {
  const std::string path = testing::TempDir() + "pushall_batch.txt";
  {
    std::ofstream f(path);
    f << "2431\n351624\n";
  }
  auto r = run({"decide", "--batch", path});
  EXPECT_EQ(r.out, "2431 PUSHALL\n351624 NOT-PUSHALL\n");
  std::remove(path.c_str());
}

TEST(Cli, BatchIsDeterministic) {
  std::string input;
  for (int k = 0; k < 200; ++k) input += (k % 3 ? "2431\n" : "132465\n");
  auto a = run({"decide", "--batch", "-", "--threads", "8"}, input);
  auto b = run({"decide", "--batch", "-", "--threads", "1"}, input);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ColoringsCount) {
  EXPECT_EQ(run({"colorings", "12345", "--count"}).out, "10\n");
  EXPECT_EQ(run({"colorings", "321", "--count"}).out, "8\n");
  auto r = run({"colorings", "132465", "--count"});
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"colorings", "1 1", "--count"}).code, 2);
}

TEST(Cli, ColoringsProductJson) {
  auto j = json::parse(run({"colorings", "321"}).out);
  EXPECT_EQ(j["count"], "8");
  ASSERT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["blocks"][0]["perm"], json({1}));
  EXPECT_EQ(j["blocks"][0]["colorings"], json({"G", "R"}));
}

TEST(Cli, ColoringsMaterialize) {
  EXPECT_EQ(run({"colorings", "12", "--materialize"}).out, "GG\nGR\nRG\nRR\n");
  auto j = json::parse(run({"colorings", "21", "--materialize", "--json"}).out);
  EXPECT_EQ(j["colorings"], json({"GG", "GR", "RG", "RR"}));
  EXPECT_EQ(run({"colorings", "132465", "--materialize"}).out, "");
  EXPECT_EQ(run({"colorings", "--batch", "-", "--count"}, "12\n321\n").out, "12 4\n321 8\n");
}

TEST(Cli, SortWord) {
  auto r = run({"sort-word", "2431", "--coloring", "GGRR"});
  EXPECT_EQ(r.code, 0);
  auto w = pushall::StackWord::parse(r.out.substr(0, r.out.size() - 1));
  EXPECT_TRUE(pushall::is_valid_word({2, 4, 3, 1}, w));
  r = run({"sort-word", "213", "--coloring", "GGG"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "INVALID-COLORING\n");
  EXPECT_EQ(run({"sort-word", "132465"}).out, "NOT-PUSHALL\n");
  EXPECT_EQ(run({"sort-word", "1", "--coloring", "G"}).out, "rlm\n");
  EXPECT_EQ(run({"sort-word", "12", "--coloring", "G"}).code, 2);
  auto j = json::parse(run({"sort-word", "2431", "--json", "--coloring", "GGRR"}).out);
  EXPECT_EQ(j["coloring"], "GGRR");
  EXPECT_EQ(j["perm"], json({2, 4, 3, 1}));
}

TEST(Cli, Sweep) {
  auto r = run({"sweep", "--max-n", "6", "--check", "coloring-equivalence"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 5), "PASS ");
  EXPECT_EQ(run({"sweep", "--max-n", "4", "--check", "bogus"}).code, 2);
  EXPECT_EQ(run({"sweep", "--max-n", "4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--max-n", "20", "--check", "trace-hygiene"}).code, 2);
  r = run({"sweep", "--list"});
  EXPECT_NE(r.out.find("basis-B2"), std::string::npos);
  auto j = json::parse(run({"sweep", "--max-n", "5", "--check", "popable", "--json"}).out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_GE(j["elapsed_seconds"].get<double>(), 0.0);
}

TEST(Cli, Bench) {
  auto r = run({"bench", "--sizes", "1", "--samples", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1,1,"), std::string::npos);
  r = run({"bench", "--samples", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "no samples\n");
  auto j = json::parse(run({"bench", "--sizes", "20,40", "--samples", "3", "--seed", "5", "--json"}).out);
  EXPECT_EQ(j["sizes"].size(), 2u);
  EXPECT_EQ(j["inputs"], 6);
  // the sampled permutations depend only on the seed
  auto a = json::parse(run({"bench", "--sizes", "30", "--samples", "10", "--seed", "9", "--json"}).out);
  auto b = json::parse(run({"bench", "--sizes", "30", "--samples", "10", "--seed", "9", "--json"}).out);
  EXPECT_EQ(a["sizes"][0]["sortable"], b["sizes"][0]["sortable"]);
}

TEST(Cli, RandomPermutationIsReproducible) {
  std::mt19937_64 a(1), b(1);
  EXPECT_EQ(pushall::cli::random_permutation(50, a), pushall::cli::random_permutation(50, b));
}

TEST(Cli, FitExponent) {
  std::vector<pushall::cli::SizeTiming> t{{100, 1, 1e-4, 0, 0}, {200, 1, 4e-4, 0, 0}, {400, 1, 16e-4, 0, 0}};
  EXPECT_NEAR(*pushall::cli::fit_exponent(t), 2.0, 1e-9);
  EXPECT_FALSE(pushall::cli::fit_exponent({{100, 1, 1e-4, 0, 0}}));
}

TEST(Cli, VerifyBasis) {
  auto r = run({"verify-basis", "--name", "132-213"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS 132-213 up to size 8\n");
  EXPECT_EQ(run({"verify-basis", "--name", "B2", "--max-n", "6"}).code, 0);
  EXPECT_EQ(run({"verify-basis", "--name", "nope"}).code, 2);
  auto j = json::parse(run({"verify-basis", "--export"}).out);
  EXPECT_EQ(j["B2"].size(), 19u);
  EXPECT_EQ(j["B+"][0], "132465");
}

TEST(Cli, CountClass) {
  auto r = run({"count-class", "--max-n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1 1\n2 2 2\n3 6 6\n4 24 24\n5 120 120\n6 698 720\n");
  EXPECT_EQ(run({"count-class", "--max-n", "10"}).code, 2);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decide"), std::string::npos);
}
