#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

using namespace uiozeta;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "",
           const cli::CheckRunner& runner = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err, runner);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, MapExamples) {
  auto r = run({"map", "--name", "zeta", "aaabababbbab"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "aababbaaabbb\n");
  r = run({"map", "--name", "q", "0,0,1,1,3"});
  EXPECT_EQ(r.out, "0,1,2,1,0\n");
  r = run({"map", "--name", "p", "[0,1,1,2]"});
  EXPECT_EQ(r.out, "aaabbabb\n");
  r = run({"map", "--name", "levels", "0,0,1,1,3"});
  EXPECT_EQ(r.out, "0,0,1,1,2\n");
  r = run({"map", "--name", "unzeta", "aababbaaabbb"});
  EXPECT_EQ(r.out, "aaabababbbab\n");
  r = run({"map", "--name", "grevlex-min", "0,1,1,2"});
  EXPECT_EQ(r.out, "0,1,2,1\n");
}

TEST(Cli, PosetOutputIsJson) {
  auto r = run({"map", "--name", "poset", "0,1,2,1,0"});
  ASSERT_EQ(r.code, 0);
  std::set<std::pair<int, int>> got;
  for (const auto& pr : nlohmann::json::parse(r.out)) got.emplace(pr[0].get<int>(), pr[1].get<int>());
  EXPECT_EQ(got, oracle::listing_relations({0, 1, 2, 1, 0}));

  r = run({"map", "--name", "poset", "--covers", "0,1,2"});
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse("[[1,2],[2,3]]"));
}

TEST(Cli, VerifyTheoremOne) {
  const auto r = run({"verify", "--check", "theorem", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 instance, 0 failures"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--check", "bijections", "--n", "4", "--json", "--jobs", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("instances"), 14);
  EXPECT_EQ(j.at("metrics").at("q_images"), 14);
}

TEST(Cli, VerifyFailuresExitOne) {
  const cli::CheckRunner broken = [](const std::string& name, int n, const HarnessOptions& opt) {
    auto rep = run_check(name, n, opt);
    rep.failures.push_back({0, 0, {{"note", "injected"}}});
    return rep;
  };
  const auto r = run({"verify", "--check", "theorem", "--n", "3"}, "", broken);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("note = injected"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"map", "--name", "zeta", "ba"}).code, 2);
  EXPECT_EQ(run({"map", "--name", "nope", "ab"}).code, 2);
  EXPECT_EQ(run({"convert", "--from", "areaseq", "--to", "word", "0,2"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "theorem"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const auto bad = run({"map", "--name", "a", "0,1,0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
}

TEST(Cli, CeilingsAreEnforced) {
  auto r = run({"verify", "--check", "grevlex", "--n", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ceiling"), std::string::npos);
  EXPECT_EQ(run({"verify", "--check", "theorem", "--n", "12"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "induction", "--n", "10"}).code, 2);
  // Raising the ceiling is allowed; a small n under a lowered ceiling is refused.
  EXPECT_EQ(run({"verify", "--check", "theorem", "--n", "3", "--ceiling", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "grevlex", "--n", "3", "--ceiling", "3"}).code, 0);
}

TEST(Cli, ConvertRoundTripsExhaustively) {
  const std::vector<std::string> encodings{"areaseq", "areaset", "pred", "intervals"};
  // Size 0 is the empty line, which stdin streaming skips.
  for (int n = 1; n <= 8; ++n) {
    std::string words;
    for (const auto& d : all_dyck_words(n)) words += d.str() + "\n";
    for (const auto& enc : encodings) {
      const auto there = run({"convert", "--from", "word", "--to", enc}, words);
      ASSERT_EQ(there.code, 0) << there.err;
      const auto back = run({"convert", "--from", enc, "--to", "word"}, there.out);
      ASSERT_EQ(back.code, 0) << enc << ": " << back.err;
      ASSERT_EQ(back.out, words) << enc;
    }
  }
}

TEST(Cli, ConvertExamples) {
  EXPECT_EQ(run({"convert", "--from", "areaseq", "--to", "areaset", "0,1,2,1"}).out, "4:1,2;1,3;2,3;3,4\n");
  EXPECT_EQ(run({"convert", "--from", "pred", "--to", "word", "0,1,1,2"}).out, "abaababb\n");
  const auto iv = run({"convert", "--from", "intervals", "--to", "pred",
                       R"([{"num":3,"den":1},{"num":0,"den":1}])", "--normalize"});
  EXPECT_EQ(iv.code, 0);
  EXPECT_EQ(iv.out, "0,1\n");
  EXPECT_EQ(run({"convert", "--from", "intervals", "--to", "pred",
                 R"([{"num":3,"den":1},{"num":0,"den":1}])"}).code, 2);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--kind", "dyck", "--n", "3"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"aaabbb", "aababb", "aabbab", "abaabb", "ababab"}));
  r = run({"enumerate", "--kind", "uio", "--n", "6"});
  EXPECT_EQ(lines(r.out).size(), 132u);
  EXPECT_EQ(lines(r.out).front(), "0,0,0,0,0,0");
  EXPECT_EQ(lines(r.out).back(), "0,1,2,3,4,5");
}

TEST(Cli, Render) {
  auto r = run({"render", "aabb"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('o'), std::string::npos);
  r = run({"render", "aaabbabb", "--format", "svg", "--diagonals"});
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("class=\"path\""), std::string::npos);
  EXPECT_NE(r.out.find("diagonal-3"), std::string::npos);
}
