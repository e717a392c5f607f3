/*
 * Copyright 2026 The ntrulab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using ::ntrulab::cli::kExitAttackIncomplete;
using ::ntrulab::cli::kExitDomain;
using ::ntrulab::cli::kExitOk;
using ::ntrulab::cli::kExitUsage;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ntrulab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) / (std::string("ntrulab_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void make_keys(const std::string& prefix, const std::vector<std::string>& extra = {}) {
    std::vector<std::string> args = {"keygen", "--seed", "1", "--out-prefix", path(prefix)};
    args.insert(args.end(), extra.begin(), extra.end());
    ASSERT_EQ(run(args).code, kExitOk);
  }

  fs::path dir_;
};

TEST_F(CliTest, KeygenIsDeterministic) {
  make_keys("a", {"--n", "7", "--p", "3", "--q", "41", "--d", "2"});
  make_keys("b");
  EXPECT_EQ(slurp(path("a.pub")), slurp(path("b.pub")));
  EXPECT_EQ(slurp(path("a.sec")), slurp(path("b.sec")));
  EXPECT_EQ(slurp(path("a.pub")).rfind("ntru-params 7 3 41 2\nh [", 0), 0u);
  ASSERT_EQ(run({"keygen", "--seed", "2", "--out-prefix", path("c")}).code, kExitOk);
  EXPECT_NE(slurp(path("a.pub")), slurp(path("c.pub")));
}

TEST_F(CliTest, KeygenPrintsSeedWhenAbsent) {
  const Result r = run({"keygen", "--out-prefix", path("k")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("seed "), std::string::npos);
}

TEST_F(CliTest, KeygenParameterErrorsNameTheRule) {
  Result r = run({"keygen", "--n", "8", "--seed", "1", "--out-prefix", path("k")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: NotPrimeN", 0), 0u) << r.err;
  r = run({"keygen", "--q", "39", "--d", "2", "--p", "3", "--seed", "1", "--out-prefix",
           path("k")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: DecryptionBoundViolation", 0), 0u) << r.err;
  EXPECT_FALSE(fs::exists(path("k.pub")));
}

TEST_F(CliTest, EncryptDecryptRoundtripIsByteIdentical) {
  make_keys("k");
  spit(path("m.txt"), "[1,-1,0,1,0,0,-1]\n");
  ASSERT_EQ(run({"encrypt", "--pub", path("k.pub"), "--in", path("m.txt"), "--seed", "5",
                 "--out", path("c1")})
                .code,
            kExitOk);
  ASSERT_EQ(run({"encrypt", "--pub", path("k.pub"), "--in", path("m.txt"), "--seed", "5",
                 "--out", path("c2")})
                .code,
            kExitOk);
  EXPECT_EQ(slurp(path("c1")), slurp(path("c2")));
  ASSERT_EQ(run({"decrypt", "--sec", path("k.sec"), "--in", path("c1"), "--out", path("m2")})
                .code,
            kExitOk);
  EXPECT_EQ(slurp(path("m2")), slurp(path("m.txt")));
  const Result to_stdout = run({"decrypt", "--sec", path("k.sec"), "--in", path("c1")});
  EXPECT_EQ(to_stdout.out, slurp(path("m.txt")));
}

TEST_F(CliTest, LetterMessages) {
  make_keys("k", {"--n", "107", "--q", "1031", "--d", "10"});
  spit(path("m.txt"), "attackatdawn\n");
  ASSERT_EQ(run({"encrypt", "--pub", path("k.pub"), "--in", path("m.txt"), "--seed", "5",
                 "--out", path("c")})
                .code,
            kExitOk);
  const Result r = run({"decrypt", "--sec", path("k.sec"), "--in", path("c"), "--text"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "attackatdawn\n");
}

TEST_F(CliTest, BadInputs) {
  make_keys("k");
  spit(path("big.txt"), "[2,0,0,0,0,0,0]\n");
  Result r = run({"encrypt", "--pub", path("k.pub"), "--in", path("big.txt"), "--seed", "1"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: PlaintextOutOfRange", 0), 0u) << r.err;

  spit(path("m.txt"), "[0,0,0,0,0,0,0]\n");
  ASSERT_EQ(run({"encrypt", "--pub", path("k.pub"), "--in", path("m.txt"), "--seed", "1",
                 "--out", path("c")})
                .code,
            kExitOk);
  std::string text = slurp(path("c"));
  text.replace(text.find("e [") + 3, 0, "41");
  spit(path("bad"), text);
  r = run({"decrypt", "--sec", path("k.sec"), "--in", path("bad")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: ParseError: line 2", 0), 0u) << r.err;

  r = run({"decrypt", "--sec", path("missing.sec"), "--in", path("c")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: IoError", 0), 0u) << r.err;
}

TEST(CliAttackDemoTest, DefaultRunWinsEverything) {
  const Result r = run({"attack-demo", "--seed", "42"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("seed 42\n", 0), 0u);
  EXPECT_NE(r.out.find("\nrun 0 b "), std::string::npos);
  EXPECT_NE(r.out.find("\nrun 99 b "), std::string::npos);
  const std::string tail = "trials 100 wins 100 rate 1.0\n";
  ASSERT_GE(r.out.size(), tail.size());
  EXPECT_EQ(r.out.substr(r.out.size() - tail.size()), tail);
  EXPECT_EQ(run({"attack-demo", "--seed", "42"}).out, r.out);
}

TEST(CliAttackDemoTest, SingleTrial) {
  const Result r = run({"attack-demo", "--seed", "3", "--trials", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(" win 1 enc_calls 0 dec_calls 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("trials 1 wins 1 rate 1.0\n"), std::string::npos);
}

TEST(CliAttackDemoTest, BaselineAndGames) {
  const Result r = run({"attack-demo", "--seed", "3", "--trials", "2000", "--baseline"});
  EXPECT_EQ(r.code, kExitAttackIncomplete);
  const auto pos = r.out.find("rate ");
  ASSERT_NE(pos, std::string::npos);
  const double rate = std::stod(r.out.substr(pos + 5));
  EXPECT_GT(rate, 0.45);
  EXPECT_LT(rate, 0.55);
  EXPECT_EQ(run({"attack-demo", "--seed", "3", "--game", "cca2"}).code, kExitOk);
  EXPECT_EQ(run({"attack-demo", "--seed", "3", "--game", "bogus"}).code, kExitUsage);
  const Result bad = run({"attack-demo", "--n", "8"});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_NE(bad.err.find("NotPrimeN"), std::string::npos);
}

TEST(CliCipherTest, Shift) {
  Result r = run({"shift", "--key", "13", "--text", "iamadat"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "vnznqng\n");
  EXPECT_EQ(run({"shift", "--key", "13", "--text", "iamacat"}).out, "vnznpng\n");
  EXPECT_EQ(run({"shift", "--key", "0", "--text", "hello"}).out, "hello\n");
  EXPECT_EQ(run({"shift", "--key", "13", "--text", "vnznpng", "--decrypt"}).out, "iamacat\n");
  r = run({"shift", "--key", "26", "--text", "abc"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: InvalidShiftKey", 0), 0u);
  r = run({"shift", "--key", "3", "--text", "a-b"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.err.rfind("error: CodecError", 0), 0u);
}

TEST(CliCipherTest, Substitution) {
  const std::string key = "qwertyuiopasdfghjklzxcvbnm";
  EXPECT_EQ(run({"subst", "--key", key, "--text", "abc"}).out, "qwe\n");
  EXPECT_EQ(run({"subst", "--key", key, "--text", "qwe", "--decrypt"}).out, "abc\n");
  EXPECT_EQ(run({"subst", "--key", "abc", "--text", "abc"}).code, kExitDomain);
}

TEST(CliUsageTest, Errors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"keygen"}).code, kExitUsage);
  EXPECT_EQ(run({"shift", "--key", "x", "--text", "abc"}).code, kExitDomain);
  const Result r = run({"shift", "--key", "1", "--text", "abc", "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.err.rfind("error: usage:", 0), 0u);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_NE(run({"info"}).out.find("kernel "), std::string::npos);
}

}  // namespace
