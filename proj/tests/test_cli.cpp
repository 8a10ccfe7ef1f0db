// Copyright 2026 The bhscarpis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the bhtool binary, one process per command.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "bh/io.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bhtool_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs bhtool with stderr folded into the captured output.
  Result run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" BHTOOL_PATH "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string read(const std::string& name) const { return bh::read_file(dir_ / name); }

  fs::path dir_;
};

TEST_F(Cli, FourierFiles) {
  ASSERT_EQ(run("fourier 3 -o f3.txt").code, 0);
  EXPECT_EQ(read("f3.txt"), "BH 3 3\n0 0 0\n0 1 2\n0 2 1\n");
  ASSERT_EQ(run("fourier 1 -o f1.json").code, 0);
  EXPECT_EQ(bh::parse_matrix(read("f1.json")).matrix.exponents().to_rows(), (std::vector<std::vector<int>>{{0}}));
  EXPECT_EQ(run("fourier 0").code, 3);
}

TEST_F(Cli, ConvertRoundTripIsExact) {
  ASSERT_EQ(run("fourier 7 -o a.json").code, 0);
  ASSERT_EQ(run("convert a.json -o b.txt").code, 0);
  ASSERT_EQ(run("convert b.txt -o c.json").code, 0);
  ASSERT_EQ(run("convert c.json --format text -o d.txt").code, 0);
  EXPECT_EQ(read("b.txt"), read("d.txt"));
  EXPECT_EQ(bh::parse_matrix(read("c.json")).matrix, bh::fourier(7));
}

TEST_F(Cli, VerifyFourierTwelve) {
  ASSERT_EQ(run("fourier 12 -o f12.txt").code, 0);
  const Result r = run("verify f12.txt");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified: BH(12,12)"), std::string::npos);
}

TEST_F(Cli, VerifyCorruptedFileNamesPair) {
  std::string text = bh::format_text(bh::fourier(5));
  text.replace(text.find("0 2 4 1 3"), 9, "0 2 4 1 4");
  bh::write_file(path("bad.txt"), text);
  const Result r = run("verify bad.txt");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first failing row pair: (1,3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("first failing column pair:"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyParseErrors) {
  bh::write_file(path("junk.txt"), "BH 2 2\n0 0\n0\n");
  EXPECT_EQ(run("verify junk.txt").code, 3);
  EXPECT_EQ(run("verify missing.txt").code, 3);
  EXPECT_EQ(run("verify").code, 3);
}

TEST_F(Cli, AnalyzeFourierSix) {
  ASSERT_EQ(run("fourier 6 -o f6.txt").code, 0);
  const Result r = run("verify f6.txt --analyze");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C1 pairs: (1,4) (2,5) (3,6)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("C2 cells: (4,4)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("d_H: 3\n"), std::string::npos) << r.out;
}

TEST_F(Cli, ConstructPhiGolden) {
  ASSERT_EQ(run("fourier 3 -o f3.txt").code, 0);
  const Result r = run("construct phi f3.txt --dephase -o g3.json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("output: BH(3,6)"), std::string::npos);
  EXPECT_NE(r.out.find("deleted row 1"), std::string::npos);
  const bh::MatrixDocument doc = bh::parse_matrix(read("g3.json"));
  EXPECT_EQ(doc.matrix.exponents().to_rows(), bh::testing::kPhiF3Dephased);
  EXPECT_EQ(doc.provenance["construction"], "phi");
  EXPECT_EQ(doc.provenance["inputs"]["h"], bh::matrix_digest(bh::fourier(3)));
  EXPECT_EQ(run("verify g3.json").code, 0);
}

TEST_F(Cli, ConstructPsiGolden) {
  ASSERT_EQ(run("fourier 6 -o f6.txt").code, 0);
  const Result r = run("construct psi f6.txt -o g6.txt");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("C1 pair (1,4), C2 cell (4,4)"), std::string::npos) << r.out;
  EXPECT_EQ(bh::parse_matrix(read("g6.txt")).matrix.exponents().to_rows(), bh::testing::kPsiF6);
  EXPECT_EQ(run("verify g6.txt").code, 0);
  ASSERT_EQ(run("construct psi f6.txt --c1-pair 1,4 --c2-cell 4,4 -o g6b.txt").code, 0);
  EXPECT_EQ(read("g6.txt"), read("g6b.txt"));
}

TEST_F(Cli, ConstructOptions) {
  ASSERT_EQ(run("fourier 5 -o f5.txt").code, 0);
  for (const char* args : {"construct phi f5.txt --delete-row 3 -o a.txt",
                           "construct phi f5.txt -g f5.txt --delete-row 5 -o b.txt",
                           "construct phi f5.txt --pre-permute-cols 2,1,5,3,4 -o c.txt"}) {
    const Result r = run(args);
    ASSERT_EQ(r.code, 0) << args << "\n" << r.out;
  }
  for (const char* f : {"a.txt", "b.txt", "c.txt"}) EXPECT_EQ(run(std::string("verify ") + f).code, 0);
  EXPECT_EQ(run("construct phi f5.txt --delete-row 6").code, 3);
  EXPECT_EQ(run("construct phi f5.txt --pre-permute-cols 1,1,2,3,4").code, 3);
}

TEST_F(Cli, ConstructWithImportedLsescSet) {
  ASSERT_EQ(run("fourier 5 -o f5.txt").code, 0);
  ASSERT_EQ(run("lsesc classical 4 -o l4.txt").code, 0);
  ASSERT_EQ(run("construct phi f5.txt -o a.txt").code, 0);
  ASSERT_EQ(run("construct phi f5.txt --lsesc l4.txt -o b.txt").code, 0);
  EXPECT_EQ(read("a.txt"), read("b.txt"));
  ASSERT_EQ(run("lsesc classical 3 -o l3.txt").code, 0);
  EXPECT_EQ(run("construct phi f5.txt --lsesc l3.txt").code, 2);
}

TEST_F(Cli, PlanErrors) {
  ASSERT_EQ(run("fourier 8 -o f8.txt").code, 0);
  const Result r = run("construct psi f8.txt -o out.txt");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("C2"), std::string::npos) << r.out;
  EXPECT_FALSE(fs::exists(path("out.txt")));
  ASSERT_EQ(run("fourier 7 -o f7.txt").code, 0);
  EXPECT_EQ(run("construct phi f7.txt").code, 2);
  bh::write_file(path("bad.txt"), "BH 3 3\n0 0 0\n0 1 2\n0 1 2\n");
  EXPECT_EQ(run("construct phi bad.txt").code, 2);
}

TEST_F(Cli, DephaseInputsEnablesPsi) {
  bh::ButsonMatrix shifted = bh::fourier(6);
  auto rows = shifted.exponents().to_rows();
  for (auto& row : rows) row[0] = (row[0] + 1) % 6;
  bh::write_file(path("s.txt"), bh::format_text(bh::ButsonMatrix::from_rows(6, rows)));
  EXPECT_EQ(run("construct psi s.txt").code, 2);
  ASSERT_EQ(run("construct psi s.txt --dephase-inputs -o out.txt").code, 0);
  EXPECT_EQ(run("verify out.txt").code, 0);
}

TEST_F(Cli, Counts) {
  EXPECT_EQ(run("count phi --mols 1 --card 1 --n 4").out, "4\n");
  EXPECT_EQ(run("count phi --mols 1 --card 2 --n 4").out, "16\n");
  EXPECT_EQ(run("count phi --mols 0 --card 5 --n 9").out, "0\n");
  EXPECT_EQ(run("count psi --mols 1 --card2 1 --dh 3").out, "3\n");
  EXPECT_EQ(run("count psi --mols 2 --card2 3 --dh 1 2").out, "18\n");
  EXPECT_EQ(run("count phi --mols 123456789012345678901234567890 --card 1 --n 1").out,
            "123456789012345678901234567890\n");
  EXPECT_EQ(run("count phi --mols 1 --card 1").code, 3);
  EXPECT_EQ(run("count phi --mols -1 --card 1 --n 2").code, 3);
}

TEST_F(Cli, LsescCommands) {
  ASSERT_EQ(run("lsesc classical 2 -o l2.txt").code, 0);
  EXPECT_EQ(read("l2.txt"), "L 2\n1 2\n2 1\n");
  ASSERT_EQ(run("lsesc classical 4 -o l4.txt").code, 0);
  const Result check = run("lsesc check l4.txt");
  EXPECT_EQ(check.code, 0);
  EXPECT_NE(check.out.find("pairwise LSESC: yes"), std::string::npos);
  EXPECT_NE(check.out.find("complete: yes"), std::string::npos);
  ASSERT_EQ(run("lsesc conjugate l4.txt -o c.txt").code, 0);
  ASSERT_EQ(run("lsesc conjugate c.txt -o cc.txt").code, 0);
  EXPECT_EQ(read("cc.txt"), read("l4.txt"));
  EXPECT_EQ(run("lsesc classical 6").code, 2);
  bh::write_file(path("same.txt"), "L 3\n1 2 3\n2 3 1\n3 1 2\n\nL 3\n1 2 3\n2 3 1\n3 1 2\n");
  EXPECT_NE(run("lsesc check same.txt").out.find("pairwise LSESC: no"), std::string::npos);
  bh::write_file(path("broken.txt"), "L 2\n1 1\n2 2\n");
  EXPECT_EQ(run("lsesc check broken.txt").code, 3);
}

TEST_F(Cli, OutputsAreDeterministic) {
  ASSERT_EQ(run("fourier 10 -o f10.json").code, 0);
  ASSERT_EQ(run("construct psi f10.json -o a.json").code, 0);
  ASSERT_EQ(run("construct psi f10.json -o b.json").code, 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_EQ(run("verify a.json").code, 0);
}

TEST_F(Cli, Help) {
  const Result r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("construct"), std::string::npos);
}

}  // namespace
