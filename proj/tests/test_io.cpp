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

#include "bh/io.hpp"

#include <gtest/gtest.h>

#include "bh/error.hpp"
#include "bh/scarpis.hpp"

namespace bh {
namespace {

TEST(Io, TextFormat) {
  EXPECT_EQ(format_text(fourier(3)), "BH 3 3\n0 0 0\n0 1 2\n0 2 1\n");
}

TEST(Io, JsonFormat) {
  const MatrixDocument doc{fourier(2), Provenance{{"construction", "fourier"}, {"n", 2}}};
  EXPECT_EQ(format_json(doc),
            "{\n  \"m\": 2,\n  \"n\": 2,\n  \"exponents\": [\n    [0, 0],\n    [0, 1]\n  ],\n"
            "  \"provenance\": {\"construction\":\"fourier\",\"n\":2}\n}\n");
  EXPECT_EQ(format_json(MatrixDocument{fourier(1), nullptr}),
            "{\n  \"m\": 1,\n  \"n\": 1,\n  \"exponents\": [\n    [0]\n  ]\n}\n");
}

TEST(Io, RoundTripsAreExact) {
  const ButsonMatrix b = phi(make_phi_plan(fourier(5), std::nullopt, 2));
  const MatrixDocument doc{b, Provenance{{"construction", "phi"}, {"deleted_row", 3}}};
  for (MatrixFormat f : {MatrixFormat::kJson, MatrixFormat::kText}) {
    const std::string s = format_matrix(doc, f);
    const MatrixDocument back = parse_matrix(s);
    EXPECT_EQ(back.matrix, b);
    EXPECT_EQ(format_matrix(back, f), s);
  }
  EXPECT_EQ(parse_matrix(format_json(doc)).provenance, doc.provenance);
  EXPECT_TRUE(parse_matrix(format_text(b)).provenance.is_null());
}

TEST(Io, ParseToleratesWhitespace) {
  EXPECT_EQ(parse_matrix("\n BH 2  2\n0 0\n\n0 1").matrix, fourier(2));
  EXPECT_EQ(parse_matrix("  {\"n\":2,\"m\":2,\"exponents\":[[0,0],[0,1]]}").matrix, fourier(2));
}

TEST(Io, ParseErrors) {
  for (const char* bad : {"", "   \n", "BX 2 2\n0 0\n0 1\n", "BH 2 2\n0 0\n0\n", "BH 2 2\n0 0\n0 2\n",
                          "BH 2 2\n0 0\n0 1\n1\n", "BH 0 2\n", "BH 2 -1\n", "BH 2 2\n0 0\n0 x\n",
                          "{", "[1,2]", "{\"m\":2,\"n\":2}", "{\"m\":2,\"n\":2,\"exponents\":[[0,0]]}",
                          "{\"m\":2,\"n\":2,\"exponents\":[[0,0],[0,5]]}",
                          "{\"m\":\"2\",\"n\":2,\"exponents\":[[0,0],[0,1]]}",
                          "{\"m\":2,\"n\":2,\"exponents\":[[0,0],[0,1.5]]}"}) {
    EXPECT_THROW(parse_matrix(bad), ParseError) << bad;
  }
}

TEST(Io, ParseErrorMentionsLine) {
  try {
    parse_matrix("BH 3 3\n0 0 0\n0 1 2\n0 2 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Io, LatinSetRoundTrip) {
  const auto set = *complete_lsesc_set(4);
  const std::string s = format_latin_set(set);
  EXPECT_EQ(s.substr(0, 4), "L 4\n");
  EXPECT_EQ(parse_latin_set(s), set);
  EXPECT_EQ(format_latin_set(parse_latin_set(s)), s);
  EXPECT_TRUE(parse_latin_set("").empty());
}

TEST(Io, LatinSetErrors) {
  EXPECT_THROW(parse_latin_set("L 2\n1 2\n2 1\nL 2\n2 1\n1 2\n"), ParseError);  // no blank line
  EXPECT_THROW(parse_latin_set("L 2\n1 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_latin_set("L 2\n1 3\n2 1\n"), ParseError);
  EXPECT_THROW(parse_latin_set("M 2\n1 2\n2 1\n"), ParseError);
  EXPECT_THROW(parse_latin_set("L 2\n1 2\n2\n"), ParseError);
}

TEST(Io, Sha256KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Io, DigestIgnoresFileFormat) {
  const ButsonMatrix b = fourier(6);
  EXPECT_EQ(matrix_digest(b), sha256_hex(format_text(b)));
  EXPECT_EQ(matrix_digest(parse_matrix(format_json(MatrixDocument{b, nullptr})).matrix), matrix_digest(b));
  EXPECT_NE(matrix_digest(b), matrix_digest(fourier(5)));
}

TEST(Io, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "bh_io_test";
  std::filesystem::create_directories(dir);
  write_file(dir / "a.txt", "hello\n");
  EXPECT_EQ(read_file(dir / "a.txt"), "hello\n");
  EXPECT_THROW(read_file(dir / "missing.txt"), IoError);
  EXPECT_THROW(write_file(dir / "no" / "such" / "dir.txt", "x"), IoError);
  EXPECT_EQ(format_for_path("x.json"), MatrixFormat::kJson);
  EXPECT_EQ(format_for_path("x.txt"), MatrixFormat::kText);
  EXPECT_EQ(format_for_path("x"), MatrixFormat::kText);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace bh
