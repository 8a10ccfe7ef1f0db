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

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bh/error.hpp"

namespace bh {

namespace {

constexpr long long kMaxRootOrder = 1 << 30;
constexpr long long kMaxOrder = 1 << 16;

void append_row(std::string& out, std::span<const int> row, std::string_view sep) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j > 0) out += sep;
    out += std::to_string(row[j]);
  }
}

// Whitespace tokenizer with line tracking for error messages.
class Tokens {
 public:
  explicit Tokens(std::string_view s) : s_(s) {}

  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }

  std::string_view next(const char* what) {
    skip_space();
    if (pos_ >= s_.size()) fail(std::string("unexpected end of input, expected ") + what);
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long long next_int(const char* what) {
    const std::string_view tok = next(what);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
  }

  /// Newlines between the cursor and the next token.
  std::size_t newlines_ahead() const {
    std::size_t p = pos_, count = 0;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) {
      if (s_[p] == '\n') ++count;
      ++p;
    }
    return count;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line()) + ": " + msg);
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::size_t line() const {
    std::size_t l = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) l += s_[i] == '\n' ? 1 : 0;
    return l;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

MatrixDocument parse_text_matrix(std::string_view content) {
  Tokens tok(content);
  if (tok.next("header 'BH'") != "BH") tok.fail("expected header 'BH m n'");
  const long long m = tok.next_int("root order m");
  const long long n = tok.next_int("order n");
  if (m <= 0 || n <= 0) tok.fail("m and n must be positive");
  if (m > kMaxRootOrder || n > kMaxOrder) tok.fail("m or n too large");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : rows) {
    for (auto& e : row) {
      const long long v = tok.next_int("exponent");
      if (v < 0 || v >= m) tok.fail("exponent " + std::to_string(v) + " outside [0, m)");
      e = static_cast<int>(v);
    }
  }
  if (!tok.done()) tok.fail("trailing content after matrix");
  return MatrixDocument{ButsonMatrix::from_rows(static_cast<int>(m), rows), nullptr};
}

MatrixDocument parse_json_matrix(std::string_view content) {
  Provenance doc;
  try {
    doc = Provenance::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
    if (!doc.at("m").is_number_integer() || !doc.at("n").is_number_integer()) {
      throw ParseError("m and n must be integers");
    }
    const long long m = doc.at("m").get<long long>();
    const long long n = doc.at("n").get<long long>();
    if (m <= 0 || n <= 0) throw ParseError("m and n must be positive");
    if (m > kMaxRootOrder || n > kMaxOrder) throw ParseError("m or n too large");
    const auto& ex = doc.at("exponents");
    if (!ex.is_array() || ex.size() != static_cast<std::size_t>(n)) {
      throw ParseError("exponents must be an array of n rows");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& r : ex) {
      if (!r.is_array() || r.size() != static_cast<std::size_t>(n)) {
        throw ParseError("every exponent row must have n entries");
      }
      std::vector<int> row;
      for (const auto& v : r) {
        if (!v.is_number_integer()) throw ParseError("exponents must be integers");
        const long long e = v.get<long long>();
        if (e < 0 || e >= m) throw ParseError("exponent " + std::to_string(e) + " outside [0, m)");
        row.push_back(static_cast<int>(e));
      }
      rows.push_back(std::move(row));
    }
    Provenance prov = doc.contains("provenance") ? doc.at("provenance") : Provenance(nullptr);
    return MatrixDocument{ButsonMatrix::from_rows(static_cast<int>(m), rows), std::move(prov)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
}

}  // namespace

std::string format_json(const MatrixDocument& doc) {
  const ButsonMatrix& b = doc.matrix;
  std::string out = "{\n";
  out += "  \"m\": " + std::to_string(b.root_order()) + ",\n";
  out += "  \"n\": " + std::to_string(b.order()) + ",\n";
  out += "  \"exponents\": [\n";
  for (std::size_t i = 0; i < b.order(); ++i) {
    out += "    [";
    append_row(out, b.row(i), ", ");
    out += i + 1 < b.order() ? "],\n" : "]\n";
  }
  out += "  ]";
  if (!doc.provenance.is_null()) out += ",\n  \"provenance\": " + doc.provenance.dump();
  out += "\n}\n";
  return out;
}

std::string format_text(const ButsonMatrix& b) {
  std::string out = "BH " + std::to_string(b.root_order()) + " " + std::to_string(b.order()) + "\n";
  for (std::size_t i = 0; i < b.order(); ++i) {
    append_row(out, b.row(i), " ");
    out += "\n";
  }
  return out;
}

std::string format_matrix(const MatrixDocument& doc, MatrixFormat format) {
  return format == MatrixFormat::kJson ? format_json(doc) : format_text(doc.matrix);
}

MatrixDocument parse_matrix(std::string_view content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix file");
  return content[first] == '{' ? parse_json_matrix(content) : parse_text_matrix(content);
}

std::string format_latin_set(std::span<const LatinSquare> squares) {
  std::string out;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    if (s > 0) out += "\n";
    const LatinSquare& l = squares[s];
    out += "L " + std::to_string(l.order()) + "\n";
    for (const auto& row : l.rows()) {
      append_row(out, row, " ");
      out += "\n";
    }
  }
  return out;
}

std::vector<LatinSquare> parse_latin_set(std::string_view content) {
  Tokens tok(content);
  std::vector<LatinSquare> out;
  bool first = true;
  for (;;) {
    const std::size_t gap = tok.newlines_ahead();
    if (tok.done()) break;
    if (!first && gap < 2) tok.fail("squares must be separated by a blank line");
    first = false;
    if (tok.next("header 'L'") != "L") tok.fail("expected header 'L n'");
    const long long n = tok.next_int("order n");
    if (n <= 0 || n > kMaxOrder) tok.fail("order must be in 1..65536");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : rows) {
      for (auto& v : row) {
        const long long x = tok.next_int("symbol");
        if (x < 1 || x > n) tok.fail("symbol " + std::to_string(x) + " outside 1..n");
        v = static_cast<int>(x);
      }
    }
    if (!is_latin(rows)) tok.fail("block is not a Latin square");
    out.push_back(LatinSquare::from_rows(rows));
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(md[i]);
  return out.str();
}

std::string matrix_digest(const ButsonMatrix& b) { return sha256_hex(format_text(b)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error writing " + path.string());
}

MatrixFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::kJson : MatrixFormat::kText;
}

}  // namespace bh
