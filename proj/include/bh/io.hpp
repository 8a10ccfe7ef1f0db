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

#pragma once

// File formats.
//
// Matrix interchange document (UTF-8 JSON, fixed key order):
//   {"m": .., "n": .., "exponents": [[..], ..], "provenance": {..}}
// Plain text matrix:
//   BH m n
//   e11 e12 ... e1n
//   ...
// Latin square set: blocks of
//   L n
//   l11 ... l1n
//   ...
// separated by one blank line.
//
// Writers are byte-deterministic; parsers throw ParseError.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bh/butson.hpp"
#include "bh/latin.hpp"

namespace bh {

using Provenance = nlohmann::ordered_json;

struct MatrixDocument {
  ButsonMatrix matrix;
  Provenance provenance;  ///< null when absent
};

enum class MatrixFormat { kJson, kText };

std::string format_json(const MatrixDocument& doc);
std::string format_text(const ButsonMatrix& b);
std::string format_matrix(const MatrixDocument& doc, MatrixFormat format);

/// Accepts either format; the first non-blank character '{' selects JSON.
MatrixDocument parse_matrix(std::string_view content);

std::string format_latin_set(std::span<const LatinSquare> squares);
std::vector<LatinSquare> parse_latin_set(std::string_view content);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);
/// SHA-256 of the plain text rendering; independent of the file format.
std::string matrix_digest(const ButsonMatrix& b);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// JSON when the extension is .json, plain text otherwise.
MatrixFormat format_for_path(const std::filesystem::path& path);

}  // namespace bh
