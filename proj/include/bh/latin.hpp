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

// Latin squares, the LSESC / MOLS predicates, and the 0/1 cubic tensor
// encoding used to index core rows in the block constructions.
//
// Indices are 0-based throughout; symbols are 1..n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bh {

/// Square 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix from_permutation(std::span<const std::size_t> row_to_col);

  std::size_t size() const noexcept { return n_; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint8_t v) { cells_[i * n_ + j] = v; }

  /// Column of the single 1 in each row, if this is a permutation matrix.
  std::optional<std::vector<std::size_t>> as_permutation() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// I_m (x) X: block diagonal with m copies of X.
BinaryMatrix kron_identity(std::size_t m, const BinaryMatrix& x);

class LatinSquare {
 public:
  /// Throws std::invalid_argument unless `rows` is an n x n Latin square over 1..n.
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return n_; }
  int at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

 private:
  LatinSquare(std::size_t n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}
  std::size_t n_;
  std::vector<int> cells_;
};

/// Row/column condition on an n x n array with entries in 1..n.
/// Throws std::invalid_argument for a non-square array or out-of-range entries.
bool is_latin(const std::vector<std::vector<int>>& cells);

/// For every row pair (i, i'), exactly one column j with L[i][j] == L'[i'][j].
/// A square is never LSESC with itself. Throws on order mismatch.
bool are_lsesc(const LatinSquare& a, const LatinSquare& b);

/// All n^2 superimposed pairs (L[i][j], L'[i][j]) distinct. Throws on order mismatch.
bool are_mols(const LatinSquare& a, const LatinSquare& b);

bool pairwise_lsesc(std::span<const LatinSquare> family);
bool pairwise_mols(std::span<const LatinSquare> family);

/// Swap the roles of symbol and row: L'[a][j] = i whenever L[i][j] = a.
LatinSquare conjugate_lsesc_mols(const LatinSquare& l);

/// L_b[i][j] = 1 + index(x_i + b x_j) over GF(q), one square per nonzero b
/// in field enumeration order. Throws unless q is a prime power <= 2^12.
std::vector<LatinSquare> classical_lsesc_set(std::uint64_t q);

/// Every Latin square of order n in lexicographic cell order. n <= 4.
std::vector<LatinSquare> all_latin_squares(std::size_t n);

/// Brute-force search for n - 1 pairwise LSESC squares of order n <= 4.
/// Returns the lexicographically first family found.
std::optional<std::vector<LatinSquare>> exhaustive_complete_lsesc(std::size_t n);

/// Cubic 0/1 tensor of a Latin square. Frontal slice k has a 1 at (i, j)
/// exactly when L[i][k] == j + 1.
class LatinTensor {
 public:
  explicit LatinTensor(std::size_t n) : n_(n), cells_(n * n * n, 0) {}

  std::size_t order() const noexcept { return n_; }
  /// Entry (row i, column j) of frontal slice k.
  std::uint8_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return cells_[(k * n_ + i) * n_ + j];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, std::uint8_t v) {
    cells_[(k * n_ + i) * n_ + j] = v;
  }

  BinaryMatrix frontal(std::size_t k) const;     // indexed (i, j)
  BinaryMatrix horizontal(std::size_t i) const;  // indexed (j, k)
  BinaryMatrix lateral(std::size_t j) const;     // indexed (i, k)

  /// Every frontal, horizontal and lateral slice is a permutation matrix, and
  /// each slice family is pairwise disjoint.
  bool is_valid() const;

  friend bool operator==(const LatinTensor&, const LatinTensor&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

LatinTensor encode(const LatinSquare& l);

/// Frontal slices I_m (x) X_k of the encoded tensor.
std::vector<BinaryMatrix> inflate(const LatinTensor& t, std::size_t m);

/// Inverse of encode: L = sum_j (j + 1) * lateral_j. Throws
/// std::invalid_argument if the tensor is not a valid Latin tensor.
LatinSquare reconstruct(const LatinTensor& t);

}  // namespace bh
