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

// Butson matrices stored as root-of-unity exponents, with exact checks.
//
// Entry (i, j) of a matrix with root order m stands for zeta_m^{e(i, j)},
// zeta_m = exp(2 pi i / m). All row and column indices are 0-based.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bh {

/// Rectangular array of exponents in [0, m).
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  /// Zero-filled rows x cols matrix. Throws if m == 0.
  ExponentMatrix(int m, std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged input or exponents outside [0, m).
  static ExponentMatrix from_rows(int m, const std::vector<std::vector<int>>& rows);

  int root_order() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores e reduced into [0, m).
  void set(std::size_t i, std::size_t j, int e);
  std::span<const int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<int> column(std::size_t j) const;
  std::vector<std::vector<int>> to_rows() const;

  ExponentMatrix transposed() const;
  ExponentMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const;
  /// Row i of the result is row perm[i] of this matrix.
  ExponentMatrix permute_rows(std::span<const std::size_t> perm) const;
  /// Column j of the result is column perm[j] of this matrix.
  ExponentMatrix permute_cols(std::span<const std::size_t> perm) const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  int m_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

/// Square exponent matrix that is meant to satisfy B B^* = n I. Construction
/// only checks shape and range; call verify() for orthogonality.
class ButsonMatrix {
 public:
  explicit ButsonMatrix(ExponentMatrix exponents);
  static ButsonMatrix from_rows(int m, const std::vector<std::vector<int>>& rows);

  int root_order() const noexcept { return e_.root_order(); }
  std::size_t order() const noexcept { return e_.rows(); }
  int at(std::size_t i, std::size_t j) const { return e_.at(i, j); }
  std::span<const int> row(std::size_t i) const { return e_.row(i); }
  const ExponentMatrix& exponents() const noexcept { return e_; }

  friend bool operator==(const ButsonMatrix&, const ButsonMatrix&) = default;

 private:
  ExponentMatrix e_;
};

struct IndexPair {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct Cell {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct VerifyReport {
  bool ok = true;
  /// Lexicographically first non-orthogonal row pair, if any.
  std::optional<IndexPair> failing_rows;
  /// Lexicographically first non-orthogonal column pair, if any.
  std::optional<IndexPair> failing_cols;
};

/// F_n: m = n, e(i, j) = i * j mod n.
ButsonMatrix fourier(std::size_t n);

/// Exact check of every row pair and every column pair.
VerifyReport verify(const ButsonMatrix& b);

/// True iff the first row and first column are all zero exponents.
bool is_dephased(const ButsonMatrix& b);

/// Normalize the first row and column to ones by column then row scaling.
ButsonMatrix dephase(const ButsonMatrix& b);

/// Core of a Butson matrix: the dephased matrix without its first row and column.
using CoreMatrix = ExponentMatrix;
CoreMatrix core(const ButsonMatrix& b);

/// Distinct rows and distinct columns of the core all have inner product -1.
bool core_property_holds(const CoreMatrix& c);

/// C1 partners: pairs t < s where row s is row t with every odd-indexed
/// (0-based) entry negated. Throws std::invalid_argument for odd m or n.
std::vector<IndexPair> find_c1_pairs(const ButsonMatrix& b);

/// C2 witnesses: cells (i, j) whose row and column are +-1 valued and whose
/// entry is -1, in row-major order. Throws std::invalid_argument for odd m.
std::vector<Cell> find_c2_cells(const ButsonMatrix& b);

/// Sub-matrix T = [C; D] of a dephased matrix with a C2 witness, together
/// with the permutations that exposed it.
struct TExtraction {
  ExponentMatrix t;         ///< (n - 2) x (n - 2)
  std::size_t half = 0;     ///< (n - 2) / 2: rows of C, columns of T^[1]
  std::vector<std::size_t> row_perm;  ///< row i of `permuted` is row row_perm[i] of the parent
  std::vector<std::size_t> col_perm;  ///< column j of `permuted` is column col_perm[j]
  ButsonMatrix permuted;    ///< parent after both permutations

  std::span<const int> c_row(std::size_t i) const { return t.row(i); }
  std::span<const int> d_row(std::size_t i) const { return t.row(half + i); }
};

/// Moves the witness column and row to index 1, then stably partitions the
/// remaining columns by the witness row (+1 first) and the remaining rows by
/// the witness column. Requires a dephased matrix and a cell reported by
/// find_c2_cells; throws std::invalid_argument otherwise.
TExtraction extract_t(const ButsonMatrix& b, Cell cell);

/// Which of the four block identities of an extraction hold exactly.
struct TExtractionCheck {
  bool c_rows_dot_minus_two = false;  ///< distinct rows of C, and of D, pair to -2
  bool c_d_orthogonal = false;        ///< any row of C against any row of D is 0
  bool c_half_sums = false;           ///< rows of C sum to -1 on each half
  bool d_half_sums = false;           ///< rows of D sum to -1, then +1
  bool all() const noexcept {
    return c_rows_dot_minus_two && c_d_orthogonal && c_half_sums && d_half_sums;
  }
};

TExtractionCheck check_t_extraction(const TExtraction& x);

}  // namespace bh
