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

#include "bh/butson.hpp"

#include <algorithm>
#include <stdexcept>

#include "bh/cyclotomic.hpp"

namespace bh {

ExponentMatrix::ExponentMatrix(int m, std::size_t rows, std::size_t cols)
    : m_(m), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (m <= 0) throw std::invalid_argument("ExponentMatrix: root order must be positive");
}

ExponentMatrix ExponentMatrix::from_rows(int m, const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExponentMatrix out(m, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ExponentMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      const int e = rows[i][j];
      if (e < 0 || e >= m) throw std::invalid_argument("ExponentMatrix: exponent outside [0, m)");
      out.data_[i * cols + j] = e;
    }
  }
  return out;
}

void ExponentMatrix::set(std::size_t i, std::size_t j, int e) {
  e %= m_;
  if (e < 0) e += m_;
  data_[i * cols_ + j] = e;
}

std::vector<int> ExponentMatrix::column(std::size_t j) const {
  std::vector<int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<std::vector<int>> ExponentMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

ExponentMatrix ExponentMatrix::transposed() const {
  ExponentMatrix t(m_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  }
  return t;
}

ExponentMatrix ExponentMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                         std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw std::out_of_range("ExponentMatrix::submatrix");
  }
  ExponentMatrix s(m_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) s.data_[i * ncols + j] = at(row0 + i, col0 + j);
  }
  return s;
}

namespace {

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
}

}  // namespace

ExponentMatrix ExponentMatrix::permute_rows(std::span<const std::size_t> perm) const {
  check_permutation(perm, rows_);
  ExponentMatrix out(m_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(perm[i] * cols_), cols_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return out;
}

ExponentMatrix ExponentMatrix::permute_cols(std::span<const std::size_t> perm) const {
  check_permutation(perm, cols_);
  ExponentMatrix out(m_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = at(i, perm[j]);
  }
  return out;
}

ButsonMatrix::ButsonMatrix(ExponentMatrix exponents) : e_(std::move(exponents)) {
  if (e_.rows() != e_.cols()) throw std::invalid_argument("ButsonMatrix: matrix must be square");
}

ButsonMatrix ButsonMatrix::from_rows(int m, const std::vector<std::vector<int>>& rows) {
  return ButsonMatrix(ExponentMatrix::from_rows(m, rows));
}

ButsonMatrix fourier(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fourier: order must be positive");
  ExponentMatrix e(static_cast<int>(n), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.set(i, j, static_cast<int>((i * j) % n));
  }
  return ButsonMatrix(std::move(e));
}

namespace {

bool rows_dot_equals(const ExponentMatrix& a, std::size_t i, std::size_t j, long long v) {
  return sum_equals(dot_counts(a.row(i), a.row(j), static_cast<unsigned>(a.root_order())), v);
}

std::optional<IndexPair> first_non_orthogonal_row_pair(const ExponentMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (!rows_dot_equals(a, i, j, 0)) return IndexPair{i, j};
    }
  }
  return std::nullopt;
}

bool all_row_pairs_equal(const ExponentMatrix& a, std::size_t begin, std::size_t end, long long v) {
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = i + 1; j < end; ++j) {
      if (!rows_dot_equals(a, i, j, v)) return false;
    }
  }
  return true;
}

bool span_sum_equals(std::span<const int> entries, int m, long long v) {
  ExponentCountVector c(static_cast<unsigned>(m));
  for (int e : entries) c.add(static_cast<unsigned>(e));
  return sum_equals(c, v);
}

bool is_plus_minus_one(std::span<const int> entries, int m) {
  return std::all_of(entries.begin(), entries.end(), [m](int e) { return e == 0 || e == m / 2; });
}

}  // namespace

VerifyReport verify(const ButsonMatrix& b) {
  VerifyReport report;
  report.failing_rows = first_non_orthogonal_row_pair(b.exponents());
  report.failing_cols = first_non_orthogonal_row_pair(b.exponents().transposed());
  report.ok = !report.failing_rows && !report.failing_cols;
  return report;
}

bool is_dephased(const ButsonMatrix& b) {
  for (std::size_t k = 0; k < b.order(); ++k) {
    if (b.at(0, k) != 0 || b.at(k, 0) != 0) return false;
  }
  return true;
}

ButsonMatrix dephase(const ButsonMatrix& b) {
  const std::size_t n = b.order();
  ExponentMatrix e(b.root_order(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.set(i, j, b.at(i, j) - b.at(0, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int lead = e.at(i, 0);
    for (std::size_t j = 0; j < n; ++j) e.set(i, j, e.at(i, j) - lead);
  }
  return ButsonMatrix(std::move(e));
}

CoreMatrix core(const ButsonMatrix& b) {
  if (b.order() == 0) throw std::invalid_argument("core: empty matrix");
  const std::size_t n = b.order();
  return dephase(b).exponents().submatrix(1, 1, n - 1, n - 1);
}

bool core_property_holds(const CoreMatrix& c) {
  return all_row_pairs_equal(c, 0, c.rows(), -1) &&
         all_row_pairs_equal(c.transposed(), 0, c.cols(), -1);
}

std::vector<IndexPair> find_c1_pairs(const ButsonMatrix& b) {
  const int m = b.root_order();
  const std::size_t n = b.order();
  if (m % 2 != 0 || n % 2 != 0) throw std::invalid_argument("find_c1_pairs: m and n must be even");
  std::vector<IndexPair> pairs;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = t + 1; s < n; ++s) {
      bool partner = true;
      for (std::size_t j = 0; j < n && partner; ++j) {
        const int expected = j % 2 == 1 ? negate_exponent(b.at(t, j), m) : b.at(t, j);
        partner = b.at(s, j) == expected;
      }
      if (partner) pairs.push_back({t, s});
    }
  }
  return pairs;
}

std::vector<Cell> find_c2_cells(const ButsonMatrix& b) {
  const int m = b.root_order();
  if (m % 2 != 0) throw std::invalid_argument("find_c2_cells: m must be even");
  const std::size_t n = b.order();
  const ExponentMatrix cols = b.exponents().transposed();
  std::vector<bool> row_ok(n), col_ok(n);
  for (std::size_t k = 0; k < n; ++k) {
    row_ok[k] = is_plus_minus_one(b.row(k), m);
    col_ok[k] = is_plus_minus_one(cols.row(k), m);
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_ok[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_ok[j] && b.at(i, j) == m / 2) cells.push_back({i, j});
    }
  }
  return cells;
}

namespace {

// Identity order with `pick` moved to slot 1, everything else keeping its
// relative order, then slots 2.. stably split by `is_plus_one`.
template <typename IsPlusOne>
std::vector<std::size_t> witness_order(std::size_t n, std::size_t pick, IsPlusOne is_plus_one) {
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != pick) order.push_back(k);
  }
  order.insert(order.begin() + 1, pick);
  std::stable_partition(order.begin() + 2, order.end(), is_plus_one);
  return order;
}

}  // namespace

TExtraction extract_t(const ButsonMatrix& b, Cell cell) {
  const std::size_t n = b.order();
  const int m = b.root_order();
  if (m % 2 != 0 || n % 2 != 0 || n < 4) {
    throw std::invalid_argument("extract_t: needs even m and even n >= 4");
  }
  if (!is_dephased(b)) throw std::invalid_argument("extract_t: matrix must be dephased");
  const auto witnesses = find_c2_cells(b);
  if (std::find(witnesses.begin(), witnesses.end(), cell) == witnesses.end()) {
    throw std::invalid_argument("extract_t: cell is not a C2 witness");
  }

  std::vector<std::size_t> col_perm =
      witness_order(n, cell.col, [&](std::size_t j) { return b.at(cell.row, j) == 0; });
  std::vector<std::size_t> row_perm =
      witness_order(n, cell.row, [&](std::size_t i) { return b.at(i, cell.col) == 0; });

  const std::size_t half = (n - 2) / 2;
  const auto plus_ones = [&](auto&& value_at) {
    std::size_t count = 0;
    for (std::size_t k = 2; k < n; ++k) count += value_at(k) == 0 ? 1 : 0;
    return count;
  };
  if (plus_ones([&](std::size_t k) { return b.at(cell.row, col_perm[k]); }) != half ||
      plus_ones([&](std::size_t k) { return b.at(row_perm[k], cell.col); }) != half) {
    throw std::invalid_argument("extract_t: witness row/column is unbalanced; input is not Butson");
  }

  ButsonMatrix permuted(b.exponents().permute_rows(row_perm).permute_cols(col_perm));
  ExponentMatrix t = permuted.exponents().submatrix(2, 2, n - 2, n - 2);
  return TExtraction{std::move(t), half, std::move(row_perm), std::move(col_perm),
                     std::move(permuted)};
}

TExtractionCheck check_t_extraction(const TExtraction& x) {
  const ExponentMatrix& t = x.t;
  const std::size_t h = x.half;
  const int m = t.root_order();
  TExtractionCheck out;
  out.c_rows_dot_minus_two = all_row_pairs_equal(t, 0, h, -2) && all_row_pairs_equal(t, h, 2 * h, -2);

  out.c_d_orthogonal = true;
  for (std::size_t i = 0; i < h && out.c_d_orthogonal; ++i) {
    for (std::size_t j = h; j < 2 * h && out.c_d_orthogonal; ++j) {
      out.c_d_orthogonal = rows_dot_equals(t, i, j, 0);
    }
  }

  const auto halves_equal = [&](std::size_t row, long long first, long long second) {
    const auto r = t.row(row);
    return span_sum_equals(r.first(h), m, first) && span_sum_equals(r.subspan(h), m, second);
  };
  out.c_half_sums = true;
  out.d_half_sums = true;
  for (std::size_t i = 0; i < h; ++i) {
    out.c_half_sums = out.c_half_sums && halves_equal(i, -1, -1);
    out.d_half_sums = out.d_half_sums && halves_equal(h + i, -1, 1);
  }
  return out;
}

}  // namespace bh
