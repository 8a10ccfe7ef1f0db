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

#include "bh/latin.hpp"

#include <stdexcept>

#include "bh/galois.hpp"

namespace bh {

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, i, 1);
  return x;
}

BinaryMatrix BinaryMatrix::from_permutation(std::span<const std::size_t> row_to_col) {
  BinaryMatrix x(row_to_col.size());
  for (std::size_t i = 0; i < row_to_col.size(); ++i) x.set(i, row_to_col[i], 1);
  return x;
}

std::optional<std::vector<std::size_t>> BinaryMatrix::as_permutation() const {
  std::vector<std::size_t> perm(n_);
  std::vector<bool> col_used(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const auto v = at(i, j);
      if (v > 1) return std::nullopt;
      if (v == 1) {
        perm[i] = j;
        ++ones;
      }
    }
    if (ones != 1 || col_used[perm[i]]) return std::nullopt;
    col_used[perm[i]] = true;
  }
  return perm;
}

BinaryMatrix kron_identity(std::size_t m, const BinaryMatrix& x) {
  const std::size_t n = x.size();
  BinaryMatrix y(m * n);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y.set(b * n + i, b * n + j, x.at(i, j));
    }
  }
  return y;
}

bool is_latin(const std::vector<std::vector<int>>& cells) {
  const std::size_t n = cells.size();
  for (const auto& row : cells) {
    if (row.size() != n) throw std::invalid_argument("is_latin: array is not square");
    for (int v : row) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw std::invalid_argument("is_latin: entry outside 1..n");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n + 1, false), in_col(n + 1, false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto r = static_cast<std::size_t>(cells[i][j]);
      const auto c = static_cast<std::size_t>(cells[j][i]);
      if (in_row[r] || in_col[c]) return false;
      in_row[r] = in_col[c] = true;
    }
  }
  return true;
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  if (!is_latin(rows)) throw std::invalid_argument("LatinSquare: not a Latin square");
  const std::size_t n = rows.size();
  std::vector<int> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
  return LatinSquare(n, std::move(cells));
}

std::vector<std::vector<int>> LatinSquare::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

bool are_lsesc(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw std::invalid_argument("are_lsesc: order mismatch");
  if (a == b) return false;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      std::size_t agree = 0;
      for (std::size_t j = 0; j < n; ++j) agree += a.at(i, j) == b.at(i2, j) ? 1 : 0;
      if (agree != 1) return false;
    }
  }
  return true;
}

bool are_mols(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw std::invalid_argument("are_mols: order mismatch");
  const std::size_t n = a.order();
  std::vector<bool> seen(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto key = static_cast<std::size_t>(a.at(i, j) - 1) * n + static_cast<std::size_t>(b.at(i, j) - 1);
      if (seen[key]) return false;
      seen[key] = true;
    }
  }
  return true;
}

namespace {

template <typename Pred>
bool pairwise(std::span<const LatinSquare> family, Pred pred) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!pred(family[a], family[b])) return false;
    }
  }
  return true;
}

}  // namespace

bool pairwise_lsesc(std::span<const LatinSquare> family) { return pairwise(family, are_lsesc); }
bool pairwise_mols(std::span<const LatinSquare> family) { return pairwise(family, are_mols); }

LatinSquare conjugate_lsesc_mols(const LatinSquare& l) {
  const std::size_t n = l.order();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(l.at(i, j) - 1)][j] = static_cast<int>(i + 1);
    }
  }
  return LatinSquare::from_rows(out);
}

std::vector<LatinSquare> classical_lsesc_set(std::uint64_t q) {
  constexpr std::uint64_t kMaxClassical = std::uint64_t{1} << 12;
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("classical_lsesc_set: q is not a prime power");
  if (q > kMaxClassical) throw std::invalid_argument("classical_lsesc_set: q exceeds cap");
  const GaloisField field = GaloisField::make(static_cast<std::uint32_t>(pp->p), pp->r);
  const auto xs = field.elements();

  std::vector<LatinSquare> out;
  out.reserve(q - 1);
  for (std::uint64_t b = 1; b < q; ++b) {
    std::vector<std::vector<int>> cells(q, std::vector<int>(q));
    for (std::uint64_t j = 0; j < q; ++j) {
      const FieldElement bx = field.mul(xs[b], xs[j]);
      for (std::uint64_t i = 0; i < q; ++i) {
        cells[i][j] = static_cast<int>(field.index_of(field.add(xs[i], bx)) + 1);
      }
    }
    out.push_back(LatinSquare::from_rows(cells));
  }
  return out;
}

namespace {

void fill_latin(std::size_t n, std::size_t pos, std::vector<std::vector<int>>& cells,
                std::vector<LatinSquare>& out) {
  if (pos == n * n) {
    out.push_back(LatinSquare::from_rows(cells));
    return;
  }
  const std::size_t i = pos / n, j = pos % n;
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    bool clash = false;
    for (std::size_t k = 0; k < j && !clash; ++k) clash = cells[i][k] == v;
    for (std::size_t k = 0; k < i && !clash; ++k) clash = cells[k][j] == v;
    if (clash) continue;
    cells[i][j] = v;
    fill_latin(n, pos + 1, cells, out);
  }
  cells[i][j] = 0;
}

bool extend_family(const std::vector<LatinSquare>& all, std::size_t target, std::size_t start,
                   std::vector<std::size_t>& chosen) {
  if (chosen.size() == target) return true;
  for (std::size_t c = start; c < all.size(); ++c) {
    bool ok = true;
    for (std::size_t prev : chosen) {
      if (!are_lsesc(all[prev], all[c])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    if (extend_family(all, target, c + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<LatinSquare> all_latin_squares(std::size_t n) {
  if (n < 1 || n > 4) throw std::invalid_argument("all_latin_squares: order must be in 1..4");
  std::vector<std::vector<int>> cells(n, std::vector<int>(n, 0));
  std::vector<LatinSquare> out;
  fill_latin(n, 0, cells, out);
  return out;
}

std::optional<std::vector<LatinSquare>> exhaustive_complete_lsesc(std::size_t n) {
  const auto all = all_latin_squares(n);
  std::vector<std::size_t> chosen;
  if (!extend_family(all, n - 1, 0, chosen)) return std::nullopt;
  std::vector<LatinSquare> family;
  for (auto idx : chosen) family.push_back(all[idx]);
  return family;
}

BinaryMatrix LatinTensor::frontal(std::size_t k) const {
  BinaryMatrix x(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) x.set(i, j, at(i, j, k));
  }
  return x;
}

BinaryMatrix LatinTensor::horizontal(std::size_t i) const {
  BinaryMatrix x(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) x.set(j, k, at(i, j, k));
  }
  return x;
}

BinaryMatrix LatinTensor::lateral(std::size_t j) const {
  BinaryMatrix x(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) x.set(i, k, at(i, j, k));
  }
  return x;
}

bool LatinTensor::is_valid() const {
  // Each slice being a permutation matrix means every axis-parallel line of
  // the cube holds exactly one 1; disjointness within a family then follows.
  for (std::size_t s = 0; s < n_; ++s) {
    if (!frontal(s).as_permutation() || !horizontal(s).as_permutation() ||
        !lateral(s).as_permutation()) {
      return false;
    }
  }
  return true;
}

LatinTensor encode(const LatinSquare& l) {
  const std::size_t n = l.order();
  LatinTensor t(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) t.set(i, static_cast<std::size_t>(l.at(i, k) - 1), k, 1);
  }
  return t;
}

std::vector<BinaryMatrix> inflate(const LatinTensor& t, std::size_t m) {
  if (m == 0) throw std::invalid_argument("inflate: m must be positive");
  std::vector<BinaryMatrix> slices;
  slices.reserve(t.order());
  for (std::size_t k = 0; k < t.order(); ++k) slices.push_back(kron_identity(m, t.frontal(k)));
  return slices;
}

LatinSquare reconstruct(const LatinTensor& t) {
  if (!t.is_valid()) throw std::invalid_argument("reconstruct: not a Latin tensor");
  const std::size_t n = t.order();
  std::vector<std::vector<int>> cells(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const BinaryMatrix lat = t.lateral(j);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) cells[i][k] += static_cast<int>(j + 1) * lat.at(i, k);
    }
  }
  return LatinSquare::from_rows(cells);
}

}  // namespace bh
