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

// Shared fixtures and floating-point oracles for the test suites. Nothing
// here calls the exact verifier, so it can be used to check it.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bh/butson.hpp"

namespace bh::testing {

inline std::complex<double> root(int e, int m) {
  return std::polar(1.0, 2.0 * std::numbers::pi * e / m);
}

/// B B^* == n I within tol, evaluated in double precision.
inline bool float_gram_ok(const ButsonMatrix& b, double tol = 1e-9) {
  const std::size_t n = b.order();
  const int m = b.root_order();
  std::vector<std::complex<double>> z(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[i * n + j] = root(b.at(i, j), m);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      std::complex<double> s{0, 0};
      for (std::size_t j = 0; j < n; ++j) s += z[i * n + j] * std::conj(z[k * n + j]);
      const double expect = i == k ? static_cast<double>(n) : 0.0;
      if (std::abs(s - expect) > tol) return false;
    }
  }
  return true;
}

/// Sylvester Hadamard matrix of order 2^k as exponents mod 2.
inline ButsonMatrix sylvester(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = __builtin_popcountll(i & j) % 2;
  }
  return ButsonMatrix::from_rows(2, rows);
}

/// phi on F_3 with the first row deleted, before dephasing.
inline const std::vector<std::vector<int>> kPhiF3Raw = {
    {0, 0, 1, 1, 2, 2}, {0, 0, 2, 2, 1, 1}, {1, 2, 1, 2, 1, 2},
    {1, 2, 2, 1, 2, 1}, {2, 1, 1, 2, 2, 1}, {2, 1, 2, 1, 1, 2},
};

/// The same matrix after dephasing.
inline const std::vector<std::vector<int>> kPhiF3Dephased = {
    {0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2}, {0, 1, 2, 0, 1, 2},
    {0, 1, 0, 2, 2, 1}, {0, 2, 1, 2, 1, 0}, {0, 2, 2, 1, 0, 1},
};

/// T sub-matrix of F_6 for the witness at (3, 3).
inline const std::vector<std::vector<int>> kF6T = {
    {4, 2, 2, 4}, {2, 4, 4, 2}, {2, 4, 1, 5}, {4, 2, 5, 1}};

/// psi on F_6, pair (0,3), cell (3,3): BH(6, 12) (1 -> 0, w -> 1, j -> 2, -1 -> 3, -w -> 4, -j -> 5).
inline const std::vector<std::vector<int>> kPsiF6 = {
    {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5}, {0, 0, 2, 2, 4, 4, 0, 0, 2, 2, 4, 4},
    {0, 0, 4, 4, 2, 2, 0, 0, 4, 4, 2, 2}, {0, 0, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1},
    {4, 2, 2, 4, 4, 2, 2, 4, 4, 2, 2, 4}, {4, 2, 2, 4, 2, 4, 4, 2, 2, 4, 4, 2},
    {2, 4, 1, 5, 2, 4, 1, 5, 2, 4, 1, 5}, {2, 4, 1, 5, 4, 2, 5, 1, 4, 2, 5, 1},
    {2, 4, 4, 2, 4, 2, 2, 4, 2, 4, 4, 2}, {2, 4, 4, 2, 2, 4, 4, 2, 4, 2, 2, 4},
    {4, 2, 5, 1, 2, 4, 1, 5, 4, 2, 5, 1}, {4, 2, 5, 1, 4, 2, 5, 1, 2, 4, 1, 5},
};

}  // namespace bh::testing
