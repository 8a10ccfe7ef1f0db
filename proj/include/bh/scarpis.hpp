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

// Scarpis-type block constructions.
//
//   phi: BH(m, n)            -> BH(m, n (n - 1))
//   psi: BH(m, n), m, n even -> BH(m, n (n/2 - 1))
//
// Both take an optional second input G that supplies the replicated top
// block (and the scaling row); the first input H supplies the core (phi) or
// the T sub-matrix (psi). Leaving G empty is the single-input form.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bh/butson.hpp"
#include "bh/cyclotomic.hpp"
#include "bh/latin.hpp"

namespace bh {

/// Multiplication of every entry of a block by the root zeta^exponent.
struct DiagonalScale {
  int exponent = 0;
  int m = 1;

  int apply(int e) const noexcept { return ((e + exponent) % m + m) % m; }
  DiagonalScale conjugate() const noexcept { return {conjugate_exponent(exponent, m), m}; }
};

/// A complete set of pairwise LSESC squares of the given order: empty for
/// order 1, the classical set for prime powers, nothing otherwise.
std::optional<std::vector<LatinSquare>> complete_lsesc_set(std::size_t order);

std::vector<LatinTensor> encode_all(std::span<const LatinSquare> squares);

struct PhiPlan {
  ButsonMatrix h;                  ///< core source
  std::optional<ButsonMatrix> g;   ///< top block and scaling row source; h when empty
  std::vector<LatinTensor> lsesc;  ///< n - 2 tensors of order n - 1
  std::size_t deleted_row = 0;     ///< row of the top source removed from the top block
};

struct PsiPlan {
  ButsonMatrix h;                  ///< dephased T source with a C2 witness
  std::optional<ButsonMatrix> g;   ///< top block and scaling row source; h when empty
  std::vector<LatinTensor> lsesc;  ///< n/2 - 2 tensors of order n/2 - 1
  IndexPair c1{};                  ///< C1 pair on the top source (both rows are removed)
  Cell c2{};                       ///< C2 witness on h
};

/// Plan with the given LSESC tensors, or the classical set when omitted.
/// Throws PlanError if n - 1 has no classical set, the inputs disagree in
/// shape, or the row is out of range.
PhiPlan make_phi_plan(ButsonMatrix h, std::optional<ButsonMatrix> g = std::nullopt,
                      std::size_t deleted_row = 0,
                      std::optional<std::vector<LatinTensor>> lsesc = std::nullopt);

/// Plan with the first C1 pair of the top source, the first C2 cell of h and
/// the classical LSESC set unless given. Throws PlanError when any is missing.
PsiPlan make_psi_plan(ButsonMatrix h, std::optional<ButsonMatrix> g = std::nullopt,
                      std::optional<IndexPair> c1 = std::nullopt,
                      std::optional<Cell> c2 = std::nullopt,
                      std::optional<std::vector<LatinTensor>> lsesc = std::nullopt);

/// Throws PlanError for an inconsistent plan and VerificationError if the
/// assembled matrix does not verify.
ButsonMatrix phi(const PhiPlan& plan);
ButsonMatrix psi(const PsiPlan& plan);

/// psi applied to F_{2(2^r + 1)} with the classical set over GF(2^r).
ButsonMatrix corollary5(unsigned r);

/// mols_count * bh_count^2 * n
BigInt count_phi_outputs(const BigInt& mols_count, const BigInt& bh_count, const BigInt& n);

/// sum over d_H of mols_count * a2_count * d_H
BigInt count_psi_outputs(const BigInt& mols_count, const BigInt& a2_count,
                         std::span<const BigInt> dh_values);

}  // namespace bh
