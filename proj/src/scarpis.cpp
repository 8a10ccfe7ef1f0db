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

#include "bh/scarpis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bh/error.hpp"
#include "bh/galois.hpp"

namespace bh {

std::optional<std::vector<LatinSquare>> complete_lsesc_set(std::size_t order) {
  if (order == 1) return std::vector<LatinSquare>{};
  if (!as_prime_power(order)) return std::nullopt;
  return classical_lsesc_set(order);
}

std::vector<LatinTensor> encode_all(std::span<const LatinSquare> squares) {
  std::vector<LatinTensor> out;
  out.reserve(squares.size());
  for (const auto& l : squares) out.push_back(encode(l));
  return out;
}

namespace {

std::vector<LatinTensor> classical_tensors(std::size_t order, const char* who) {
  auto set = complete_lsesc_set(order);
  if (!set) {
    throw PlanError(std::string(who) + ": no complete LSESC set available for order " +
                    std::to_string(order) + " (not a prime power); import one from a file");
  }
  return encode_all(*set);
}

void check_lsesc_tensors(std::span<const LatinTensor> tensors, std::size_t order, std::size_t count,
                         const char* who) {
  if (tensors.size() != count) {
    throw PlanError(std::string(who) + ": expected " + std::to_string(count) +
                    " LSESC tensors, got " + std::to_string(tensors.size()));
  }
  std::vector<LatinSquare> squares;
  for (const auto& t : tensors) {
    if (t.order() != order) {
      throw PlanError(std::string(who) + ": LSESC tensor has order " + std::to_string(t.order()) +
                      ", expected " + std::to_string(order));
    }
    if (!t.is_valid()) throw PlanError(std::string(who) + ": invalid Latin tensor");
    squares.push_back(reconstruct(t));
  }
  if (!pairwise_lsesc(squares)) throw PlanError(std::string(who) + ": squares are not pairwise LSESC");
}

void check_inputs(const ButsonMatrix& h, const ButsonMatrix& top, const char* who) {
  if (top.order() != h.order() || top.root_order() != h.root_order()) {
    throw PlanError(std::string(who) + ": both inputs must share root order and matrix order");
  }
  if (!verify(h).ok) throw PlanError(std::string(who) + ": input H is not a Butson matrix");
  if (&top != &h && !verify(top).ok) {
    throw PlanError(std::string(who) + ": input G is not a Butson matrix");
  }
}

std::vector<std::size_t> frontal_permutation(const BinaryMatrix& slice) {
  auto perm = slice.as_permutation();
  if (!perm) throw PlanError("frontal slice is not a permutation matrix");
  return *perm;
}

// Top block: the source without `skip` rows, each entry repeated `width` times.
void write_top_block(const ButsonMatrix& src, std::span<const std::size_t> skip, std::size_t width,
                     ExponentMatrix& out) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < src.order(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    for (std::size_t c = 0; c < src.order(); ++c) {
      for (std::size_t rep = 0; rep < width; ++rep) out.set(r, c * width + rep, src.at(i, c));
    }
    ++r;
  }
}

ButsonMatrix checked(ExponentMatrix e, const char* who) {
  ButsonMatrix out(std::move(e));
  const VerifyReport report = verify(out);
  if (!report.ok) {
    throw VerificationError(std::string(who) + ": assembled matrix failed exact verification");
  }
  return out;
}

}  // namespace

PhiPlan make_phi_plan(ButsonMatrix h, std::optional<ButsonMatrix> g, std::size_t deleted_row,
                      std::optional<std::vector<LatinTensor>> lsesc) {
  const std::size_t n = h.order();
  if (n < 2) throw PlanError("phi: order must be at least 2");
  if (deleted_row >= n) throw PlanError("phi: deleted row out of range");
  if (g && (g->order() != n || g->root_order() != h.root_order())) {
    throw PlanError("phi: both inputs must share root order and matrix order");
  }
  auto tensors = lsesc ? std::move(*lsesc) : classical_tensors(n - 1, "phi");
  return PhiPlan{std::move(h), std::move(g), std::move(tensors), deleted_row};
}

ButsonMatrix phi(const PhiPlan& plan) {
  const ButsonMatrix& h = plan.h;
  const ButsonMatrix& top = plan.g ? *plan.g : plan.h;
  const std::size_t n = h.order();
  const int m = h.root_order();
  if (n < 2) throw PlanError("phi: order must be at least 2");
  if (plan.deleted_row >= n) throw PlanError("phi: deleted row out of range");
  check_inputs(h, top, "phi");
  check_lsesc_tensors(plan.lsesc, n - 1, n - 2, "phi");

  const std::size_t w = n - 1;  // core order, block width
  const CoreMatrix c = core(h);
  const auto x = top.row(plan.deleted_row);

  ExponentMatrix out(m, n * w, n * w);
  const std::size_t skip[] = {plan.deleted_row};
  write_top_block(top, skip, w, out);

  std::vector<std::size_t> identity(w);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  for (std::size_t k = 0; k < w; ++k) {
    // Row r of X_j^{(k)} C is core row perm[j][r]; block row 0 uses identities.
    std::vector<std::vector<std::size_t>> perm(w, identity);
    if (k > 0) {
      for (std::size_t j = 0; j < w; ++j) perm[j] = frontal_permutation(plan.lsesc[k - 1].frontal(j));
    }
    for (std::size_t r = 0; r < w; ++r) {
      const std::size_t row = w + k * w + r;
      const DiagonalScale lead{x[0], m};
      for (std::size_t col = 0; col < w; ++col) out.set(row, col, lead.apply(c.at(k, col)));
      for (std::size_t j = 0; j < w; ++j) {
        const DiagonalScale scale{x[j + 1], m};
        const std::size_t src = perm[j][r];
        for (std::size_t col = 0; col < w; ++col) {
          out.set(row, (j + 1) * w + col, scale.apply(c.at(src, col)));
        }
      }
    }
  }
  return checked(std::move(out), "phi");
}

PsiPlan make_psi_plan(ButsonMatrix h, std::optional<ButsonMatrix> g, std::optional<IndexPair> c1,
                      std::optional<Cell> c2, std::optional<std::vector<LatinTensor>> lsesc) {
  const std::size_t n = h.order();
  const int m = h.root_order();
  if (m % 2 != 0 || n % 2 != 0 || n < 4) {
    throw PlanError("psi: root order and matrix order must be even, order at least 4");
  }
  const ButsonMatrix& top = g ? *g : h;
  if (top.order() != n || top.root_order() != m) {
    throw PlanError("psi: both inputs must share root order and matrix order");
  }
  if (!c1) {
    const auto pairs = find_c1_pairs(top);
    if (pairs.empty()) throw PlanError("psi: no C1 row pair in the top-block source");
    c1 = pairs.front();
  }
  if (!c2) {
    const auto cells = find_c2_cells(h);
    if (cells.empty()) throw PlanError("psi: no C2 cell in H");
    c2 = cells.front();
  }
  auto tensors = lsesc ? std::move(*lsesc) : classical_tensors(n / 2 - 1, "psi");
  return PsiPlan{std::move(h), std::move(g), std::move(tensors), *c1, *c2};
}

ButsonMatrix psi(const PsiPlan& plan) {
  const ButsonMatrix& h = plan.h;
  const ButsonMatrix& top = plan.g ? *plan.g : plan.h;
  const std::size_t n = h.order();
  const int m = h.root_order();
  if (m % 2 != 0 || n % 2 != 0 || n < 4) {
    throw PlanError("psi: root order and matrix order must be even, order at least 4");
  }
  check_inputs(h, top, "psi");
  const std::size_t half = n / 2 - 1;  // Latin order; rows of C and of D
  const std::size_t w = n - 2;         // order of T
  check_lsesc_tensors(plan.lsesc, half, half - 1, "psi");

  IndexPair c1 = plan.c1;
  if (c1.first > c1.second) std::swap(c1.first, c1.second);
  const auto pairs = find_c1_pairs(top);
  if (std::find(pairs.begin(), pairs.end(), c1) == pairs.end()) {
    throw PlanError("psi: rows " + std::to_string(plan.c1.first + 1) + "," +
                    std::to_string(plan.c1.second + 1) + " do not satisfy C1");
  }
  if (!is_dephased(h)) throw PlanError("psi: H must be dephased to extract T");
  const auto cells = find_c2_cells(h);
  if (std::find(cells.begin(), cells.end(), plan.c2) == cells.end()) {
    throw PlanError("psi: cell " + std::to_string(plan.c2.row + 1) + "," +
                    std::to_string(plan.c2.col + 1) + " is not a C2 witness of H");
  }

  const TExtraction ext = extract_t(h, plan.c2);
  const ExponentMatrix& t = ext.t;
  const auto x = top.row(plan.c1.first);

  ExponentMatrix out(m, n * half, n * half);
  const std::size_t skip[] = {c1.first, c1.second};
  write_top_block(top, skip, half, out);

  std::vector<std::size_t> identity(w);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  for (std::size_t k = 0; k < half; ++k) {
    // Slices of the 2-fold inflation act on the C half and the D half alike.
    std::vector<std::vector<std::size_t>> perm(half, identity);
    if (k > 0) {
      const auto inflated = inflate(plan.lsesc[k - 1], 2);
      for (std::size_t j = 0; j < half; ++j) perm[j] = frontal_permutation(inflated[j]);
    }
    for (std::size_t r = 0; r < w; ++r) {
      const std::size_t row = w + k * w + r;
      const std::size_t lead_src = r < half ? k : half + k;
      for (std::size_t col = 0; col < w; ++col) {
        const DiagonalScale scale{col < half ? x[0] : x[1], m};
        out.set(row, col, scale.apply(t.at(lead_src, col)));
      }
      for (std::size_t j = 0; j < half; ++j) {
        const std::size_t src = perm[j][r];
        for (std::size_t col = 0; col < w; ++col) {
          const DiagonalScale scale{col < half ? x[2 * j + 2] : x[2 * j + 3], m};
          out.set(row, (j + 1) * w + col, scale.apply(t.at(src, col)));
        }
      }
    }
  }
  return checked(std::move(out), "psi");
}

ButsonMatrix corollary5(unsigned r) {
  if (r < 1 || r > 12) throw PlanError("corollary5: r must be in 1..12");
  const std::size_t q = std::size_t{1} << r;
  return psi(make_psi_plan(fourier(2 * (q + 1))));
}

BigInt count_phi_outputs(const BigInt& mols_count, const BigInt& bh_count, const BigInt& n) {
  return mols_count * bh_count * bh_count * n;
}

BigInt count_psi_outputs(const BigInt& mols_count, const BigInt& a2_count,
                         std::span<const BigInt> dh_values) {
  BigInt total = 0;
  for (const auto& dh : dh_values) total += mols_count * a2_count * dh;
  return total;
}

}  // namespace bh
