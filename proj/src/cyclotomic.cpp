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

#include "bh/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bh {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(BigInt value) { return IntPolynomial({std::move(value)}); }

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

PolyDivision divide_unit_leading(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero() || (divisor.leading() != 1 && divisor.leading() != -1)) {
    throw std::invalid_argument("divide_unit_leading: divisor must have leading coefficient +-1");
  }
  const int dd = divisor.degree();
  std::vector<BigInt> rem = dividend.coefficients();
  if (dividend.degree() < dd) return {IntPolynomial{}, dividend};

  const auto& d = divisor.coefficients();
  const bool negative_lead = divisor.leading() < 0;
  std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  for (int k = dividend.degree(); k >= dd; --k) {
    BigInt factor = rem[static_cast<std::size_t>(k)];
    if (factor == 0) continue;
    if (negative_lead) factor = -factor;
    const auto shift = static_cast<std::size_t>(k - dd);
    quot[shift] = factor;
    for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= factor * d[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

std::mutex& cyclotomic_mutex() {
  static std::mutex mu;
  return mu;
}

// Node-stable storage so returned references survive later insertions.
std::map<unsigned, std::unique_ptr<IntPolynomial>>& cyclotomic_cache() {
  static std::map<unsigned, std::unique_ptr<IntPolynomial>> cache;
  return cache;
}

const IntPolynomial& cyclotomic_locked(unsigned m) {
  auto& cache = cyclotomic_cache();
  if (auto it = cache.find(m); it != cache.end()) return *it->second;

  IntPolynomial numerator = IntPolynomial::monomial(m) - IntPolynomial::constant(1);
  IntPolynomial denominator = IntPolynomial::constant(1);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) denominator = denominator * cyclotomic_locked(d);
  }
  PolyDivision div = divide_unit_leading(numerator, denominator);
  if (!div.remainder.is_zero()) {
    throw std::logic_error("cyclotomic_poly: inexact division");
  }
  auto [it, inserted] = cache.emplace(m, std::make_unique<IntPolynomial>(std::move(div.quotient)));
  return *it->second;
}

}  // namespace

const IntPolynomial& cyclotomic_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  std::lock_guard lock(cyclotomic_mutex());
  return cyclotomic_locked(m);
}

ExponentCountVector::ExponentCountVector(unsigned m) : m_(m), counts_(m, 0) {
  if (m == 0) throw std::invalid_argument("ExponentCountVector: m must be positive");
}

ExponentCountVector::ExponentCountVector(unsigned m, std::vector<std::uint64_t> counts)
    : m_(m), counts_(std::move(counts)) {
  if (m == 0) throw std::invalid_argument("ExponentCountVector: m must be positive");
  if (counts_.size() != m) {
    throw std::invalid_argument("ExponentCountVector: counts length must equal m");
  }
}

std::uint64_t ExponentCountVector::total() const noexcept {
  std::uint64_t s = 0;
  for (auto c : counts_) s += c;
  return s;
}

void ExponentCountVector::add(unsigned exponent, std::uint64_t times) {
  if (exponent >= m_) throw std::out_of_range("ExponentCountVector::add: exponent out of range");
  counts_[exponent] += times;
}

IntPolynomial ExponentCountVector::to_polynomial() const {
  std::vector<BigInt> c(counts_.begin(), counts_.end());
  return IntPolynomial(std::move(c));
}

ExponentCountVector dot_counts(std::span<const int> a, std::span<const int> b, unsigned m) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_counts: row length mismatch");
  const int mi = static_cast<int>(m);
  ExponentCountVector out(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= mi || b[i] < 0 || b[i] >= mi) {
      throw std::out_of_range("dot_counts: exponent outside [0, m)");
    }
    out.add(static_cast<unsigned>((a[i] - b[i] + mi) % mi));
  }
  return out;
}

bool sum_equals(const ExponentCountVector& c, long long v) {
  const IntPolynomial target = c.to_polynomial() - IntPolynomial::constant(v);
  return divide_unit_leading(target, cyclotomic_poly(c.m())).remainder.is_zero();
}

std::complex<double> approx_sum(const ExponentCountVector& c) {
  std::complex<double> s{0.0, 0.0};
  const double m = c.m();
  for (unsigned k = 0; k < c.m(); ++k) {
    if (c.counts()[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * k / m;
    s += static_cast<double>(c.counts()[k]) * std::polar(1.0, angle);
  }
  return s;
}

int negate_exponent(int e, int m) {
  if (m % 2 != 0) throw std::invalid_argument("negate_exponent: m must be even");
  return (e + m / 2) % m;
}

}  // namespace bh
