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

// Exact zero tests for integer combinations of m-th roots of unity.
//
// A sum  sum_k counts[k] * zeta_m^k  equals the integer v exactly iff the
// m-th cyclotomic polynomial divides  (sum_k counts[k] x^k) - v  in Z[x].
// Everything here is integer arithmetic; approx_sum() is only an oracle.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bh {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, ascending degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);
  static IntPolynomial constant(BigInt value);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a divisor with leading coefficient +1 or -1, so quotient
/// and remainder stay in Z[x]. Throws std::invalid_argument otherwise.
PolyDivision divide_unit_leading(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The m-th cyclotomic polynomial, via (x^m - 1) / prod_{d|m, d<m} Phi_d.
/// Results are memoized process-wide; the cache is mutex guarded.
const IntPolynomial& cyclotomic_poly(unsigned m);

/// Multiset of root exponents produced by pairing two exponent rows.
/// counts[k] is the multiplicity of zeta_m^k in the sum.
class ExponentCountVector {
 public:
  explicit ExponentCountVector(unsigned m);
  ExponentCountVector(unsigned m, std::vector<std::uint64_t> counts);

  unsigned m() const noexcept { return m_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

  void add(unsigned exponent, std::uint64_t times = 1);

  /// Sum counts[k] x^k as an integer polynomial.
  IntPolynomial to_polynomial() const;

 private:
  unsigned m_;
  std::vector<std::uint64_t> counts_;
};

/// Exponent multiset of <a, b> = sum_i zeta^{a_i} * conj(zeta^{b_i}).
/// Conjugation maps e to (m - e) mod m, so term i has exponent (a_i - b_i) mod m.
ExponentCountVector dot_counts(std::span<const int> a, std::span<const int> b, unsigned m);

/// Exact test: does the root sum described by `c` equal `v`?
bool sum_equals(const ExponentCountVector& c, long long v);

/// Double precision evaluation of the root sum. Oracle only.
std::complex<double> approx_sum(const ExponentCountVector& c);

/// Exponent of the conjugate root, (m - e) mod m.
constexpr int conjugate_exponent(int e, int m) noexcept { return (m - e % m) % m; }

/// Exponent of -zeta^e; only meaningful for even m.
int negate_exponent(int e, int m);

}  // namespace bh
