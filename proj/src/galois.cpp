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

#include "bh/galois.hpp"

#include <sstream>
#include <stdexcept>

namespace bh {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, r};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, ascending, may carry trailing zeros

int poly_degree(const Poly& a) {
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
    if (a[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const int db = poly_degree(b);
  const std::uint64_t lead_inv = inverse_mod(b[static_cast<std::size_t>(db)], p);
  for (int k = poly_degree(a); k >= db; k = poly_degree(a)) {
    const std::uint64_t factor = a[static_cast<std::size_t>(k)] * lead_inv % p;
    const auto shift = static_cast<std::size_t>(k - db);
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t sub = factor * b[static_cast<std::size_t>(j)] % p;
      auto& slot = a[shift + static_cast<std::size_t>(j)];
      slot = static_cast<std::uint32_t>((slot + p - sub) % p);
    }
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p
// digits of `code`, most significant digit = constant term.
Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (int k = static_cast<int>(degree) - 1; k >= 0; --k) {
    f[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int deg = poly_degree(f);
  for (int d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = monic_from_code(code, static_cast<unsigned>(d), p);
      if (poly_degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(ipow(p, r)), modulus_(std::move(modulus)) {}

GaloisField GaloisField::make(std::uint32_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
  if (r == 0) throw std::invalid_argument("make_field: degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("make_field: field order exceeds cap");
  }
  // Candidates in lexicographic order of (c_0, c_1, ..., c_{r-1}).
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f = monic_from_code(code, r, p);
    if (is_irreducible(f, p)) return GaloisField(p, r, std::move(f));
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

FieldElement GaloisField::zero() const { return FieldElement{std::vector<std::uint32_t>(r_, 0)}; }

FieldElement GaloisField::one() const {
  FieldElement e = zero();
  e.coefficients[0] = 1;
  return e;
}

FieldElement GaloisField::element_at(std::uint64_t index) const {
  if (index >= q_) throw std::out_of_range("GaloisField::element_at");
  FieldElement e = zero();
  for (unsigned k = 0; k < r_; ++k) {
    e.coefficients[k] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t GaloisField::index_of(const FieldElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (unsigned k = r_; k-- > 0;) idx = idx * p_ + a.coefficients[k];
  return idx;
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

bool GaloisField::contains(const FieldElement& a) const noexcept {
  if (a.coefficients.size() != r_) return false;
  for (auto c : a.coefficients) {
    if (c >= p_) return false;
  }
  return true;
}

void GaloisField::check(const FieldElement& a) const {
  if (!contains(a)) throw std::invalid_argument("GaloisField: element does not belong to field");
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement s = zero();
  for (unsigned k = 0; k < r_; ++k) s.coefficients[k] = (a.coefficients[k] + b.coefficients[k]) % p_;
  return s;
}

FieldElement GaloisField::neg(const FieldElement& a) const {
  check(a);
  FieldElement s = zero();
  for (unsigned k = 0; k < r_; ++k) s.coefficients[k] = (p_ - a.coefficients[k]) % p_;
  return s;
}

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  Poly prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    for (unsigned j = 0; j < r_; ++j) {
      const std::uint64_t t = std::uint64_t{a.coefficients[i]} * b.coefficients[j] % p_;
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + t) % p_);
    }
  }
  Poly reduced = poly_mod(std::move(prod), modulus_, p_);
  reduced.resize(r_, 0);
  return FieldElement{std::move(reduced)};
}

std::string GaloisField::to_string(const FieldElement& a) const {
  check(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned k = r_; k-- > 0;) {
    const auto c = a.coefficients[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    if (c != 1 || k == 0) out << c;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace bh
