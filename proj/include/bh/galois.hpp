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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bh {

bool is_prime(std::uint64_t p);

struct PrimePower {
  std::uint64_t p;
  unsigned r;
};

/// Decomposes q = p^r; empty when q is not a prime power (q = 1 included).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Element of GF(p^r): r coefficients in [0, p), ascending degree.
struct FieldElement {
  std::vector<std::uint32_t> coefficients;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^r) as F_p[x] / (modulus). The modulus is the lexicographically
/// smallest monic irreducible of degree r, comparing coefficient tuples from
/// the constant term upward.
class GaloisField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Throws std::invalid_argument if p is not prime, r == 0, or p^r exceeds kMaxOrder.
  static GaloisField make(std::uint32_t p, unsigned r);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return r_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus, r + 1 coefficients ascending.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;

  /// Elements in base-p digit order (constant coefficient least significant),
  /// so index 0 is always the zero element.
  std::vector<FieldElement> elements() const;
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;

  bool contains(const FieldElement& a) const noexcept;
  std::string to_string(const FieldElement& a) const;

 private:
  GaloisField(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus);
  void check(const FieldElement& a) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

inline GaloisField make_field(std::uint32_t p, unsigned r) { return GaloisField::make(p, r); }
inline std::vector<FieldElement> enumerate_elements(const GaloisField& f) { return f.elements(); }
inline FieldElement field_add(const GaloisField& f, const FieldElement& a, const FieldElement& b) {
  return f.add(a, b);
}
inline FieldElement field_mul(const GaloisField& f, const FieldElement& a, const FieldElement& b) {
  return f.mul(a, b);
}

}  // namespace bh
