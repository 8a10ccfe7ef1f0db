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

#include <gtest/gtest.h>

#include <set>

namespace bh {
namespace {

using Coeffs = std::vector<std::uint32_t>;

TEST(PrimePower, Decomposition) {
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_FALSE(as_prime_power(6));
  EXPECT_FALSE(as_prime_power(12));
  auto pp = as_prime_power(64);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->p, 2u);
  EXPECT_EQ(pp->r, 6u);
  pp = as_prime_power(49);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->p, 7u);
  EXPECT_EQ(pp->r, 2u);
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(1));
}

TEST(MakeField, Moduli) {
  EXPECT_EQ(make_field(2, 1).modulus(), (Coeffs{0, 1}));     // x
  EXPECT_EQ(make_field(2, 2).modulus(), (Coeffs{1, 1, 1}));  // x^2 + x + 1
  EXPECT_EQ(make_field(2, 3).modulus(), (Coeffs{1, 0, 1, 1}));  // x^3 + x^2 + 1
  EXPECT_EQ(make_field(3, 2).modulus(), (Coeffs{1, 0, 1}));  // x^2 + 1
  const GaloisField f3 = make_field(3, 1);
  EXPECT_EQ(f3.order(), 3u);
}

TEST(MakeField, Errors) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(1, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 21), std::invalid_argument);
  EXPECT_NO_THROW(make_field(2, 20));
}

TEST(Enumerate, DigitOrder) {
  const auto gf2 = enumerate_elements(make_field(2, 1));
  ASSERT_EQ(gf2.size(), 2u);
  EXPECT_EQ(gf2[0].coefficients, Coeffs{0});
  EXPECT_EQ(gf2[1].coefficients, Coeffs{1});

  const GaloisField f4 = make_field(2, 2);
  const auto gf4 = enumerate_elements(f4);
  ASSERT_EQ(gf4.size(), 4u);
  EXPECT_EQ(gf4[0].coefficients, (Coeffs{0, 0}));
  EXPECT_EQ(gf4[1].coefficients, (Coeffs{1, 0}));
  EXPECT_EQ(gf4[2].coefficients, (Coeffs{0, 1}));  // x
  EXPECT_EQ(gf4[3].coefficients, (Coeffs{1, 1}));  // x + 1
  EXPECT_EQ(f4.to_string(gf4[3]), "x + 1");

  const auto gf3 = enumerate_elements(make_field(3, 1));
  EXPECT_EQ(gf3[2].coefficients, Coeffs{2});
}

TEST(Arithmetic, Examples) {
  const GaloisField f2 = make_field(2, 1);
  EXPECT_EQ(field_add(f2, f2.one(), f2.one()), f2.zero());

  const GaloisField f4 = make_field(2, 2);
  const FieldElement x = f4.element_at(2);
  EXPECT_EQ(field_mul(f4, x, x), f4.element_at(3));
  for (const auto& a : f4.elements()) EXPECT_EQ(field_mul(f4, a, f4.zero()), f4.zero());

  EXPECT_THROW(f4.add(x, FieldElement{{1}}), std::invalid_argument);
}

// Exhaustive field axioms for every q = p^r <= 64.
TEST(Arithmetic, FieldLawsExhaustive) {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const GaloisField f = make_field(static_cast<std::uint32_t>(pp->p), pp->r);
    const auto el = f.elements();
    ASSERT_EQ(el.size(), q);
    std::set<std::uint64_t> distinct;
    for (const auto& a : el) distinct.insert(f.index_of(a));
    EXPECT_EQ(distinct.size(), q);
    EXPECT_EQ(el[0], f.zero());

    for (const auto& a : el) {
      EXPECT_EQ(f.add(a, f.zero()), a);
      EXPECT_EQ(f.mul(a, f.one()), a);
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      if (!(a == f.zero())) {
        bool has_inverse = false;
        for (const auto& b : el) has_inverse = has_inverse || f.mul(a, b) == f.one();
        EXPECT_TRUE(has_inverse) << "q=" << q;
      }
      for (const auto& b : el) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (const auto& c : el) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << "q=" << q;
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << "q=" << q;
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << "q=" << q;
        }
      }
    }
  }
}

}  // namespace
}  // namespace bh
