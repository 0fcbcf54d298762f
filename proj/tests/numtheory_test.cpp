// Copyright 2026 The gaussperiod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussperiod/numtheory.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gaussperiod/errors.hpp"
#include "oracles.hpp"

namespace gaussperiod {
namespace {

using ::gaussperiod::testing::brute_is_prime;
using ::gaussperiod::testing::brute_primitive_root;

std::vector<std::uint64_t> q_list(const std::vector<AuxConfig>& cfgs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cfgs) out.push_back(c.q);
  return out;
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(43651));
  EXPECT_FALSE(is_prime(63));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(n), brute_is_prime(n)) << n;
  }
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_FALSE(is_prime(kMaxSupportedInteger));  // 2^63 - 1 = 7^2 * 73 * ...
  EXPECT_TRUE(is_prime(9223372036854775783ULL));  // largest prime below 2^63
}

TEST(IsPrime, StrongPseudoprimesAreRejected) {
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(2152302898747ULL));
  EXPECT_FALSE(is_prime(3474749660383ULL));
  EXPECT_FALSE(is_prime(341550071728321ULL));
  EXPECT_FALSE(is_prime(3825123056546413051ULL));
  EXPECT_TRUE(is_prime(4611686018427387847ULL));  // largest prime below 2^62
}

TEST(IsPrime, OutOfRangeThrows) {
  EXPECT_THROW(is_prime(kMaxSupportedInteger + 1), UnsupportedRangeError);
}

TEST(Factor, Examples) {
  EXPECT_EQ(factor(22), (std::vector<std::uint64_t>{2, 11}));
  EXPECT_EQ(factor(88), (std::vector<std::uint64_t>{2, 2, 2, 11}));
  EXPECT_EQ(factor(96), (std::vector<std::uint64_t>{2, 2, 2, 2, 2, 3}));
  EXPECT_THROW(factor(1), DomainError);
  EXPECT_THROW(factor(0), DomainError);
}

TEST(Factor, ProductAndPrimalityProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1'000'000'000'000ULL);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = trial < 50 ? static_cast<std::uint64_t>(trial) + 2 : dist(rng);
    const auto fs = factor(n);
    std::uint64_t prod = 1;
    for (auto p : fs) {
      ASSERT_TRUE(is_prime(p)) << p;
      prod *= p;
    }
    ASSERT_EQ(prod, n);
    ASSERT_TRUE(std::is_sorted(fs.begin(), fs.end()));
    ASSERT_EQ(is_prime(n), fs.size() == 1 && fs[0] == n);
  }
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(5), 2u);
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(23), 5u);
  EXPECT_THROW(primitive_root(9), DomainError);
  EXPECT_THROW(primitive_root(2), DomainError);
}

TEST(PrimitiveRoot, MatchesBruteForceOrderSearch) {
  for (std::uint64_t q = 3; q < 2000; ++q) {
    if (!brute_is_prime(q)) continue;
    ASSERT_EQ(primitive_root(q), brute_primitive_root(q)) << q;
  }
}

TEST(MultOrder, DividesGroupOrder) {
  for (std::uint64_t a = 1; a < 89; ++a) {
    const auto ord = mult_order(a, 89);
    EXPECT_EQ(88 % ord, 0u);
    EXPECT_EQ(pow_mod(a, ord, 89), 1u);
  }
  EXPECT_EQ(mult_order(3, 89), 88u);
}

TEST(AuxPrimes, Examples) {
  EXPECT_EQ(q_list(aux_primes(11, 4, true)), (std::vector<std::uint64_t>{23, 67, 89, 199}));
  EXPECT_EQ(q_list(aux_primes(2, 3, true)), (std::vector<std::uint64_t>{5, 13, 17}));
  EXPECT_EQ(q_list(aux_primes(29, 1, true)), (std::vector<std::uint64_t>{59}));
}

TEST(AuxPrimes, NotTotallyRealIncludesOddF) {
  // 7 = 2*3 + 1 has f = 3.
  EXPECT_EQ(q_list(aux_primes(2, 3, false)), (std::vector<std::uint64_t>{3, 5, 7}));
  EXPECT_EQ(q_list(aux_primes(3, 3, false)), (std::vector<std::uint64_t>{7, 13, 19}));
}

TEST(AuxPrimes, ConfigInvariants) {
  for (std::uint64_t degree : {1u, 2u, 3u, 5u, 6u, 11u, 97u}) {
    for (const auto& cfg : aux_primes(degree, 25, true)) {
      ASSERT_EQ(cfg.e * cfg.f, cfg.q - 1);
      ASSERT_EQ(cfg.f % 2, 0u);
      ASSERT_EQ(pow_mod(cfg.g, cfg.q - 1, cfg.q), 1u);
      for (auto ell : prime_divisors(cfg.q - 1)) {
        ASSERT_NE(pow_mod(cfg.g, (cfg.q - 1) / ell, cfg.q), 1u);
      }
    }
  }
}

TEST(AuxPrimes, OddDegreeGivesAllPrimesCongruentToOne) {
  for (std::uint64_t degree : {3u, 7u, 13u}) {
    const auto got = q_list(aux_primes(degree, 30, true));
    std::vector<std::uint64_t> want;
    for (std::uint64_t q = 3; want.size() < 30; ++q) {
      if (brute_is_prime(q) && q % degree == 1) want.push_back(q);
    }
    EXPECT_EQ(got, want) << degree;
  }
  const auto got2 = q_list(aux_primes(2, 30, true));
  std::vector<std::uint64_t> want2;
  for (std::uint64_t q = 3; want2.size() < 30; ++q) {
    if (brute_is_prime(q) && q % 4 == 1) want2.push_back(q);
  }
  EXPECT_EQ(got2, want2);
}

TEST(MakeAuxConfig, Validation) {
  const auto cfg = make_aux_config(89, 11);
  EXPECT_EQ(cfg.f, 8u);
  EXPECT_EQ(cfg.g, 3u);
  EXPECT_THROW(make_aux_config(10, 3), DomainError);
  EXPECT_THROW(make_aux_config(11, 3), DomainError);
  EXPECT_THROW(make_aux_config(2, 1), DomainError);
  EXPECT_THROW(make_aux_config(11, 0), DomainError);
  EXPECT_THROW(make_aux_config(11, 5, 3), DomainError);  // 3 has order 5 mod 11
  EXPECT_EQ(make_aux_config(11, 5, 7).g, 7u);
}

}  // namespace
}  // namespace gaussperiod
