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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gaussperiod {

/// Largest integer accepted by the primality and factoring routines.
inline constexpr std::uint64_t kMaxSupportedInteger = (std::uint64_t{1} << 63) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin. Throws UnsupportedRangeError above
/// kMaxSupportedInteger.
bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, in non-decreasing order.
/// Throws DomainError for n < 2.
std::vector<std::uint64_t> factor(std::uint64_t n);

/// Distinct prime divisors of n.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Multiplicative order of a modulo the prime q.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t q);

/// True when g generates (Z/qZ)^*.
bool is_primitive_root(std::uint64_t g, std::uint64_t q);

/// Smallest primitive root of the odd prime q.
std::uint64_t primitive_root(std::uint64_t q);

/// One Gaussian period setup: conductor q, subfield degree e, period
/// length f = (q-1)/e and a generator g of (Z/qZ)^*.
///
/// Construct through make_aux_config, which validates every field.
struct AuxConfig {
  std::uint64_t q = 0;
  std::uint64_t e = 0;
  std::uint64_t f = 0;
  std::uint64_t g = 0;

  bool totally_real() const noexcept { return f % 2 == 0; }

  friend bool operator==(const AuxConfig&, const AuxConfig&) = default;
};

/// Validated configuration using the smallest primitive root of q.
/// Throws DomainError when q is not an odd prime or e does not divide q-1.
AuxConfig make_aux_config(std::uint64_t q, std::uint64_t e);

/// Same with an explicit generator; g must be a primitive root of q.
AuxConfig make_aux_config(std::uint64_t q, std::uint64_t e, std::uint64_t g);

/// First `count` primes q (increasing) with degree | q-1; with
/// totally_real, additionally (q-1)/degree even.
std::vector<AuxConfig> aux_primes(std::uint64_t degree, std::size_t count,
                                  bool totally_real);

}  // namespace gaussperiod
