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

#include <array>
#include <string>

#include "gaussperiod/errors.hpp"

namespace gaussperiod {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

void check_range(std::uint64_t n) {
  if (n > kMaxSupportedInteger) {
    throw UnsupportedRangeError("integer " + std::to_string(n) +
                                " exceeds supported range (< 2^63)");
  }
}

// n - 1 = d * 2^s with d odd.
bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                        unsigned s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  check_range(n);
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (auto a : kSmall) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> factor(std::uint64_t n) {
  check_range(n);
  if (n < 2) throw DomainError("factor: n must be at least 2");
  std::vector<std::uint64_t> out;
  while (n % 2 == 0) {
    out.push_back(2);
    n /= 2;
  }
  bool cofactor_prime = n > 1 && is_prime(n);
  for (std::uint64_t p = 3; !cofactor_prime && p <= n / p; p += 2) {
    if (n % p != 0) continue;
    do {
      out.push_back(p);
      n /= p;
    } while (n % p == 0);
    cofactor_prime = n > 1 && is_prime(n);
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto p : factor(n)) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("mult_order: modulus must be prime");
  if (a % q == 0) throw DomainError("mult_order: a must be a unit mod q");
  std::uint64_t order = q - 1;
  if (order == 1) return 1;
  for (auto ell : prime_divisors(q - 1)) {
    while (order % ell == 0 && pow_mod(a, order / ell, q) == 1) order /= ell;
  }
  return order;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("is_primitive_root: q must be prime");
  if (g % q == 0) return false;
  if (q == 2) return g % 2 == 1;
  for (auto ell : prime_divisors(q - 1)) {
    if (pow_mod(g, (q - 1) / ell, q) == 1) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (q < 3 || !is_prime(q)) {
    throw DomainError("primitive_root: " + std::to_string(q) +
                      " is not an odd prime");
  }
  const auto divisors = prime_divisors(q - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool generates = true;
    for (auto ell : divisors) {
      if (pow_mod(g, (q - 1) / ell, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
}

namespace {

void validate_qe(std::uint64_t q, std::uint64_t e) {
  if (q < 3 || !is_prime(q)) {
    throw DomainError("aux prime " + std::to_string(q) + " is not an odd prime");
  }
  if (e == 0 || (q - 1) % e != 0) throw DomainError("degree must divide q-1");
}

}  // namespace

AuxConfig make_aux_config(std::uint64_t q, std::uint64_t e) {
  validate_qe(q, e);
  return AuxConfig{q, e, (q - 1) / e, primitive_root(q)};
}

AuxConfig make_aux_config(std::uint64_t q, std::uint64_t e, std::uint64_t g) {
  validate_qe(q, e);
  if (g >= q || !is_primitive_root(g, q)) {
    throw DomainError(std::to_string(g) + " is not a primitive root mod " +
                      std::to_string(q));
  }
  return AuxConfig{q, e, (q - 1) / e, g};
}

std::vector<AuxConfig> aux_primes(std::uint64_t degree, std::size_t count,
                                  bool totally_real) {
  if (degree == 0) throw DomainError("aux_primes: degree must be positive");
  std::vector<AuxConfig> out;
  out.reserve(count);
  // Candidates are q = degree*f + 1; f even is required for totally real.
  const std::uint64_t step = totally_real ? 2 : 1;
  for (std::uint64_t f = step; out.size() < count; f += step) {
    const std::uint64_t q = degree * f + 1;
    if (q < 3 || !is_prime(q)) continue;
    out.push_back(AuxConfig{q, degree, f, primitive_root(q)});
  }
  return out;
}

}  // namespace gaussperiod
