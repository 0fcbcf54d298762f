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
#include <optional>
#include <string>

#include <gmpxx.h>

#include "gaussperiod/int_poly.hpp"
#include "gaussperiod/numtheory.hpp"

namespace gaussperiod {

/// sign * base^exponent, the shape of every field discriminant here.
struct SignedPrimePower {
  int sign = 1;
  std::uint64_t base = 0;
  std::uint64_t exponent = 0;

  mpz_class value() const;
  /// Decimal digits of |value()|.
  std::size_t digits() const;
  /// "23^10", "-7", "5^3"; the exponent is omitted when it is 1.
  std::string to_string() const;

  friend bool operator==(const SignedPrimePower&, const SignedPrimePower&) = default;
};

/// (-1)^(n(n-1)/2) * Res(p, p') / lc(p), reconstructed by CRT from
/// resultants modulo 62-bit primes until the product of the moduli
/// exceeds twice the Hadamard bound of the Sylvester matrix.
/// Throws DomainError for constant polynomials.
mpz_class poly_discriminant(const IntPoly& p);

/// Number of moduli poly_discriminant will use for p (diagnostics).
std::size_t discriminant_modulus_count(const IntPoly& p);

/// Field discriminant of the degree-e subfield: -q^(e-1) when
/// (e-1) mod 4 == 1 and f is odd, +q^(e-1) otherwise.
SignedPrimePower field_discriminant(const AuxConfig& cfg);

/// Same magnitude with sign (-1)^n_pairs when (e-1) mod 4 == 1, else +1.
/// Throws DomainError when 2*n_pairs > e.
SignedPrimePower field_discriminant_by_pairs(const AuxConfig& cfg, std::uint64_t n_pairs);

/// Exact number of distinct real roots by a Sturm sequence built from
/// primitive pseudo-remainders. Throws DomainError if p is not squarefree.
std::size_t real_root_count(const IntPoly& p);

/// Non-negative k with poly_disc = k^2 * field_disc. Throws IntegrityError
/// on sign mismatch, non-divisibility or a non-square quotient.
mpz_class index_k(const mpz_class& poly_disc, const SignedPrimePower& field_disc);

struct AnalyzeOptions {
  /// Run the Sturm count regardless of size.
  bool force_sturm = false;
  /// Sturm runs by default when e <= sturm_max_e or q <= sturm_max_q.
  std::uint64_t sturm_max_e = 31;
  std::uint64_t sturm_max_q = 2000;
};

bool sturm_enabled(const AuxConfig& cfg, const AnalyzeOptions& options);

struct DiscriminantReport {
  AuxConfig cfg;
  IntPoly poly;
  mpz_class poly_disc;
  SignedPrimePower field_disc;
  mpz_class index_k;
  std::optional<std::size_t> n_real;   // empty when Sturm was skipped
  std::optional<std::size_t> n_pairs;  // empty when Sturm was skipped
  bool monogenic = false;
};

/// Builds psi_e and every derived quantity. When the real-root count is
/// available, also checks that the two sign rules for the field
/// discriminant agree; any failed identity throws IntegrityError.
DiscriminantReport analyze(const AuxConfig& cfg, const AnalyzeOptions& options = {});

}  // namespace gaussperiod
