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

#include <gmpxx.h>

#include "gaussperiod/int_poly.hpp"
#include "gaussperiod/numtheory.hpp"

namespace gaussperiod {

/// Period equation psi_e(x) = prod_k (x - eta_k), built in the period basis
/// one linear factor at a time. Throws IntegrityError if any finished
/// coefficient is not a rational integer.
IntPoly period_polynomial(const AuxConfig& cfg);

/// Largest conductor accepted by period_polynomial_dense.
inline constexpr std::uint64_t kDenseMaxQ = 1000;

/// Same polynomial computed naively over the length-q cyclotomic basis.
/// Independent of the structure-constant machinery; for testing.
IntPoly period_polynomial_dense(const AuxConfig& cfg);

struct FloatPolyResult {
  IntPoly poly;                // coefficients rounded to nearest integers
  double max_residual = 0.0;   // max distance of a real part to its integer
  double max_imag = 0.0;       // max |imaginary part| over coefficients
  unsigned precision_bits = 0;

  /// False signals "insufficient precision": some coefficient was at
  /// least 1/2 away from the integer it was rounded to.
  bool sufficient() const noexcept { return max_residual < 0.5 && max_imag < 0.5; }
};

/// Numerical product of (x - eta_i) at the given MPFR precision.
FloatPolyResult period_polynomial_float(const AuxConfig& cfg, unsigned precision_bits);

/// Starting precision for the floating oracle: 64 + ceil(2.5 e log2 q) bits.
unsigned default_float_precision(const AuxConfig& cfg);

/// Runs period_polynomial_float from default_float_precision, doubling the
/// precision while the residual is >= accept_residual, at most
/// max_escalations times. Returns the last attempt.
FloatPolyResult float_oracle_polynomial(const AuxConfig& cfg, double accept_residual = 0.25,
                                        unsigned max_escalations = 3);

/// Power sums p_m = sum_i eta_i^m = trace(eta_0^m) for m = 1..m_max.
std::vector<mpz_class> power_sums(const AuxConfig& cfg, std::size_t m_max);

}  // namespace gaussperiod
