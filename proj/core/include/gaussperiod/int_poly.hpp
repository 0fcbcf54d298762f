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
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gaussperiod {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Stored in ascending powers with no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending);

  static IntPoly from_descending(const std::vector<mpz_class>& descending);
  /// Parses decimal strings; throws DomainError on a malformed entry.
  static IntPoly from_descending(const std::vector<std::string>& descending);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the polynomial; 0 for constants and for the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i (zero beyond the degree).
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& ascending() const noexcept { return coeffs_; }
  std::vector<mpz_class> descending() const;
  std::vector<std::string> descending_strings() const;

  IntPoly derivative() const;

  /// "1,1,-40,..." with no spaces, highest power first.
  std::string to_csv(std::string_view separator = ",") const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

}  // namespace gaussperiod
