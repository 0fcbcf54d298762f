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

#include "gaussperiod/numtheory.hpp"

namespace gaussperiod {

/// Partition of the exponents 1..q-1 of the primitive q-th roots of unity
/// into e classes of f exponents each. Class i holds g^(k*e+i) mod q for
/// k = 0..f-1, in that order; the period eta_i is the sum of r^a over the
/// exponents a of class i, with r = exp(2*pi*i/q).
class PeriodSystem {
 public:
  explicit PeriodSystem(const AuxConfig& cfg);

  const AuxConfig& config() const noexcept { return cfg_; }
  std::uint64_t q() const noexcept { return cfg_.q; }
  std::uint64_t e() const noexcept { return cfg_.e; }
  std::uint64_t f() const noexcept { return cfg_.f; }

  const std::vector<std::vector<std::uint64_t>>& classes() const noexcept {
    return classes_;
  }
  const std::vector<std::uint64_t>& period(std::size_t i) const {
    return classes_.at(i);
  }

  /// Class index of exponent a, 1 <= a <= q-1.
  std::uint32_t class_of(std::uint64_t a) const;

  /// Unchecked lookup table: entry a is the class of exponent a.
  const std::vector<std::uint32_t>& class_table() const noexcept { return class_of_; }

 private:
  AuxConfig cfg_;
  std::vector<std::vector<std::uint64_t>> classes_;
  std::vector<std::uint32_t> class_of_;  // indexed by exponent; slot 0 unused
};

PeriodSystem period_classes(const AuxConfig& cfg);

/// Multiplication table of the period ring:
///   eta_i * eta_j = n0(i,j) * 1 + sum_k nk(i,j,k) * eta_k.
class CycNumbers {
 public:
  CycNumbers(std::uint64_t e, std::uint64_t f);

  std::uint64_t e() const noexcept { return e_; }
  std::uint64_t f() const noexcept { return f_; }

  std::uint64_t n0(std::size_t i, std::size_t j) const { return n0_[i * e_ + j]; }
  std::uint64_t nk(std::size_t i, std::size_t j, std::size_t k) const {
    return nk_[(i * e_ + j) * e_ + k];
  }

  /// Row of coefficients of eta_0..eta_{e-1} in eta_i * eta_j.
  const std::uint64_t* row(std::size_t i, std::size_t j) const {
    return nk_.data() + (i * e_ + j) * e_;
  }

  std::uint64_t& n0_ref(std::size_t i, std::size_t j) { return n0_[i * e_ + j]; }
  std::uint64_t& nk_ref(std::size_t i, std::size_t j, std::size_t k) {
    return nk_[(i * e_ + j) * e_ + k];
  }

  friend bool operator==(const CycNumbers&, const CycNumbers&) = default;

 private:
  std::uint64_t e_;
  std::uint64_t f_;
  std::vector<std::uint64_t> n0_;
  std::vector<std::uint64_t> nk_;
};

enum class ConstantsMethod {
  /// Enumerate class i x class j for every pair i <= j, mirror to j > i.
  kDirect,
  /// Enumerate only the i = 0 plane and fill the rest by the cyclic shift
  /// nk(i+s, j+s, k+s) = nk(i, j, k).
  kShift,
};

CycNumbers structure_constants(const PeriodSystem& ps,
                               ConstantsMethod method = ConstantsMethod::kDirect);

/// Element z*1 + sum_k v[k]*eta_k of the period ring.
///
/// The spanning set is redundant (1 + sum_k eta_k = 0), so one element has
/// many coordinate vectors. normalized() picks the one with v[0] = 0;
/// equality compares normalized forms.
struct PeriodElem {
  mpz_class z;
  std::vector<mpz_class> v;

  static PeriodElem zero(std::size_t e) { return PeriodElem{0, std::vector<mpz_class>(e)}; }
  static PeriodElem unit(std::size_t e) { return PeriodElem{1, std::vector<mpz_class>(e)}; }
  static PeriodElem eta(std::size_t e, std::size_t k) {
    auto out = zero(e);
    out.v.at(k) = 1;
    return out;
  }

  std::size_t dim() const noexcept { return v.size(); }

  /// Same element with v[0] = 0 (subtracts v[0] * (1 + sum eta)).
  PeriodElem normalized() const;

  /// True when the element is a rational integer, i.e. all v[k] agree.
  bool is_integer() const;

  /// Rational value z - v[0]; only meaningful when is_integer().
  mpz_class integer_value() const;

  friend bool operator==(const PeriodElem& a, const PeriodElem& b);
};

PeriodElem period_add(const PeriodElem& a, const PeriodElem& b);

/// Exact product a*b. Throws DomainError if the dimensions disagree.
PeriodElem period_mul(const PeriodElem& a, const PeriodElem& b, const CycNumbers& cn);

/// a * eta_k. Linear in the coordinates of a with machine-word constants.
PeriodElem mul_by_period(const PeriodElem& a, std::size_t k, const CycNumbers& cn);

/// Trace down to Q: e*z - sum_k v[k].
mpz_class period_trace(const PeriodElem& a);

}  // namespace gaussperiod
