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

#include "gaussperiod/periodpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <mpfr.h>

#include "gaussperiod/errors.hpp"
#include "gaussperiod/period_core.hpp"

namespace gaussperiod {

namespace {

// dest -= eta_k * src, accumulated in place.
void sub_mul_by_period(PeriodElem& dest, const PeriodElem& src, std::size_t k,
                       const CycNumbers& cn) {
  const std::size_t e = cn.e();
  dest.v[k] -= src.z;
  for (std::size_t i = 0; i < e; ++i) {
    const mpz_srcptr vi = src.v[i].get_mpz_t();
    if (mpz_sgn(vi) == 0) continue;
    if (const auto c = cn.n0(k, i); c != 0) mpz_submul_ui(dest.z.get_mpz_t(), vi, c);
    const std::uint64_t* row = cn.row(k, i);
    for (std::size_t m = 0; m < e; ++m) {
      if (row[m] != 0) mpz_submul_ui(dest.v[m].get_mpz_t(), vi, row[m]);
    }
  }
}

void normalize_in_place(PeriodElem& a) {
  if (a.v.empty() || sgn(a.v[0]) == 0) return;
  const mpz_class shift = a.v[0];
  a.z -= shift;
  for (auto& c : a.v) c -= shift;
}

}  // namespace

IntPoly period_polynomial(const AuxConfig& cfg) {
  const PeriodSystem ps(cfg);
  const CycNumbers cn = structure_constants(ps);
  const std::size_t e = cfg.e;

  // c[j] is the coefficient of x^j of prod_{k' < k} (x - eta_k').
  std::vector<PeriodElem> c(e + 1, PeriodElem::zero(e));
  c[0] = PeriodElem::unit(e);
  PeriodElem scratch = PeriodElem::zero(e);
  for (std::size_t k = 0; k < e; ++k) {
    c[k + 1] = c[k];
    for (std::size_t j = k; j >= 1; --j) {
      scratch = c[j - 1];
      sub_mul_by_period(scratch, c[j], k, cn);
      normalize_in_place(scratch);
      std::swap(c[j], scratch);
    }
    scratch = PeriodElem::zero(e);
    sub_mul_by_period(scratch, c[0], k, cn);
    normalize_in_place(scratch);
    std::swap(c[0], scratch);
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(e + 1);
  for (std::size_t j = 0; j <= e; ++j) {
    if (!c[j].is_integer()) {
      throw IntegrityError("non-integer coefficient of x^" + std::to_string(j) +
                           " for q=" + std::to_string(cfg.q) +
                           ", e=" + std::to_string(cfg.e));
    }
    coeffs.push_back(c[j].integer_value());
  }
  return IntPoly(std::move(coeffs));
}

IntPoly period_polynomial_dense(const AuxConfig& cfg) {
  if (cfg.q > kDenseMaxQ) {
    throw UnsupportedRangeError("dense oracle supports q <= " + std::to_string(kDenseMaxQ));
  }
  const PeriodSystem ps(cfg);
  const std::size_t q = cfg.q;
  const std::size_t e = cfg.e;
  using Dense = std::vector<mpz_class>;  // index = exponent of r

  std::vector<Dense> c(e + 1, Dense(q));
  c[0][0] = 1;
  Dense next(q);
  for (std::size_t k = 0; k < e; ++k) {
    const auto& exps = ps.period(k);
    for (std::size_t j = k + 1; j-- > 0;) {
      // next = c[j-1] - eta_k * c[j]
      if (j >= 1) {
        next = c[j - 1];
      } else {
        std::fill(next.begin(), next.end(), 0);
      }
      for (std::size_t t = 0; t < q; ++t) {
        if (sgn(c[j][t]) == 0) continue;
        for (auto a : exps) {
          std::size_t s = t + a;
          if (s >= q) s -= q;
          next[s] -= c[j][t];
        }
      }
      std::swap(c[j], next);
    }
    // x^{k+1} term is the shifted leading coefficient, which is always 1.
    c[k + 1].assign(q, 0);
    c[k + 1][0] = 1;
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(e + 1);
  for (std::size_t j = 0; j <= e; ++j) {
    const Dense& vec = c[j];
    for (std::size_t t = 2; t < q; ++t) {
      if (vec[t] != vec[1]) {
        throw IntegrityError("non-constant tail in dense coefficient of x^" +
                             std::to_string(j));
      }
    }
    coeffs.push_back(vec[0] - vec[1]);
  }
  return IntPoly(std::move(coeffs));
}

namespace {

// Minimal RAII holder for an MPFR value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& other) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

}  // namespace

unsigned default_float_precision(const AuxConfig& cfg) {
  const double bits = 2.5 * static_cast<double>(cfg.e) * std::log2(static_cast<double>(cfg.q));
  return 64 + static_cast<unsigned>(std::ceil(bits));
}

FloatPolyResult period_polynomial_float(const AuxConfig& cfg, unsigned precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) precision_bits = MPFR_PREC_MIN;
  const mpfr_prec_t prec = precision_bits;
  const PeriodSystem ps(cfg);
  const std::size_t e = cfg.e;

  Real two_pi_over_q(prec);
  mpfr_const_pi(two_pi_over_q.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi_over_q.get(), two_pi_over_q.get(), 2, MPFR_RNDN);
  mpfr_div_ui(two_pi_over_q.get(), two_pi_over_q.get(), cfg.q, MPFR_RNDN);

  Real angle(prec), s(prec), co(prec);
  std::vector<Complex> periods(e, Complex(prec));
  for (std::size_t i = 0; i < e; ++i) {
    for (auto a : ps.period(i)) {
      mpfr_mul_ui(angle.get(), two_pi_over_q.get(), a, MPFR_RNDN);
      mpfr_sin_cos(s.get(), co.get(), angle.get(), MPFR_RNDN);
      mpfr_add(periods[i].re.get(), periods[i].re.get(), co.get(), MPFR_RNDN);
      mpfr_add(periods[i].im.get(), periods[i].im.get(), s.get(), MPFR_RNDN);
    }
  }

  // Ascending coefficients of the running product.
  std::vector<Complex> c(e + 1, Complex(prec));
  mpfr_set_ui(c[0].re.get(), 1, MPFR_RNDN);
  Real t1(prec), t2(prec);
  Complex prod(prec);
  for (std::size_t k = 0; k < e; ++k) {
    const Complex& eta = periods[k];
    c[k + 1] = c[k];
    for (std::size_t j = k + 1; j-- > 0;) {
      // c[j] = c[j-1] - eta * c[j]
      mpfr_mul(t1.get(), eta.re.get(), c[j].re.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), eta.im.get(), c[j].im.get(), MPFR_RNDN);
      mpfr_sub(prod.re.get(), t1.get(), t2.get(), MPFR_RNDN);
      mpfr_mul(t1.get(), eta.re.get(), c[j].im.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), eta.im.get(), c[j].re.get(), MPFR_RNDN);
      mpfr_add(prod.im.get(), t1.get(), t2.get(), MPFR_RNDN);
      if (j >= 1) {
        mpfr_sub(c[j].re.get(), c[j - 1].re.get(), prod.re.get(), MPFR_RNDN);
        mpfr_sub(c[j].im.get(), c[j - 1].im.get(), prod.im.get(), MPFR_RNDN);
      } else {
        mpfr_neg(c[j].re.get(), prod.re.get(), MPFR_RNDN);
        mpfr_neg(c[j].im.get(), prod.im.get(), MPFR_RNDN);
      }
    }
    mpfr_set_ui(c[k + 1].re.get(), 1, MPFR_RNDN);
    mpfr_set_zero(c[k + 1].im.get(), 1);
  }

  FloatPolyResult result;
  result.precision_bits = precision_bits;
  std::vector<mpz_class> coeffs(e + 1);
  Real rounded(prec), diff(prec);
  for (std::size_t j = 0; j <= e; ++j) {
    mpfr_rint(rounded.get(), c[j].re.get(), MPFR_RNDN);
    mpfr_get_z(coeffs[j].get_mpz_t(), rounded.get(), MPFR_RNDN);
    mpfr_sub(diff.get(), c[j].re.get(), rounded.get(), MPFR_RNDN);
    result.max_residual =
        std::max(result.max_residual, std::fabs(mpfr_get_d(diff.get(), MPFR_RNDN)));
    result.max_imag =
        std::max(result.max_imag, std::fabs(mpfr_get_d(c[j].im.get(), MPFR_RNDN)));
  }
  result.poly = IntPoly(std::move(coeffs));
  return result;
}

FloatPolyResult float_oracle_polynomial(const AuxConfig& cfg, double accept_residual,
                                        unsigned max_escalations) {
  unsigned bits = default_float_precision(cfg);
  FloatPolyResult result = period_polynomial_float(cfg, bits);
  for (unsigned attempt = 0; attempt < max_escalations; ++attempt) {
    if (result.max_residual < accept_residual && result.max_imag < accept_residual) break;
    bits *= 2;
    result = period_polynomial_float(cfg, bits);
  }
  return result;
}

std::vector<mpz_class> power_sums(const AuxConfig& cfg, std::size_t m_max) {
  const PeriodSystem ps(cfg);
  const CycNumbers cn = structure_constants(ps);
  std::vector<mpz_class> out;
  out.reserve(m_max);
  PeriodElem power = PeriodElem::eta(cfg.e, 0);
  for (std::size_t m = 1; m <= m_max; ++m) {
    out.push_back(period_trace(power));
    if (m < m_max) power = mul_by_period(power, 0, cn).normalized();
  }
  return out;
}

}  // namespace gaussperiod
