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

#include "gaussperiod/period_core.hpp"

#include <string>

#include "gaussperiod/errors.hpp"

namespace gaussperiod {

PeriodSystem::PeriodSystem(const AuxConfig& cfg)
    : cfg_(cfg), classes_(cfg.e), class_of_(cfg.q, 0) {
  if (cfg.e * cfg.f != cfg.q - 1 || !is_primitive_root(cfg.g, cfg.q)) {
    throw DomainError("invalid AuxConfig for q=" + std::to_string(cfg.q));
  }
  // power = g^(k*e+i) mod q walks the exponents in schedule order.
  std::uint64_t power = 1;
  for (std::uint64_t k = 0; k < cfg.f; ++k) {
    for (std::uint64_t i = 0; i < cfg.e; ++i) {
      classes_[i].push_back(power);
      class_of_[power] = static_cast<std::uint32_t>(i);
      power = mul_mod(power, cfg.g, cfg.q);
    }
  }
}

std::uint32_t PeriodSystem::class_of(std::uint64_t a) const {
  if (a == 0 || a >= cfg_.q) {
    throw DomainError("exponent " + std::to_string(a) + " outside 1..q-1");
  }
  return class_of_[a];
}

PeriodSystem period_classes(const AuxConfig& cfg) { return PeriodSystem(cfg); }

CycNumbers::CycNumbers(std::uint64_t e, std::uint64_t f)
    : e_(e), f_(f), n0_(e * e, 0), nk_(e * e * e, 0) {}

namespace {

void count_pair(const PeriodSystem& ps, std::size_t i, std::size_t j,
                CycNumbers& cn) {
  const std::uint64_t q = ps.q();
  const auto& ci = ps.period(i);
  const auto& cj = ps.period(j);
  const auto& cls = ps.class_table();
  std::uint64_t* row = &cn.nk_ref(i, j, 0);
  std::uint64_t zeros = 0;
  for (auto a : ci) {
    for (auto b : cj) {
      std::uint64_t s = a + b;
      if (s >= q) s -= q;
      if (s == 0) {
        ++zeros;
      } else {
        ++row[cls[s]];
      }
    }
  }
  cn.n0_ref(i, j) = zeros;
  // Each hit in class k is one of the f roots making up eta_k.
  const std::uint64_t f = ps.f();
  for (std::size_t k = 0; k < ps.e(); ++k) {
    if (row[k] % f != 0) {
      throw IntegrityError("structure constant count not divisible by f");
    }
    row[k] /= f;
  }
}

void mirror(std::size_t i, std::size_t j, std::uint64_t e, CycNumbers& cn) {
  cn.n0_ref(j, i) = cn.n0(i, j);
  for (std::size_t k = 0; k < e; ++k) cn.nk_ref(j, i, k) = cn.nk(i, j, k);
}

}  // namespace

CycNumbers structure_constants(const PeriodSystem& ps, ConstantsMethod method) {
  const std::uint64_t e = ps.e();
  CycNumbers cn(e, ps.f());
  if (method == ConstantsMethod::kDirect) {
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = i; j < e; ++j) {
        count_pair(ps, i, j, cn);
        if (j != i) mirror(i, j, e, cn);
      }
    }
    return cn;
  }
  for (std::size_t j = 0; j < e; ++j) count_pair(ps, 0, j, cn);
  for (std::size_t s = 1; s < e; ++s) {
    for (std::size_t j = 0; j < e; ++j) {
      const std::size_t js = (j + s) % e;
      cn.n0_ref(s, js) = cn.n0(0, j);
      for (std::size_t k = 0; k < e; ++k) {
        cn.nk_ref(s, js, (k + s) % e) = cn.nk(0, j, k);
      }
    }
  }
  return cn;
}

PeriodElem PeriodElem::normalized() const {
  if (v.empty()) return *this;
  const mpz_class shift = v[0];
  PeriodElem out{z - shift, v};
  for (auto& c : out.v) c -= shift;
  return out;
}

bool PeriodElem::is_integer() const {
  for (const auto& c : v) {
    if (c != v[0]) return false;
  }
  return true;
}

mpz_class PeriodElem::integer_value() const {
  return v.empty() ? z : mpz_class(z - v[0]);
}

bool operator==(const PeriodElem& a, const PeriodElem& b) {
  if (a.dim() != b.dim()) return false;
  const auto na = a.normalized();
  const auto nb = b.normalized();
  return na.z == nb.z && na.v == nb.v;
}

PeriodElem period_add(const PeriodElem& a, const PeriodElem& b) {
  if (a.dim() != b.dim()) throw DomainError("period elements from different systems");
  PeriodElem out{a.z + b.z, a.v};
  for (std::size_t k = 0; k < b.dim(); ++k) out.v[k] += b.v[k];
  return out;
}

PeriodElem mul_by_period(const PeriodElem& a, std::size_t k, const CycNumbers& cn) {
  const std::size_t e = cn.e();
  if (a.dim() != e) throw DomainError("period element does not match structure constants");
  PeriodElem out = PeriodElem::zero(e);
  out.v[k] = a.z;
  for (std::size_t i = 0; i < e; ++i) {
    const mpz_srcptr vi = a.v[i].get_mpz_t();
    if (mpz_sgn(vi) == 0) continue;
    if (const auto c = cn.n0(k, i); c != 0) mpz_addmul_ui(out.z.get_mpz_t(), vi, c);
    const std::uint64_t* row = cn.row(k, i);
    for (std::size_t m = 0; m < e; ++m) {
      if (row[m] != 0) mpz_addmul_ui(out.v[m].get_mpz_t(), vi, row[m]);
    }
  }
  return out;
}

PeriodElem period_mul(const PeriodElem& a, const PeriodElem& b, const CycNumbers& cn) {
  const std::size_t e = cn.e();
  if (a.dim() != e || b.dim() != e) {
    throw DomainError("period elements do not match structure constants");
  }
  PeriodElem out{a.z * b.z, std::vector<mpz_class>(e)};
  for (std::size_t k = 0; k < e; ++k) {
    out.v[k] = a.z * b.v[k] + b.z * a.v[k];
  }
  mpz_class prod;
  for (std::size_t i = 0; i < e; ++i) {
    if (sgn(a.v[i]) == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (sgn(b.v[j]) == 0) continue;
      prod = a.v[i] * b.v[j];
      if (const auto c = cn.n0(i, j); c != 0) {
        mpz_addmul_ui(out.z.get_mpz_t(), prod.get_mpz_t(), c);
      }
      const std::uint64_t* row = cn.row(i, j);
      for (std::size_t m = 0; m < e; ++m) {
        if (row[m] != 0) mpz_addmul_ui(out.v[m].get_mpz_t(), prod.get_mpz_t(), row[m]);
      }
    }
  }
  return out;
}

mpz_class period_trace(const PeriodElem& a) {
  mpz_class out = a.z * static_cast<unsigned long>(a.dim());
  for (const auto& c : a.v) out -= c;
  return out;
}

}  // namespace gaussperiod
