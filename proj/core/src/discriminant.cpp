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

#include "gaussperiod/discriminant.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gaussperiod/errors.hpp"
#include "gaussperiod/periodpoly.hpp"

namespace gaussperiod {

mpz_class SignedPrimePower::value() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  if (sign < 0) out = -out;
  return out;
}

std::size_t SignedPrimePower::digits() const {
  return mpz_class(abs(value())).get_str().size();
}

std::string SignedPrimePower::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  out += std::to_string(base);
  if (exponent != 1) out += "^" + std::to_string(exponent);
  return out;
}

namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending, trimmed

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) { return pow_mod(a, m - 2, m); }

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const IntPoly& p, std::uint64_t m) {
  ModPoly out;
  out.reserve(p.ascending().size());
  for (const auto& c : p.ascending()) {
    out.push_back(mpz_fdiv_ui(c.get_mpz_t(), m));
  }
  trim(out);
  return out;
}

// Resultant over F_m of non-zero a, b by the Euclidean algorithm.
std::uint64_t resultant_mod(ModPoly a, ModPoly b, std::uint64_t m) {
  std::uint64_t res = 1;
  while (true) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    if (db == 0) return mul_mod(res, pow_mod(b[0], da, m), m);
    // a <- a mod b, with b made monic on the fly.
    const std::uint64_t lb_inv = inv_mod(b.back(), m);
    for (std::size_t top = a.size(); top-- > db;) {
      const std::uint64_t factor = mul_mod(a[top], lb_inv, m);
      if (factor == 0) continue;
      const std::size_t shift = top - db;
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = mul_mod(factor, b[i], m);
        a[shift + i] = a[shift + i] >= sub ? a[shift + i] - sub : a[shift + i] + m - sub;
      }
    }
    a.resize(db);
    trim(a);
    if (a.empty()) return 0;
    const std::size_t dr = a.size() - 1;
    // res(A, B) = (-1)^(da*db) lc(B)^(da-dr) res(B, R)
    if ((da * db) % 2 == 1) res = res == 0 ? 0 : m - res;
    res = mul_mod(res, pow_mod(b.back(), da - dr, m), m);
    std::swap(a, b);
  }
}

// idx-th prime below 2^62 in decreasing order. The list is shared by
// parallel table workers and grows on demand.
std::uint64_t crt_prime(std::size_t idx) {
  static std::vector<std::uint64_t> primes;
  static std::uint64_t next = (std::uint64_t{1} << 62) - 1;
  static std::mutex guard;
  std::lock_guard lock(guard);
  while (primes.size() <= idx) {
    if (is_prime(next)) primes.push_back(next);
    next -= 2;
  }
  return primes[idx];
}

// Bits needed so that the product of moduli exceeds 2 * |Res(p, p')|.
std::size_t resultant_bound_bits(const IntPoly& p, const IntPoly& dp) {
  auto norm2 = [](const IntPoly& poly) {
    mpz_class s = 0;
    for (const auto& c : poly.ascending()) s += c * c;
    return s;
  };
  const std::size_t n = p.degree();
  const std::size_t n1 = dp.degree();
  mpz_class a, b;
  mpz_pow_ui(a.get_mpz_t(), norm2(p).get_mpz_t(), n1);
  mpz_pow_ui(b.get_mpz_t(), norm2(dp).get_mpz_t(), n);
  const mpz_class bound_sq = a * b;
  // sqrt of bound_sq has at most ceil(bits/2) bits; +1 for the sign.
  return (mpz_sizeinbase(bound_sq.get_mpz_t(), 2) + 1) / 2 + 1;
}

}  // namespace

std::size_t discriminant_modulus_count(const IntPoly& p) {
  if (p.degree() == 0) throw DomainError("discriminant of a constant polynomial");
  const std::size_t bits = resultant_bound_bits(p, p.derivative());
  // Each modulus contributes at least 61 bits; one extra for slack.
  return bits / 61 + 2;
}

mpz_class poly_discriminant(const IntPoly& p) {
  const std::size_t n = p.degree();
  if (n == 0) throw DomainError("discriminant of a constant polynomial");
  if (n == 1) return 1;
  const IntPoly dp = p.derivative();
  const std::size_t needed = discriminant_modulus_count(p);

  mpz_class residue = 0;  // Garner accumulator
  mpz_class modulus = 1;
  std::size_t used = 0;
  for (std::size_t idx = 0; used < needed; ++idx) {
    const std::uint64_t m = crt_prime(idx);
    ModPoly a = reduce(p, m);
    ModPoly b = reduce(dp, m);
    // Degree drop changes the resultant; skip moduli dividing n * lc(p).
    if (a.size() != n + 1 || b.size() != n) continue;
    const std::uint64_t r = resultant_mod(std::move(a), std::move(b), m);

    const std::uint64_t x_mod = mpz_fdiv_ui(residue.get_mpz_t(), m);
    const std::uint64_t diff = r >= x_mod ? r - x_mod : r + m - x_mod;
    const std::uint64_t m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), m), m);
    const std::uint64_t t = mul_mod(diff, m_inv, m);
    mpz_addmul_ui(residue.get_mpz_t(), modulus.get_mpz_t(), t);
    mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), m);
    ++used;
  }
  // Symmetric lift.
  if (2 * residue > modulus) residue -= modulus;

  mpz_class disc;
  const mpz_class& lc = p.leading();
  if (!mpz_divisible_p(residue.get_mpz_t(), lc.get_mpz_t())) {
    throw IntegrityError("resultant not divisible by leading coefficient");
  }
  mpz_divexact(disc.get_mpz_t(), residue.get_mpz_t(), lc.get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

SignedPrimePower field_discriminant(const AuxConfig& cfg) {
  const bool negative = (cfg.e - 1) % 4 == 1 && cfg.f % 2 == 1;
  return SignedPrimePower{negative ? -1 : 1, cfg.q, cfg.e - 1};
}

SignedPrimePower field_discriminant_by_pairs(const AuxConfig& cfg, std::uint64_t n_pairs) {
  if (2 * n_pairs > cfg.e) {
    throw DomainError("n_pairs " + std::to_string(n_pairs) + " exceeds e/2");
  }
  const bool negative = (cfg.e - 1) % 4 == 1 && n_pairs % 2 == 1;
  return SignedPrimePower{negative ? -1 : 1, cfg.q, cfg.e - 1};
}

namespace {

void make_primitive(std::vector<mpz_class>& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Returns -c * rem(a, b) for some c > 0, made primitive; ascending, trimmed.
std::vector<mpz_class> negated_pseudo_remainder(std::vector<mpz_class> a,
                                                const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  std::size_t scalings = 0;
  mpz_class lead;
  while (a.size() > db) {
    lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    // a <- lb * a - lead * x^shift * b; the top coefficient cancels.
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    ++scalings;
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    make_primitive(a);
  }
  // a = lb^scalings * rem / (positive content)
  const bool flip = sgn(lb) < 0 && scalings % 2 == 1;
  if (!flip) {
    for (auto& c : a) c = -c;
  }
  return a;
}

int sign_at_infinity(const std::vector<mpz_class>& p, bool negative_side) {
  const int s = sgn(p.back());
  return (negative_side && (p.size() - 1) % 2 == 1) ? -s : s;
}

}  // namespace

std::size_t real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("real_root_count of the zero polynomial");
  if (p.degree() == 0) return 0;

  std::vector<std::vector<mpz_class>> chain;
  chain.push_back(p.ascending());
  chain.push_back(p.derivative().ascending());
  make_primitive(chain[0]);
  make_primitive(chain[1]);
  while (chain.back().size() > 1) {
    auto next = negated_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (next.empty()) break;
    chain.push_back(std::move(next));
  }
  if (chain.back().size() > 1) {
    throw DomainError("polynomial is not squarefree (discriminant 0)");
  }

  auto variations = [&](bool negative_side) {
    std::size_t count = 0;
    int prev = 0;
    for (const auto& s : chain) {
      const int cur = sign_at_infinity(s, negative_side);
      if (prev != 0 && cur != prev) ++count;
      prev = cur;
    }
    return count;
  };
  return variations(true) - variations(false);
}

mpz_class index_k(const mpz_class& poly_disc, const SignedPrimePower& field_disc) {
  const mpz_class fd = field_disc.value();
  if (sgn(fd) == 0 || sgn(poly_disc) != sgn(fd)) {
    throw IntegrityError("discriminant sign mismatch: " + poly_disc.get_str() + " vs " +
                         field_disc.to_string());
  }
  if (!mpz_divisible_p(poly_disc.get_mpz_t(), fd.get_mpz_t())) {
    throw IntegrityError("field discriminant " + field_disc.to_string() +
                         " does not divide polynomial discriminant");
  }
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), poly_disc.get_mpz_t(), fd.get_mpz_t());
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), quotient.get_mpz_t());
  if (k * k != quotient) {
    throw IntegrityError("discriminant quotient for " + field_disc.to_string() +
                         " is not a perfect square");
  }
  return k;
}

bool sturm_enabled(const AuxConfig& cfg, const AnalyzeOptions& options) {
  return options.force_sturm || cfg.e <= options.sturm_max_e || cfg.q <= options.sturm_max_q;
}

DiscriminantReport analyze(const AuxConfig& cfg, const AnalyzeOptions& options) {
  DiscriminantReport report;
  report.cfg = cfg;
  report.poly = period_polynomial(cfg);
  report.poly_disc = poly_discriminant(report.poly);
  report.field_disc = field_discriminant(cfg);
  report.index_k = index_k(report.poly_disc, report.field_disc);
  report.monogenic = report.index_k == 1;

  if (sturm_enabled(cfg, options)) {
    const std::size_t n_real = real_root_count(report.poly);
    if (n_real > cfg.e || (cfg.e - n_real) % 2 != 0) {
      throw IntegrityError("impossible real root count " + std::to_string(n_real));
    }
    report.n_real = n_real;
    report.n_pairs = (cfg.e - n_real) / 2;
    if (field_discriminant_by_pairs(cfg, *report.n_pairs) != report.field_disc) {
      throw IntegrityError("sign rules disagree for q=" + std::to_string(cfg.q) +
                           ", e=" + std::to_string(cfg.e));
    }
  }
  return report;
}

}  // namespace gaussperiod
