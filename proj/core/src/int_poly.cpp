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

#include "gaussperiod/int_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaussperiod/errors.hpp"

namespace gaussperiod {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPoly IntPoly::from_descending(const std::vector<mpz_class>& descending) {
  return IntPoly(std::vector<mpz_class>(descending.rbegin(), descending.rend()));
}

IntPoly IntPoly::from_descending(const std::vector<std::string>& descending) {
  std::vector<mpz_class> asc;
  asc.reserve(descending.size());
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
    const std::string& s = *it;
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    const bool well_formed =
        s.size() > digits_from &&
        std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                    [](char c) { return c >= '0' && c <= '9'; });
    if (!well_formed) throw DomainError("malformed integer coefficient '" + s + "'");
    asc.emplace_back(s, 10);
  }
  return IntPoly(std::move(asc));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::vector<mpz_class> IntPoly::descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

std::vector<std::string> IntPoly::descending_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.push_back(it->get_str());
  return out;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPoly(std::move(d));
}

std::string IntPoly::to_csv(std::string_view separator) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (it != coeffs_.rbegin()) out += separator;
    out += it->get_str();
  }
  return out;
}

}  // namespace gaussperiod
