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

#include "gaussperiod/tables.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "gaussperiod/errors.hpp"
#include "gaussperiod/int_poly.hpp"

namespace gaussperiod {

using json = nlohmann::json;

namespace {

void check_degree(std::uint64_t degree, const TableOptions& options) {
  if (degree == 0) throw DomainError("degree must be positive");
  if (!options.allow_composite && !is_prime(degree)) {
    throw DomainError("table degree " + std::to_string(degree) +
                      " is not prime (use allow_composite)");
  }
}

TableRecord discriminant_record(const AuxConfig& cfg, std::uint64_t ell) {
  TableRecord r;
  r.degree = cfg.e;
  r.ell = ell;
  r.q = cfg.q;
  r.field_disc = field_discriminant(cfg);
  return r;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// by index is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  auto run_one = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace

std::vector<TableRecord> table_discriminants(std::uint64_t degree, std::size_t count,
                                             const TableOptions& options) {
  check_degree(degree, options);
  std::vector<TableRecord> out;
  std::uint64_t ell = 1;
  for (const auto& cfg : aux_primes(degree, count, true)) {
    out.push_back(discriminant_record(cfg, ell++));
  }
  return out;
}

TableRecord make_record(const DiscriminantReport& report, std::uint64_t ell) {
  TableRecord r = discriminant_record(report.cfg, ell);
  r.coeffs = report.poly.descending_strings();
  r.index_k = report.index_k.get_str();
  r.monogenic = report.monogenic;
  return r;
}

std::vector<TableRecord> table_polynomials(std::uint64_t degree, std::size_t count,
                                           const TableOptions& options) {
  return generate_table({degree}, count, true, options);
}

std::vector<TableRecord> generate_table(const std::vector<std::uint64_t>& degrees,
                                        std::size_t count, bool with_polys,
                                        const TableOptions& options) {
  std::vector<std::pair<AuxConfig, std::uint64_t>> work;
  for (auto degree : degrees) {
    check_degree(degree, options);
    std::uint64_t ell = 1;
    for (const auto& cfg : aux_primes(degree, count, true)) work.emplace_back(cfg, ell++);
  }
  std::vector<TableRecord> out(work.size());
  if (with_polys) {
    // Largest instances first so the pool drains evenly.
    std::vector<std::size_t> order(work.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return work[a].first.e * work[a].first.q > work[b].first.e * work[b].first.q;
    });
    parallel_for(order.size(), options.jobs, [&](std::size_t n) {
      const std::size_t i = order[n];
      out[i] = make_record(analyze(work[i].first, options.analyze), work[i].second);
    });
  } else {
    for (std::size_t i = 0; i < work.size(); ++i) {
      out[i] = discriminant_record(work[i].first, work[i].second);
    }
  }
  std::sort(out.begin(), out.end(), [](const TableRecord& a, const TableRecord& b) {
    return std::tie(a.degree, a.ell) < std::tie(b.degree, b.ell);
  });
  return out;
}

std::optional<std::uint64_t> aux_rank(const AuxConfig& cfg) {
  if (!cfg.totally_real()) return std::nullopt;
  std::uint64_t rank = 0;
  for (std::uint64_t f = 2; f <= cfg.f; f += 2) {
    const std::uint64_t q = cfg.e * f + 1;
    if (q >= 3 && is_prime(q)) ++rank;
  }
  return rank;
}

void recheck_record(const TableRecord& record) {
  if (record.coeffs.empty()) return;
  const IntPoly poly = IntPoly::from_descending(record.coeffs);
  if (poly.degree() != record.degree || !poly.is_monic()) {
    throw IntegrityError("record (" + std::to_string(record.degree) + ", " +
                         std::to_string(record.ell) + "): polynomial is not monic of the table degree");
  }
  const AuxConfig cfg = make_aux_config(record.q, record.degree);
  const SignedPrimePower expected = field_discriminant(cfg);
  if (expected != record.field_disc) {
    throw IntegrityError("record field discriminant " + record.field_disc.to_string() +
                         " differs from " + expected.to_string());
  }
  const mpz_class k = index_k(poly_discriminant(poly), record.field_disc);
  if (record.index_k && k.get_str() != *record.index_k) {
    throw IntegrityError("record index " + *record.index_k + " differs from recomputed " +
                         k.get_str());
  }
}

std::string to_json_line(const TableRecord& r) {
  json j = json::object();
  j["degree"] = r.degree;
  j["ell"] = r.ell;
  j["q"] = r.q;
  j["coeffs"] = r.coeffs;
  j["disc_base"] = r.field_disc.base;
  j["disc_exp"] = r.field_disc.exponent;
  j["disc_sign"] = r.field_disc.sign;
  j["index_k"] = r.index_k ? json(*r.index_k) : json(nullptr);
  j["monogenic"] = r.monogenic ? json(*r.monogenic) : json(nullptr);
  if (r.expected_exponent) j["expected_exponent"] = *r.expected_exponent;
  return j.dump();
}

namespace {

std::uint64_t get_uint(const json& j, const char* key, std::size_t line) {
  if (!j.contains(key)) throw ParseError(line, std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw ParseError(line, std::string("key '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

TableRecord parse_json_line(const std::string& line, std::size_t line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& err) {
    throw ParseError(line_number, std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) throw ParseError(line_number, "record must be a JSON object");

  TableRecord r;
  r.degree = get_uint(j, "degree", line_number);
  r.ell = get_uint(j, "ell", line_number);
  r.q = get_uint(j, "q", line_number);
  r.field_disc.base = get_uint(j, "disc_base", line_number);
  r.field_disc.exponent = get_uint(j, "disc_exp", line_number);
  if (!j.contains("disc_sign") || !j["disc_sign"].is_number_integer() ||
      (j["disc_sign"].get<int>() != 1 && j["disc_sign"].get<int>() != -1)) {
    throw ParseError(line_number, "key 'disc_sign' must be 1 or -1");
  }
  r.field_disc.sign = j["disc_sign"].get<int>();

  if (j.contains("coeffs") && !j["coeffs"].is_null()) {
    if (!j["coeffs"].is_array()) throw ParseError(line_number, "'coeffs' must be an array");
    for (const auto& c : j["coeffs"]) {
      if (!c.is_string()) throw ParseError(line_number, "coefficients must be decimal strings");
      const auto& s = c.get_ref<const std::string&>();
      const std::size_t from = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() <= from || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(from),
                                           s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw ParseError(line_number, "malformed coefficient '" + s + "'");
      }
      r.coeffs.push_back(s);
    }
  }
  if (j.contains("index_k") && !j["index_k"].is_null()) {
    if (!j["index_k"].is_string()) throw ParseError(line_number, "'index_k' must be a string");
    r.index_k = j["index_k"].get<std::string>();
  }
  if (j.contains("monogenic") && !j["monogenic"].is_null()) {
    if (!j["monogenic"].is_boolean()) throw ParseError(line_number, "'monogenic' must be boolean");
    r.monogenic = j["monogenic"].get<bool>();
  }
  if (j.contains("expected_exponent") && !j["expected_exponent"].is_null()) {
    r.expected_exponent = get_uint(j, "expected_exponent", line_number);
  }
  return r;
}

void write_jsonl(std::ostream& out, const std::vector<TableRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<TableRecord> read_jsonl(std::istream& in) {
  std::vector<TableRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_json_line(line, number));
  }
  return out;
}

std::vector<TableRecord> read_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference file " + path.string());
  return read_jsonl(in);
}

std::string to_string(DiffStatus status) {
  switch (status) {
    case DiffStatus::kMatch: return "MATCH";
    case DiffStatus::kMismatch: return "MISMATCH";
    case DiffStatus::kMissingInReference: return "MISSING_IN_REFERENCE";
    case DiffStatus::kMissingInRun: return "MISSING_IN_RUN";
  }
  return "UNKNOWN";
}

std::size_t DiffReport::count(DiffStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const DiffEntry& d) { return d.status == status; }));
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i];
  }
  return out;
}

DiffEntry compare(const TableRecord& run, const TableRecord& ref) {
  DiffEntry d{run.degree, run.ell, DiffStatus::kMatch, {}};
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  auto field = [&](const std::string& name, const std::string& got, const std::string& want) {
    if (got != want) problems.push_back(name + ": run=" + got + " reference=" + want);
  };
  field("q", std::to_string(run.q), std::to_string(ref.q));
  field("disc_sign", std::to_string(run.field_disc.sign), std::to_string(ref.field_disc.sign));
  field("disc_base", std::to_string(run.field_disc.base), std::to_string(ref.field_disc.base));
  if (run.field_disc.exponent != ref.field_disc.exponent) {
    if (ref.expected_exponent && *ref.expected_exponent == run.field_disc.exponent) {
      notes.push_back("reference prints exponent " + std::to_string(ref.field_disc.exponent) +
                      ", sign rule gives " + std::to_string(run.field_disc.exponent));
    } else {
      field("disc_exp", std::to_string(run.field_disc.exponent),
            std::to_string(ref.field_disc.exponent));
    }
  }
  if (!run.coeffs.empty() && !ref.coeffs.empty()) {
    field("coeffs", join(run.coeffs), join(ref.coeffs));
  }
  if (run.index_k && ref.index_k) field("index_k", *run.index_k, *ref.index_k);
  if (run.monogenic && ref.monogenic && *run.monogenic != *ref.monogenic) {
    field("monogenic", *run.monogenic ? "true" : "false", *ref.monogenic ? "true" : "false");
  }
  if (!problems.empty()) {
    d.status = DiffStatus::kMismatch;
    for (const auto& p : problems) d.detail += (d.detail.empty() ? "" : "; ") + p;
  } else {
    for (const auto& n : notes) d.detail += (d.detail.empty() ? "" : "; ") + n;
  }
  return d;
}

}  // namespace

DiffReport diff_records(const std::vector<TableRecord>& run,
                        const std::vector<TableRecord>& reference) {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  std::map<Key, const TableRecord*> run_map;
  std::map<Key, const TableRecord*> ref_map;
  for (const auto& r : run) run_map[{r.degree, r.ell}] = &r;
  for (const auto& r : reference) ref_map[{r.degree, r.ell}] = &r;

  DiffReport report;
  auto ri = run_map.begin();
  auto fi = ref_map.begin();
  while (ri != run_map.end() || fi != ref_map.end()) {
    if (fi == ref_map.end() || (ri != run_map.end() && ri->first < fi->first)) {
      report.entries.push_back(
          {ri->first.first, ri->first.second, DiffStatus::kMissingInReference, {}});
      ++ri;
    } else if (ri == run_map.end() || fi->first < ri->first) {
      report.entries.push_back(
          {fi->first.first, fi->first.second, DiffStatus::kMissingInRun, {}});
      ++fi;
    } else {
      report.entries.push_back(compare(*ri->second, *fi->second));
      ++ri;
      ++fi;
    }
  }
  return report;
}

DiffReport diff_reference(const std::vector<TableRecord>& run,
                          const std::filesystem::path& reference_path) {
  return diff_records(run, read_reference(reference_path));
}

void write_discriminant_rows(std::ostream& out, const std::vector<TableRecord>& records) {
  std::uint64_t current = 0;
  bool open = false;
  for (const auto& r : records) {
    if (!open || r.degree != current) {
      if (open) out << '\n';
      out << r.degree << ':';
      current = r.degree;
      open = true;
    }
    out << ' ' << r.field_disc.to_string();
  }
  if (open) out << '\n';
}

void write_polynomial_rows(std::ostream& out, const std::vector<TableRecord>& records) {
  for (const auto& r : records) {
    out << r.degree << ", " << r.field_disc.to_string() << ": ";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
      if (i) out << ", ";
      out << r.coeffs[i];
    }
    out << '\n';
  }
}

}  // namespace gaussperiod
