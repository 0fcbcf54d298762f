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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaussperiod/discriminant.hpp"
#include "gaussperiod/errors.hpp"
#include "gaussperiod/numtheory.hpp"
#include "gaussperiod/periodpoly.hpp"
#include "gaussperiod/tables.hpp"

namespace gaussperiod::cli {

namespace {

enum class Format { kText, kJson, kCoeffs };

const std::map<std::string, Format> kFormats = {
    {"text", Format::kText}, {"json", Format::kJson}, {"coeffs", Format::kCoeffs}};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeSelection {
  std::optional<std::uint64_t> degree;
  std::string range;
  bool allow_composite = false;

  bool empty() const { return !degree && range.empty(); }

  std::vector<std::uint64_t> resolve() const {
    if (degree && !range.empty()) throw Usage("--degree and --degree-range are exclusive");
    if (degree) return {*degree};
    const auto dots = range.find("..");
    std::uint64_t lo = 0, hi = 0;
    try {
      if (dots == std::string::npos) throw Usage("");
      std::size_t used = 0;
      const std::string a = range.substr(0, dots), b = range.substr(dots + 2);
      lo = std::stoull(a, &used);
      if (used != a.size()) throw Usage("");
      hi = std::stoull(b, &used);
      if (used != b.size()) throw Usage("");
    } catch (const std::exception&) {
      throw Usage("invalid degree range '" + range + "' (expected a..b)");
    }
    if (lo == 0 || lo > hi) throw Usage("invalid degree range '" + range + "'");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = lo; d <= hi; ++d) {
      if (allow_composite || is_prime(d)) out.push_back(d);
    }
    return out;
  }
};

AnalyzeOptions analyze_options(bool force_sturm, std::optional<std::uint64_t> sturm_max_e) {
  AnalyzeOptions opts;
  opts.force_sturm = force_sturm;
  if (const char* env = std::getenv("GAUSSPERIOD_STURM_MAX_E"); env != nullptr && *env) {
    try {
      opts.sturm_max_e = std::stoull(env);
    } catch (const std::exception&) {
      throw Usage(std::string("GAUSSPERIOD_STURM_MAX_E is not a number: ") + env);
    }
  }
  if (sturm_max_e) opts.sturm_max_e = *sturm_max_e;
  return opts;
}

nlohmann::json record_json(const TableRecord& r) {
  return nlohmann::json::parse(to_json_line(r));
}

TableRecord poly_record(const AuxConfig& cfg, const IntPoly& poly) {
  TableRecord r;
  r.degree = cfg.e;
  r.ell = aux_rank(cfg).value_or(0);
  r.q = cfg.q;
  r.coeffs = poly.descending_strings();
  r.field_disc = field_discriminant(cfg);
  return r;
}

int cmd_poly(std::uint64_t q, std::uint64_t e, Format format, std::ostream& out) {
  const AuxConfig cfg = make_aux_config(q, e);
  const IntPoly poly = period_polynomial(cfg);
  switch (format) {
    case Format::kCoeffs: out << poly.to_csv() << '\n'; break;
    case Format::kJson: out << to_json_line(poly_record(cfg, poly)) << '\n'; break;
    case Format::kText: write_polynomial_rows(out, {poly_record(cfg, poly)}); break;
  }
  return kOk;
}

int cmd_analyze(std::uint64_t q, std::uint64_t e, Format format, const AnalyzeOptions& opts,
                std::ostream& out) {
  const AuxConfig cfg = make_aux_config(q, e);
  const DiscriminantReport rep = analyze(cfg, opts);
  TableRecord rec = make_record(rep, aux_rank(cfg).value_or(0));
  switch (format) {
    case Format::kCoeffs: out << rep.poly.to_csv() << '\n'; break;
    case Format::kJson: {
      auto j = record_json(rec);
      j["f"] = cfg.f;
      j["g"] = cfg.g;
      j["poly_disc"] = rep.poly_disc.get_str();
      j["field_disc"] = rep.field_disc.to_string();
      j["n_real"] = rep.n_real ? nlohmann::json(*rep.n_real) : nlohmann::json(nullptr);
      j["n_pairs"] = rep.n_pairs ? nlohmann::json(*rep.n_pairs) : nlohmann::json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case Format::kText: {
      out << "q: " << cfg.q << '\n'
          << "degree: " << cfg.e << '\n'
          << "f: " << cfg.f << '\n'
          << "g: " << cfg.g << '\n'
          << "coeffs: " << rep.poly.to_csv(", ") << '\n'
          << "poly_disc: " << rep.poly_disc.get_str() << '\n'
          << "field_disc: " << rep.field_disc.to_string() << '\n'
          << "index_k: " << rep.index_k.get_str() << '\n'
          << "n_real: " << (rep.n_real ? std::to_string(*rep.n_real) : "not computed") << '\n'
          << "n_pairs: " << (rep.n_pairs ? std::to_string(*rep.n_pairs) : "not computed") << '\n'
          << "monogenic: " << (rep.monogenic ? "true" : "false") << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_table(const DegreeSelection& sel, std::size_t count, bool polys, Format format,
              const TableOptions& opts, std::ostream& out) {
  if (sel.empty()) throw Usage("table requires --degree or --degree-range");
  const auto records = generate_table(sel.resolve(), count, polys, opts);
  switch (format) {
    case Format::kJson: write_jsonl(out, records); break;
    case Format::kText:
      if (polys) {
        write_polynomial_rows(out, records);
      } else {
        write_discriminant_rows(out, records);
      }
      break;
    case Format::kCoeffs:
      for (const auto& r : records) {
        if (polys) {
          for (std::size_t i = 0; i < r.coeffs.size(); ++i) out << (i ? "," : "") << r.coeffs[i];
        } else {
          out << r.field_disc.to_string();
        }
        out << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_verify(const std::string& reference_path, DegreeSelection sel,
               std::optional<std::size_t> count, bool recheck, const TableOptions& opts,
               std::ostream& out, std::ostream& err) {
  std::vector<TableRecord> reference;
  try {
    reference = read_reference(reference_path);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw Usage(ex.what());
  }
  bool need_polys = recheck;
  std::vector<std::uint64_t> degrees;
  std::size_t max_ell = 0;
  for (const auto& r : reference) {
    need_polys = need_polys || !r.coeffs.empty() || r.index_k || r.monogenic;
    if (degrees.empty() || degrees.back() != r.degree) degrees.push_back(r.degree);
    max_ell = std::max<std::size_t>(max_ell, r.ell);
  }
  if (!sel.empty()) {
    degrees = sel.resolve();
    std::erase_if(reference, [&](const TableRecord& r) {
      return std::find(degrees.begin(), degrees.end(), r.degree) == degrees.end();
    });
  } else {
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  }
  const std::size_t n = count.value_or(max_ell);

  const auto run = generate_table(degrees, n, need_polys, opts);
  if (recheck) {
    for (const auto& r : reference) recheck_record(r);
  }
  const DiffReport report = diff_records(run, reference);
  for (const auto& d : report.entries) {
    out << to_string(d.status) << ' ' << d.degree << ' ' << d.ell;
    if (!d.detail.empty()) out << ' ' << d.detail;
    out << '\n';
  }
  err << "verify: " << report.count(DiffStatus::kMatch) << " match, "
      << report.count(DiffStatus::kMismatch) << " mismatch, "
      << report.count(DiffStatus::kMissingInReference) << " missing in reference, "
      << report.count(DiffStatus::kMissingInRun) << " missing in run\n";
  return report.has_mismatch() ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian period equations and discriminants of cyclic number fields",
               "gaussperiod"};
  app.require_subcommand(1);

  std::uint64_t q = 0, e = 0;
  Format format = Format::kText;
  bool force_sturm = false;
  std::optional<std::uint64_t> sturm_max_e;

  auto* poly = app.add_subcommand("poly", "Print the period equation psi_e for conductor q");
  Format poly_format = Format::kCoeffs;
  poly->add_option("--aux-prime", q, "Prime conductor q")->required();
  poly->add_option("--degree", e, "Subfield degree e, dividing q-1")->required();
  poly->add_option("--format", poly_format, "text | json | coeffs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* an = app.add_subcommand("analyze", "Discriminants, index and real roots of psi_e");
  an->add_option("--aux-prime", q, "Prime conductor q")->required();
  an->add_option("--degree", e, "Subfield degree e, dividing q-1")->required();
  an->add_option("--format", format, "text | json | coeffs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  an->add_flag("--force-sturm", force_sturm, "Count real roots regardless of size");
  an->add_option("--sturm-max-e", sturm_max_e, "Sturm size threshold on e");

  DegreeSelection sel;
  std::size_t count = 8;
  bool polys = false;
  unsigned jobs = 1;
  auto* table = app.add_subcommand("table", "Discriminant / polynomial tables by degree");
  table->add_option("--degree", sel.degree, "Single field degree");
  table->add_option("--degree-range", sel.range, "Degrees a..b (primes only by default)");
  table->add_option("--count", count, "Fields per degree (ell = 1..count)");
  table->add_flag("--polys", polys, "Include coefficients, index and monogenicity");
  table->add_option("--format", format, "text | json | coeffs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  table->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--allow-composite", sel.allow_composite, "Accept composite degrees");
  table->add_flag("--force-sturm", force_sturm, "Count real roots regardless of size");
  table->add_option("--sturm-max-e", sturm_max_e, "Sturm size threshold on e");

  std::string reference;
  std::optional<std::size_t> verify_count;
  bool recheck = false;
  auto* verify = app.add_subcommand("verify", "Regenerate records and diff against a reference");
  verify->add_option("--reference", reference, "JSON Lines reference file")->required();
  verify->add_option("--degree", sel.degree, "Single field degree");
  verify->add_option("--degree-range", sel.range, "Degrees a..b");
  verify->add_option("--count", verify_count, "Fields per degree (default: from reference)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-composite", sel.allow_composite, "Accept composite degrees");
  verify->add_flag("--recheck", recheck, "Re-derive discriminants from reference coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  try {
    TableOptions opts;
    opts.jobs = jobs;
    opts.allow_composite = sel.allow_composite;
    opts.analyze = analyze_options(force_sturm, sturm_max_e);
    if (*poly) return cmd_poly(q, e, poly_format, out);
    if (*an) return cmd_analyze(q, e, format, opts.analyze, out);
    if (*table) return cmd_table(sel, count, polys, format, opts, out);
    if (*verify) return cmd_verify(reference, sel, verify_count, recheck, opts, out, err);
  } catch (const IntegrityError& ex) {
    err << "integrity failure: " << ex.what() << '\n';
    return kIntegrity;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
    return kUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const UnsupportedRangeError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Usage& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gaussperiod::cli
