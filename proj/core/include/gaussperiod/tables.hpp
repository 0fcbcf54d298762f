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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaussperiod/discriminant.hpp"
#include "gaussperiod/numtheory.hpp"

namespace gaussperiod {

/// One table entry: the ell-th totally real cyclic field of a given degree.
struct TableRecord {
  std::uint64_t degree = 0;
  std::uint64_t ell = 0;  // 1-based rank of q among the auxiliary primes
  std::uint64_t q = 0;
  std::vector<std::string> coeffs;  // descending powers; empty when omitted
  SignedPrimePower field_disc;
  std::optional<std::string> index_k;
  std::optional<bool> monogenic;
  /// Reference files only: exponent the sign rule predicts when the
  /// transcribed disc_exp is a known misprint.
  std::optional<std::uint64_t> expected_exponent;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

struct TableOptions {
  bool allow_composite = false;
  AnalyzeOptions analyze;
  /// Worker threads for polynomial generation; never changes the output.
  unsigned jobs = 1;
};

/// Records for ell = 1..count with only the discriminant fields filled.
/// Throws DomainError for a composite degree unless allow_composite.
std::vector<TableRecord> table_discriminants(std::uint64_t degree, std::size_t count,
                                             const TableOptions& options = {});

/// Full records (coefficients, index, monogenicity), ordered by ell.
std::vector<TableRecord> table_polynomials(std::uint64_t degree, std::size_t count,
                                           const TableOptions& options = {});

/// Records for several degrees, sorted by (degree, ell).
std::vector<TableRecord> generate_table(const std::vector<std::uint64_t>& degrees,
                                        std::size_t count, bool with_polys,
                                        const TableOptions& options = {});

/// Rank of q among aux_primes(cfg.e, ., true); empty if f is odd.
std::optional<std::uint64_t> aux_rank(const AuxConfig& cfg);

TableRecord make_record(const DiscriminantReport& report, std::uint64_t ell);

/// Re-derives field discriminant and index from the stored coefficients
/// and throws IntegrityError if they disagree with the record.
void recheck_record(const TableRecord& record);

// JSON Lines I/O. Keys: degree, ell, q, coeffs, disc_base, disc_exp,
// disc_sign, index_k, monogenic (+ optional expected_exponent).

std::string to_json_line(const TableRecord& record);
/// Throws ParseError carrying line_number.
TableRecord parse_json_line(const std::string& line, std::size_t line_number);
void write_jsonl(std::ostream& out, const std::vector<TableRecord>& records);
std::vector<TableRecord> read_jsonl(std::istream& in);
/// Throws std::runtime_error when the file cannot be opened.
std::vector<TableRecord> read_reference(const std::filesystem::path& path);

enum class DiffStatus { kMatch, kMismatch, kMissingInReference, kMissingInRun };

std::string to_string(DiffStatus status);

struct DiffEntry {
  std::uint64_t degree = 0;
  std::uint64_t ell = 0;
  DiffStatus status = DiffStatus::kMatch;
  std::string detail;  // mismatching fields, or a logged discrepancy
};

struct DiffReport {
  std::vector<DiffEntry> entries;  // sorted by (degree, ell)

  std::size_t count(DiffStatus status) const;
  bool has_mismatch() const { return count(DiffStatus::kMismatch) > 0; }
};

/// Compares the fields present on both sides for each (degree, ell).
DiffReport diff_records(const std::vector<TableRecord>& run,
                        const std::vector<TableRecord>& reference);
DiffReport diff_reference(const std::vector<TableRecord>& run,
                          const std::filesystem::path& reference_path);

/// Table-1 style rows: "degree: base^exp base^exp ...".
void write_discriminant_rows(std::ostream& out, const std::vector<TableRecord>& records);
/// Table-2 style: "degree, base^exp: c_n, c_{n-1}, ..., c_0".
void write_polynomial_rows(std::ostream& out, const std::vector<TableRecord>& records);

}  // namespace gaussperiod
