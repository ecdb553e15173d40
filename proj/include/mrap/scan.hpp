#pragma once

#include <iosfwd>
#include <map>

#include "mrap/reference_tables.hpp"

namespace mrap {

enum class ScanMode { Solve, Exists, VerifyPaper, Shortlist };
enum class ReportFormat { CSV, JSON };

struct ScanSpec {
  long a = 1, b = 1, c = 1;
  long d_min = 1, d_max = 1;
  // Field selection: either an explicit D list, or a discriminant interval
  // 1 < disc_min <= disc <= disc_max (real fields).
  std::vector<long> d_list_explicit;  // D values; empty means use the interval
  long disc_min = 2, disc_max = 2;
  ScanMode mode = ScanMode::Solve;
  std::string out_path;  // empty: no file written
  ReportFormat format = ReportFormat::CSV;
  std::string cache_path;  // empty: no cache journal
};

struct ScanRow {
  long a, b, c, d, D, disc;
  long count = 0;
  bool equals_rational = false;  // AP(K) = AP(Q); rendered "=Q"
  std::vector<std::string> triples;  // "first|diff" renderings
};

struct ScanResult {
  std::vector<ScanRow> rows;
  long cache_hits = 0;
  long cache_mismatches = 0;  // recomputed digest differed from journal
};

// Append-only JSONL journal keyed "a,b,c,d,D"; each line stores the row
// and its digest, so a resumed scan replays finished keys verbatim.
class ResultCache {
 public:
  explicit ResultCache(std::string path);  // loads existing journal
  const ScanRow* lookup(const std::string& key, std::uint64_t* digest) const;
  void append(const std::string& key, const ScanRow& row, std::uint64_t digest);

 private:
  std::string path_;
  struct Entry {
    ScanRow row;
    std::uint64_t digest;
  };
  std::map<std::string, Entry> entries_;
};

// Canonical serialization of a row (also the CSV line) and its digest.
std::string row_csv(const ScanRow& row);
std::uint64_t row_digest(const ScanRow& row);

// Squarefree D values whose field discriminant lies in [disc_min, disc_max].
std::vector<long> fields_in_disc_range(long disc_min, long disc_max);

ScanResult scan(const ScanSpec& spec);

void write_report(const ScanResult& result, const ScanSpec& spec,
                  std::ostream& os);

struct ShortlistResult {
  std::vector<std::pair<long, long>> candidates;  // (d, D), unfiltered
  std::vector<std::pair<long, long>> filtered;    // AP(K) != AP(Q) confirmed
};

// Imaginary-field sweep: |D| <= 100 (D != 1 mod 4) resp. |D| <= 400
// (D = 1 mod 4); candidate d from the square part of each integral N(w),
// then confirmed against solve_ap.
ShortlistResult imaginary_shortlist(long a, long b, long c);

struct VerifyReport {
  bool pass = true;
  long computed_total = 0;
  long expected_total = 0;
  std::vector<std::string> lines;  // one per fixture row
};

// Checks solve_ap against every embedded expected-data row.
VerifyReport verify_paper();

}  // namespace mrap
