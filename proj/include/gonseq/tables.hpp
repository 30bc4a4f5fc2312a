#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gonseq/extremal.hpp"
#include "gonseq/gonality.hpp"

namespace gonseq {

// ---------------------------------------------------------------------------
// Flat text tables

enum class Format { Markdown, Csv, Json };

/// "md", "csv" or "json". Throws InvalidInput otherwise.
Format parse_format(std::string_view name);

struct Column {
  std::string key;   // lower_snake_case, used for CSV headers and JSON keys
  std::string title; // markdown header
};

/// Cells are JSON scalars: integers, strings, booleans or null.
struct TextTable {
  std::vector<Column> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  friend bool operator==(const TextTable&, const TextTable&) = default;
};

/// Markdown: pipe table. CSV: key header line, RFC 4180 quoting only where a
/// cell needs it. JSON: {"columns": [...keys], "rows": [{key: value}, ...]}.
/// Null cells render as empty text in Markdown and CSV.
std::string serialize(const TextTable& table, Format format);

/// Inverse of serialize(.., Format::Json). Titles are set to the keys.
TextTable parse_json_table(std::string_view text);

// ---------------------------------------------------------------------------
// The degree/gonality/slope table for extremal curves

enum class TableMode { Printed, Resolved };

/// Parses "paper-faithful" or "resolved".
TableMode parse_table_mode(std::string_view name);

/// slope * r + offset.
struct LinearDegree {
  Int slope;
  Int offset;
  Int at(Int r) const { return checked::add(checked::mul(slope, r), offset); }
  std::string to_string() const;
};

/// One symbolic row. A row covers either a single degree with fixed eps,
/// or a band of degrees with eps running from eps_lo up to r - 2.
struct TableRow {
  ModelKind kind;
  Int gamma;
  Int m;
  LinearDegree d_lo;
  LinearDegree d_hi;
  Int eps_lo;
  bool band;
  std::string degree_expr;
  std::string eps_expr;
  std::string verdict;     // token shown in the slope column
  std::string printed_token; // "yes (trigonal)", "yes", "no", "★" or ""

  /// Whether the row describes at least one extremal curve in P^r.
  bool instantiable(Int r) const;
  /// The models the row stands for in P^r (one per degree in the row).
  std::vector<ExtremalModel> instantiate(Int r) const;
};

/// Largest r used when summarizing resolved verdicts.
inline constexpr Int kResolveMaxR = 30;

/// Rows for gonality 3 .. gamma_max (gamma_max >= 4). In printed mode
/// the slope column carries the printed tokens and every band is labelled
/// "2 ≤ ε ≤ r-2"; in resolved mode both come from the verdict engine.
std::vector<TableRow> table1(Int gamma_max, TableMode mode);

/// Verdict of the engine for the row instantiated in P^r; throws
/// InvalidInput if the row is not instantiable or its degrees disagree.
SlopeStatus row_status(const TableRow& row, Int r);

TextTable table1_text(const std::vector<TableRow>& rows);

// ---------------------------------------------------------------------------
// Scans over (d, r)

struct DegreePolicy {
  std::optional<Int> d_max; // default: 6r - 5 per r
  Int d_max_for(Int r) const { return d_max ? *d_max : 6 * r - 5; }
};

struct ScanRecord {
  Int r;
  Int d;
  Int m;
  Int eps;
  Int g;
  ModelKind kind;
  Int gamma;
  SlopeVerdict verdict;
  Int rho;   // brill_noether(d, r, g)
  Int dr_lo; // ledger bounds on d_r
  Int dr_hi;
};

/// For every 3 <= r_lo <= r <= r_hi and 2r+1 <= d <= d_max(r): one record
/// per extremal model, ordered by r, then d, then model kind.
std::vector<ScanRecord> scan(Int r_lo, Int r_hi, DegreePolicy policy = {});

TextTable scan_text(const std::vector<ScanRecord>& records);

// ---------------------------------------------------------------------------
// Other result tables used by the command line

TextTable profile_text(const CurveProfile& p);
TextTable models_text(const std::vector<ExtremalModel>& models);
TextTable embedding_text(const Embedding& e);
TextTable ledger_text(const GonalityLedger& ledger);
TextTable verdict_text(const std::vector<std::pair<std::string, SlopeVerdict>>& verdicts);
TextTable verylast_rows_text(const VerylastResult& result);

} // namespace gonseq
