#include "gonseq/tables.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gonseq/errors.hpp"

namespace gonseq {

using nlohmann::json;
using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "md" || name == "markdown") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidInput("unknown format '" + std::string(name) + "' (expected md, csv or json)");
}

TableMode parse_table_mode(std::string_view name) {
  if (name == "paper-faithful") return TableMode::Printed;
  if (name == "resolved") return TableMode::Resolved;
  throw InvalidInput("unknown table mode '" + std::string(name) +
                     "' (expected paper-faithful or resolved)");
}

namespace {

std::string cell_text(const json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

std::string markdown_cell(const json& cell) {
  std::string out;
  for (char c : cell_text(cell)) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_markdown(std::ostream& out, const TextTable& t) {
  out << '|';
  for (const auto& c : t.columns) out << ' ' << c.title << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << markdown_cell(cell) << " |";
    out << '\n';
  }
}

void write_csv(std::ostream& out, const TextTable& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_cell(t.columns[i].key);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_cell(cell_text(row[i]));
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const TextTable& t) {
  ordered_json doc;
  doc["columns"] = ordered_json::array();
  for (const auto& c : t.columns) doc["columns"].push_back(c.key);
  doc["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[t.columns[i].key] = ordered_json::parse(row[i].dump());
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

} // namespace

std::string serialize(const TextTable& table, Format format) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("ragged text table");
  }
  std::ostringstream out;
  switch (format) {
  case Format::Markdown: write_markdown(out, table); break;
  case Format::Csv: write_csv(out, table); break;
  case Format::Json: write_json(out, table); break;
  }
  return out.str();
}

TextTable parse_json_table(std::string_view text) {
  const json doc = json::parse(text);
  TextTable t;
  for (const auto& key : doc.at("columns")) {
    t.columns.push_back({key.get<std::string>(), key.get<std::string>()});
  }
  for (const auto& obj : doc.at("rows")) {
    std::vector<json> row;
    for (const auto& c : t.columns) row.push_back(obj.at(c.key));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------

std::string LinearDegree::to_string() const {
  std::string out = (slope == 1) ? "r" : std::to_string(slope) + "r";
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += std::to_string(offset);
  return out;
}

bool TableRow::instantiable(Int r) const {
  if (r < 3) return false;
  const Int lo = d_lo.at(r);
  const Int hi = d_hi.at(r);
  return lo <= hi && lo >= 2 * r + 1 && eps_lo <= r - 2;
}

std::vector<ExtremalModel> TableRow::instantiate(Int r) const {
  if (!instantiable(r)) {
    throw InvalidInput("row " + degree_expr + " (gamma=" + std::to_string(gamma) +
                       ") has no extremal curve in P^" + std::to_string(r));
  }
  std::vector<ExtremalModel> out;
  for (Int d = d_lo.at(r); d <= d_hi.at(r); ++d) {
    const auto model = find_model(d, r, kind, gamma);
    const bool eps_ok = model && (band ? (model->eps >= eps_lo && model->eps <= r - 2)
                                       : model->eps == eps_lo);
    if (!eps_ok || model->m != m) {
      throw std::logic_error("row " + degree_expr + " does not match the classification at d=" +
                             std::to_string(d) + ", r=" + std::to_string(r));
    }
    out.push_back(*model);
  }
  return out;
}

SlopeStatus row_status(const TableRow& row, Int r) {
  const auto models = row.instantiate(r);
  const SlopeStatus first = slope_verdict(models.front()).status;
  for (const auto& model : models) {
    if (slope_verdict(model).status != first) {
      throw std::logic_error("mixed verdicts inside row " + row.degree_expr);
    }
  }
  return first;
}

namespace {

std::string band_label(Int eps_lo) { return std::to_string(eps_lo) + " ≤ ε ≤ r-2"; }

std::string printed_token(const TableRow& row) {
  if (row.gamma == 3) return "yes (trigonal)";
  if (row.kind == ModelKind::TypeII || row.band) return "yes";
  if (row.gamma == 4 && row.eps_lo == 0) return "★";
  if (row.gamma == 4 && row.eps_lo == 1) return "no";
  return "";
}

std::string resolved_token(const TableRow& row) {
  struct Run {
    Int first;
    Int last;
    SlopeStatus status;
  };
  std::vector<Run> runs;
  for (Int r = 3; r <= kResolveMaxR; ++r) {
    if (!row.instantiable(r)) continue;
    const SlopeStatus s = row_status(row, r);
    if (!runs.empty() && runs.back().status == s && runs.back().last == r - 1) {
      runs.back().last = r;
    } else {
      runs.push_back({r, r, s});
    }
  }
  if (runs.empty()) return "";
  if (runs.size() == 1) return std::string(to_string(runs.front().status));

  std::string out;
  for (const Run& run : runs) {
    if (!out.empty()) out += "; ";
    if (run.last == kResolveMaxR) {
      out += "r≥" + std::to_string(run.first);
    } else if (run.first == run.last) {
      out += "r=" + std::to_string(run.first);
    } else {
      out += "r=" + std::to_string(run.first) + ".." + std::to_string(run.last);
    }
    out += ": ";
    out += to_string(run.status);
  }
  return out;
}

TableRow single_row(ModelKind kind, Int gamma, Int m, LinearDegree d, Int eps) {
  return {kind, gamma, m, d, d, eps, false, d.to_string(), std::to_string(eps), "", ""};
}

TableRow band_row(Int gamma, LinearDegree lo, LinearDegree hi, Int eps_lo) {
  return {ModelKind::TypeIII, gamma, gamma - 1, lo, hi, eps_lo, true,
          lo.to_string() + " ≤ d ≤ " + hi.to_string(), band_label(eps_lo), "", ""};
}

} // namespace

std::vector<TableRow> table1(Int gamma_max, TableMode mode) {
  if (gamma_max < 4) throw InvalidInput("table1 needs gamma_max >= 4");
  std::vector<TableRow> rows;
  for (Int gamma = 3; gamma <= gamma_max; ++gamma) {
    if (gamma == 3) {
      rows.push_back(band_row(3, {2, 1}, {3, -3}, 2));
    } else {
      for (Int eps = 0; eps <= gamma - 3; ++eps) {
        rows.push_back(single_row(ModelKind::TypeIII, gamma, gamma - 1, {gamma - 1, eps + 2 - gamma}, eps));
      }
      rows.push_back(band_row(gamma, {gamma - 1, 0}, {gamma, -gamma}, std::max<Int>(gamma - 2, 2)));
    }
    rows.push_back(single_row(ModelKind::TypeII, gamma, gamma, {gamma, 1 - gamma}, 0));
  }

  for (TableRow& row : rows) {
    row.printed_token = printed_token(row);
    if (mode == TableMode::Printed) {
      row.verdict = row.printed_token;
      if (row.band) row.eps_expr = band_label(2);
    } else {
      row.verdict = resolved_token(row);
    }
  }
  return rows;
}

TextTable table1_text(const std::vector<TableRow>& rows) {
  TextTable t{{{"degree", "d"}, {"gamma", "γ"}, {"m", "m"}, {"eps", "ε"}, {"slope", "r-th slope"}}, {}};
  for (const auto& row : rows) {
    t.rows.push_back({row.degree_expr, row.gamma, row.m, row.eps_expr, row.verdict});
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<ScanRecord> scan(Int r_lo, Int r_hi, DegreePolicy policy) {
  if (r_lo < 3 || r_hi < r_lo) {
    throw InvalidInput("scan needs 3 <= r_lo <= r_hi, got [" + std::to_string(r_lo) + ", " +
                       std::to_string(r_hi) + "]");
  }
  std::vector<ScanRecord> out;
  for (Int r = r_lo; r <= r_hi; ++r) {
    for (Int d = 2 * r + 1; d <= policy.d_max_for(r); ++d) {
      for (const ExtremalModel& model : classify_extremal(d, r)) {
        const GonalityLedger ledger = extremal_ledger(model);
        const GonalityEntry dr = ledger.entry(r);
        out.push_back({r, d, model.m, model.eps, model.g, model.kind, model.gamma,
                       slope_verdict(model), brill_noether(d, r, model.g), dr.lo, dr.hi});
      }
    }
  }
  return out;
}

namespace {

json bound_cell(Int v) { return v == kUnbounded ? json(nullptr) : json(v); }

template <class T>
json optional_cell(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

} // namespace

TextTable scan_text(const std::vector<ScanRecord>& records) {
  TextTable t{{{"r", "r"}, {"d", "d"}, {"m", "m"}, {"eps", "ε"}, {"g", "g"}, {"kind", "kind"},
               {"gamma", "γ"}, {"verdict", "verdict"}, {"reason", "reason"}, {"rho", "ρ"},
               {"dr_lo", "d_r lo"}, {"dr_hi", "d_r hi"}},
              {}};
  for (const auto& rec : records) {
    t.rows.push_back({rec.r, rec.d, rec.m, rec.eps, rec.g, std::string(to_string(rec.kind)),
                      rec.gamma, std::string(to_string(rec.verdict.status)), rec.verdict.tag,
                      rec.rho, bound_cell(rec.dr_lo), bound_cell(rec.dr_hi)});
  }
  return t;
}

TextTable profile_text(const CurveProfile& p) {
  return {{{"d", "d"}, {"r", "r"}, {"m", "m"}, {"eps", "ε"}, {"pi", "π"}},
          {{p.d, p.r, p.m, p.eps, p.pi}}};
}

TextTable models_text(const std::vector<ExtremalModel>& models) {
  TextTable t{{{"kind", "kind"}, {"d", "d"}, {"r", "r"}, {"m", "m"}, {"eps", "ε"},
               {"gamma", "γ"}, {"g", "g"}, {"k", "k"}, {"h", "h"}, {"l", "l"}},
              {}};
  for (const auto& m : models) {
    const json h = m.scroll_class ? json(m.scroll_class->h) : json(nullptr);
    const json l = m.scroll_class ? json(m.scroll_class->l) : json(nullptr);
    t.rows.push_back({std::string(to_string(m.kind)), m.d, m.r, m.m, m.eps, m.gamma, m.g,
                      optional_cell(m.plane_degree), h, l});
  }
  return t;
}

TextTable embedding_text(const Embedding& e) {
  const HLClass c = class_in_HL(e.curve, e.scroll);
  return {{{"gamma", "γ"}, {"lambda", "λ"}, {"n", "n"}, {"beta", "β"}, {"eps", "ε"}, {"r", "r"},
           {"d", "d"}, {"genus", "g"}, {"m", "m"}, {"pi", "π"}, {"extremal", "extremal"},
           {"cone", "cone"}, {"h", "h"}, {"l", "l"}},
          {{e.curve.a(), e.curve.b(), e.curve.n(), e.beta, e.eps, e.scroll.r(), e.profile.d, e.genus,
            e.profile.m, e.profile.pi, e.extremality_proven, e.scroll.is_cone(), c.h, c.l}}};
}

TextTable ledger_text(const GonalityLedger& ledger) {
  TextTable t{{{"index", "r"}, {"lo", "lo"}, {"hi", "hi"}, {"exact", "exact"}, {"lo_tag", "lo from"},
               {"hi_tag", "hi from"}, {"provenance", "provenance"}},
              {}};
  for (const auto& e : ledger.entries()) {
    std::string prov;
    for (const auto& p : e.provenance) prov += (prov.empty() ? "" : " ") + p;
    t.rows.push_back({e.index, e.lo, bound_cell(e.hi), e.exact(), e.lo_tag, e.hi_tag, prov});
  }
  return t;
}

TextTable verdict_text(const std::vector<std::pair<std::string, SlopeVerdict>>& verdicts) {
  TextTable t{{{"case", "case"}, {"status", "status"}, {"tag", "tag"}, {"reason", "reason"}}, {}};
  for (const auto& [label, v] : verdicts) {
    t.rows.push_back({label, std::string(to_string(v.status)), v.tag, v.reason});
  }
  return t;
}

TextTable verylast_rows_text(const VerylastResult& result) {
  TextTable t{{{"a", "a"}, {"r", "r"}, {"degree", "δ"}, {"m", "m"}, {"eps", "ε"}, {"pi", "π"},
               {"beta", "β"}, {"cone", "cone"}},
              {}};
  for (const auto& row : result.rows) {
    t.rows.push_back({row.a, row.r, row.degree, row.m, row.eps, row.pi, row.beta, row.cone});
  }
  return t;
}

} // namespace gonseq
