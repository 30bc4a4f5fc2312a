#include "gonseq/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "gonseq/errors.hpp"
#include "gonseq/selfcheck.hpp"
#include "gonseq/tables.hpp"

#ifndef GONSEQ_DEFAULT_GOLDEN
#define GONSEQ_DEFAULT_GOLDEN ""
#endif

namespace gonseq::cli {

namespace {

struct Options {
  std::string format = "md";
  bool lenient = false;

  Int d = 0, r = 0, gamma = 0, lambda = 0, n = 0, k = 0;
  Int gamma_max = 0, r_lo = 0, r_hi = 0;
  std::optional<Int> d_max;
  std::string mode;
  std::string family;
  std::string show = "both";
  std::vector<std::string> pins;
  std::string golden = GONSEQ_DEFAULT_GOLDEN;
  Int seeds = 10000;
};

CurveFamily parse_family(const std::string& name) {
  if (name == "hyperelliptic") return CurveFamily::Hyperelliptic;
  if (name == "trigonal") return CurveFamily::Trigonal;
  if (name == "bielliptic") return CurveFamily::Bielliptic;
  if (name == "general-fourgonal") return CurveFamily::GeneralFourgonal;
  throw InvalidInput("unknown curve family '" + name + "'");
}

ExtremalModel model_for(Int d, Int r, Int gamma) {
  for (const ExtremalModel& m : classify_extremal(d, r)) {
    if (m.gamma == gamma) return m;
  }
  throw InvalidInput("no extremal model of gonality " + std::to_string(gamma) + " for d=" +
                     std::to_string(d) + ", r=" + std::to_string(r));
}

std::pair<Int, Int> parse_pin(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("--pin expects INDEX:VALUE, got '" + text + "'");
  try {
    std::size_t used = 0;
    const Int index = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const Int value = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {index, value};
  } catch (const std::logic_error&) {
    throw InvalidInput("--pin expects INDEX:VALUE, got '" + text + "'");
  }
}

void emit(std::ostream& out, const TextTable& t, Format f) { out << serialize(t, f); }

void emit_sections(std::ostream& out, Format f,
                   const std::vector<std::pair<std::string, TextTable>>& sections) {
  if (f == Format::Json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [name, table] : sections) {
      doc[name] = nlohmann::ordered_json::parse(serialize(table, Format::Json));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  bool first = true;
  for (const auto& [name, table] : sections) {
    if (!first) out << '\n';
    first = false;
    if (f == Format::Markdown) out << "## " << name << "\n\n";
    out << serialize(table, f);
  }
}

int do_profile(const Options& o, Format f, std::ostream& out) {
  const CurveProfile p = profile(o.d, o.r, o.lenient ? DegreeMode::Lenient : DegreeMode::Strict);
  if (f == Format::Markdown) {
    out << "m=" << p.m << " eps=" << p.eps << " pi=" << p.pi << '\n';
  } else {
    emit(out, profile_text(p), f);
  }
  return kOk;
}

int do_slope(const Options& o, Format f, std::ostream& out) {
  std::vector<std::pair<std::string, SlopeVerdict>> rows;
  if (o.d <= 2 * o.r) {
    if (!o.lenient) {
      throw InvalidInput("d <= 2r is outside the extremal range; pass --lenient for the "
                         "Riemann-Roch verdict");
    }
    rows.emplace_back("low-degree", low_degree_verdict(o.d, o.r));
  } else {
    const ExtremalModel model = model_for(o.d, o.r, o.gamma);
    rows.emplace_back(std::string(to_string(model.kind)), slope_verdict(model));
    const GonalityLedger ledger = extremal_ledger(model);
    const SlopeStatus certified = ledger_slope_status(ledger, o.r);
    rows.emplace_back("ledger", SlopeVerdict{certified, "ledger",
                                             "status certified by the propagated bounds on d_r "
                                             "and d_{r+1}"});
  }
  if (!o.family.empty()) {
    rows.emplace_back("family:" + o.family, family_verdict(parse_family(o.family)));
  }
  emit(out, verdict_text(rows), f);
  return kOk;
}

int do_bounds(const Options& o, Format f, std::ostream& out) {
  GonalityLedger ledger = extremal_ledger(model_for(o.d, o.r, o.gamma));
  if (!o.pins.empty()) {
    for (const std::string& p : o.pins) {
      const auto [index, value] = parse_pin(p);
      ledger.pin(index, value, "user-pin");
    }
    ledger.propagate();
  }
  emit(out, ledger_text(ledger), f);
  return kOk;
}

int do_plane(const Options& o, Format f, std::ostream& out) {
  const Int dr = plane_curve_gonality(o.k, o.r);
  const NoetherSplit split = noether_split(o.r);
  const SlopeVerdict v = plane_slope_verdict(o.k, o.r);
  TextTable t{{{"k", "k"}, {"r", "r"}, {"g", "g"}, {"alpha", "α"}, {"beta", "β"}, {"dr", "d_r"},
               {"status", "status"}, {"tag", "tag"}},
              {{o.k, o.r, (o.k - 1) * (o.k - 2) / 2, split.alpha, split.beta, dr,
                std::string(to_string(v.status)), v.tag}}};
  emit(out, t, f);
  return kOk;
}

int do_verylast(const Options& o, Format f, std::ostream& out) {
  const VerylastResult res = verylast_sequence(o.n);
  std::vector<std::pair<std::string, TextTable>> sections;
  if (o.show == "ledger" || o.show == "both") sections.emplace_back("ledger", ledger_text(res.ledger));
  if (o.show == "embeddings" || o.show == "both") {
    sections.emplace_back("embeddings", verylast_rows_text(res));
  }
  emit_sections(out, f, sections);
  return kOk;
}

int do_selfcheck(const Options& o, Format f, std::ostream& out) {
  SelfcheckOptions opts;
  opts.golden_path = o.golden;
  opts.random_ledgers = o.seeds;
  const auto results = run_selfcheck(opts);

  TextTable t{{{"id", "#"}, {"criterion", "criterion"}, {"result", "result"}, {"checks", "checks"},
               {"millis", "ms"}, {"detail", "detail"}},
              {}};
  Int total = 0;
  bool all = true;
  for (const auto& c : results) {
    total += c.checks;
    all = all && c.passed;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", c.millis);
    t.rows.push_back({c.id, c.name, c.passed ? "PASS" : "FAIL", c.checks, std::string(ms), c.detail});
  }
  emit(out, t, f);
  if (f == Format::Markdown) {
    if (all) {
      out << "ok " << total << " checks\n";
    } else {
      out << "failed\n";
    }
  }
  return all ? kOk : kInternalError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gonality sequences and slope inequalities of extremal curves", "gonseq"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  auto* strict = app.add_flag("--strict", "Require d >= 2r+1 (default)");
  auto* lenient = app.add_flag("--lenient", o.lenient, "Allow d >= r+1");
  strict->excludes(lenient);

  auto* profile_cmd = app.add_subcommand("profile", "m-ratio, eps-remainder and Castelnuovo bound");
  profile_cmd->add_option("--d", o.d, "degree")->required();
  profile_cmd->add_option("--r", o.r, "ambient dimension")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Admissible models of an extremal curve");
  classify_cmd->add_option("--d", o.d, "degree")->required();
  classify_cmd->add_option("--r", o.r, "ambient dimension")->required();

  auto* embed_cmd = app.add_subcommand("embed", "Embed gamma C0 + lambda L on F_n as an extremal curve");
  embed_cmd->add_option("--gamma", o.gamma, "C0 coefficient")->required();
  embed_cmd->add_option("--lambda", o.lambda, "L coefficient")->required();
  embed_cmd->add_option("--n", o.n, "Hirzebruch invariant")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Gonality ledger of an extremal curve");
  bounds_cmd->add_option("--d", o.d, "degree")->required();
  bounds_cmd->add_option("--r", o.r, "ambient dimension")->required();
  bounds_cmd->add_option("--gamma", o.gamma, "gonality")->required();
  bounds_cmd->add_option("--pin", o.pins, "Extra hypothesis d_INDEX = VALUE (INDEX:VALUE)");

  auto* slope_cmd = app.add_subcommand("slope", "r-th slope inequality verdict");
  slope_cmd->add_option("--d", o.d, "degree")->required();
  slope_cmd->add_option("--r", o.r, "ambient dimension")->required();
  slope_cmd->add_option("--gamma", o.gamma, "gonality")->required();
  slope_cmd->add_option("--family", o.family,
                        "Also report a known family: hyperelliptic, trigonal, bielliptic, "
                        "general-fourgonal");

  auto* table_cmd = app.add_subcommand("table1", "Degree / gonality / slope table");
  table_cmd->add_option("--gamma-max", o.gamma_max, "largest gonality band")->required();
  table_cmd->add_option("--mode", o.mode, "paper-faithful or resolved")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Classify and judge every (d, r) in a range");
  scan_cmd->add_option("--r-lo", o.r_lo, "smallest r")->required();
  scan_cmd->add_option("--r-hi", o.r_hi, "largest r")->required();
  scan_cmd->add_option("--d-max", o.d_max, "largest degree (default 6r-5)");

  auto* verylast_cmd = app.add_subcommand("verylast", "Gonality subsequence of 4(C0 + nL) on F_n");
  verylast_cmd->add_option("--n", o.n, "Hirzebruch invariant")->required();
  verylast_cmd->add_option("--show", o.show, "ledger, embeddings or both")
      ->check(CLI::IsMember({"ledger", "embeddings", "both"}));

  auto* plane_cmd = app.add_subcommand("plane", "Gonality of a smooth plane curve");
  plane_cmd->add_option("--k", o.k, "plane degree")->required();
  plane_cmd->add_option("--r", o.r, "index")->required();

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the acceptance checks");
  selfcheck_cmd->add_option("--golden", o.golden, "golden markdown table");
  selfcheck_cmd->add_option("--seeds", o.seeds, "number of random ledgers");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    const Format f = parse_format(o.format);
    if (profile_cmd->parsed()) return do_profile(o, f, out);
    if (classify_cmd->parsed()) {
      emit(out, models_text(classify_extremal(o.d, o.r)), f);
      return kOk;
    }
    if (embed_cmd->parsed()) {
      emit(out, embedding_text(embed_extremal(o.gamma, o.lambda, o.n)), f);
      return kOk;
    }
    if (bounds_cmd->parsed()) return do_bounds(o, f, out);
    if (slope_cmd->parsed()) return do_slope(o, f, out);
    if (table_cmd->parsed()) {
      emit(out, table1_text(table1(o.gamma_max, parse_table_mode(o.mode))), f);
      return kOk;
    }
    if (scan_cmd->parsed()) {
      emit(out, scan_text(scan(o.r_lo, o.r_hi, DegreePolicy{o.d_max})), f);
      return kOk;
    }
    if (verylast_cmd->parsed()) return do_verylast(o, f, out);
    if (plane_cmd->parsed()) return do_plane(o, f, out);
    if (selfcheck_cmd->parsed()) return do_selfcheck(o, f, out);
  } catch (const Contradiction& e) {
    err << "contradiction at d_" << e.index() << ": lower=" << e.lower_tag()
        << " upper=" << e.upper_tag() << "\n  " << e.what() << '\n';
    return kContradiction;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "error: no command\n";
  return kInvalidInput;
}

} // namespace gonseq::cli
