#include "gonseq/selfcheck.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "gonseq/cli.hpp"
#include "gonseq/errors.hpp"
#include "gonseq/tables.hpp"

namespace gonseq {

namespace {

// Collects assertion outcomes for one criterion; keeps the first failure.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  Int checks() const { return checks_; }
  bool ok() const { return first_failure_.empty(); }
  const std::string& failure() const { return first_failure_; }

private:
  Int checks_ = 0;
  std::string first_failure_;
};

CriterionResult timed(int id, std::string name, double budget_ms,
                      const std::function<void(Tally&)>& body) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

  std::string detail = tally.failure();
  bool passed = tally.ok();
  if (passed && budget_ms > 0 && ms >= budget_ms) {
    passed = false;
    std::ostringstream msg;
    msg << "took " << ms << " ms, budget " << budget_ms << " ms";
    detail = msg.str();
  }
  return {id, std::move(name), passed, tally.checks(), ms, budget_ms, detail};
}

std::string where(std::initializer_list<std::pair<const char*, Int>> values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + std::to_string(v);
  }
  return out;
}

// The (gamma, lambda, n) grid: irreducible classes satisfying 2 lambda >= gamma (gamma + n - 2),
// eleven consecutive lambdas from the smallest admissible one.
template <class F>
void for_each_grid_class(F&& f) {
  for (Int n = 0; n <= 10; ++n) {
    for (Int gamma = 3; gamma <= 8; ++gamma) {
      const Int hyp = (gamma * (gamma + n - 2) + 1) / 2;
      const Int irreducible = (n == 0) ? gamma : gamma * n;
      const Int first = std::max(hyp, irreducible);
      for (Int lambda = first; lambda <= first + 10; ++lambda) {
        if (!is_irreducible_smoothable(DivisorClass(n, gamma, lambda))) continue;
        f(gamma, lambda, n);
      }
    }
  }
}

void criterion_1(Tally& t) {
  const CurveProfile p = profile(10, 4);
  t.expect(p.pi == 9 && p.m == 3 && p.eps == 0, "profile(10,4) is not m=3 eps=0 pi=9");
  const auto model = find_model(10, 4, ModelKind::TypeIII, 4);
  t.expect(model.has_value(), "no gamma=4 model at (10,4)");
  if (model) {
    t.expect(model->g == 9, "gamma=4 model at (10,4) has g != 9");
    t.expect(slope_verdict(*model).status == SlopeStatus::Holds, "(10,4,4) verdict is not holds");
  }
}

void criterion_2(Tally& t) {
  Int cases = 0;
  for_each_grid_class([&](Int gamma, Int lambda, Int n) {
    ++cases;
    // 2g = 2(lambda-1)(gamma-1) - n gamma(gamma-1); gamma(gamma-1) is even.
    const Int closed = (lambda - 1) * (gamma - 1) - n * (gamma * (gamma - 1) / 2);
    t.expect(adjunction_genus(DivisorClass(n, gamma, lambda)) == closed,
             "adjunction genus differs from closed form at " +
                 where({{"gamma", gamma}, {"lambda", lambda}, {"n", n}}));
  });
  t.expect(cases >= 300, "genus grid has only " + std::to_string(cases) + " cases");
}

void criterion_3(Tally& t) {
  for_each_grid_class([&](Int gamma, Int lambda, Int n) {
    const std::string at = where({{"gamma", gamma}, {"lambda", lambda}, {"n", n}});
    if (n == 1 && lambda == gamma) {
      bool thrown = false;
      try {
        embed_extremal(gamma, lambda, n);
      } catch (const PlaneCurveException&) {
        thrown = true;
      }
      t.expect(thrown, "plane-curve class embedded at " + at);
      return;
    }
    const Embedding e = embed_extremal(gamma, lambda, n);
    const Int beta = (lambda - n - 1) / (gamma - 2);
    const Int eps = (lambda - n - 1) % (gamma - 2);
    const Int r = 2 * beta + 1 - n;
    const Int d = gamma * (beta - n) + lambda;
    t.expect(e.beta == beta && e.eps == eps && e.scroll.r() == r && e.profile.d == d,
             "embedding data differ at " + at);
    t.expect(e.profile.m == gamma - 1, "m != gamma-1 at " + at);
    t.expect(e.profile.eps == eps, "eps mismatch at " + at);
    t.expect(e.genus == e.profile.pi, "g != pi(d,r) at " + at);
    t.expect(e.extremality_proven, "extremality not flagged at " + at);
  });
}

void criterion_4(Tally& t) {
  for (Int r = 3; r <= 12; ++r) {
    for (Int d = 2 * r + 1; d <= 6 * r - 5; ++d) {
      for (const ExtremalModel& m : classify_extremal(d, r)) {
        if (!m.scroll_class) continue;
        t.expect(verify_extremal_class(*m.scroll_class, standard_scroll(r)),
                 "verify_extremal_class rejects " + m.scroll_class->to_string() + " at " +
                     where({{"d", d}, {"r", r}}));
      }
    }
  }
}

void criterion_5(Tally& t) {
  for (Int r = 5; r <= 20; ++r) {
    const Int d = 3 * r - 2;
    const std::string at = where({{"r", r}});
    const auto model = find_model(d, r, ModelKind::TypeIII, 4);
    t.expect(model.has_value(), "no gamma=4 model at " + at);
    if (!model) continue;
    t.expect(model->g == 3 * r - 3, "genus of the (3r-2) model is not 3r-3 at " + at);
    const GonalityEntry next = extremal_ledger(*model).entry(r + 1);
    t.expect(next.exact() && next.lo == 3 * r + 1, "d_{r+1} != 3r+1 at " + at);
    t.expect(slope_verdict(*model).status == SlopeStatus::Violated, "verdict not violated at " + at);
    t.expect((r + 1) * (3 * r - 2) < r * (3 * r + 1), "numeric slope check fails at " + at);
    t.expect(brill_noether(d, r, 3 * r - 3) < 0, "rho >= 0 at " + at);
  }
}

void criterion_6(Tally& t) {
  for (Int gamma = 4; gamma <= 8; ++gamma) {
    for (Int r = 3; r <= 30; ++r) {
      const Int lo = r * (gamma - 1);
      const Int hi = gamma * (r - 1) + 1;
      const std::string at = where({{"gamma", gamma}, {"r", r}});
      if (r < gamma - 1) {
        t.expect(lo > hi, "band not empty at " + at);
        continue;
      }
      Int seen = 0;
      for (Int d = lo; d <= hi; ++d) {
        for (const ExtremalModel& m : classify_extremal(d, r)) {
          if (m.gamma != gamma) continue;
          ++seen;
          t.expect(slope_verdict(m).status == SlopeStatus::Holds,
                   "band verdict not holds at " + at + " d=" + std::to_string(d));
        }
      }
      t.expect(seen > 0, "no band model at " + at);
    }
  }
}

std::optional<SlopeStatus> parse_status(const std::string& word) {
  for (SlopeStatus s : {SlopeStatus::Holds, SlopeStatus::Violated, SlopeStatus::Undetermined}) {
    if (word == to_string(s)) return s;
  }
  return std::nullopt;
}

// Decodes a resolved slope token ("holds", or "r=3: undetermined; r≥5: violated")
// into the status it claims for a given r.
std::optional<SlopeStatus> token_status(const std::string& token, Int r) {
  if (auto s = parse_status(token)) return s;
  std::istringstream parts(token);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (!part.empty() && part.front() == ' ') part.erase(0, 1);
    const auto colon = part.find(": ");
    if (colon == std::string::npos) return std::nullopt;
    const std::string range = part.substr(0, colon);
    const auto status = parse_status(part.substr(colon + 2));
    Int first = 0;
    Int last = 0;
    if (range.rfind("r≥", 0) == 0) {
      first = std::stoll(range.substr(std::string("r≥").size()));
      last = kResolveMaxR;
    } else if (range.rfind("r=", 0) == 0) {
      const std::string body = range.substr(2);
      const auto dots = body.find("..");
      first = std::stoll(body.substr(0, dots));
      last = (dots == std::string::npos) ? first : std::stoll(body.substr(dots + 2));
    } else {
      return std::nullopt;
    }
    if (first <= r && r <= last) return status;
  }
  return std::nullopt;
}

void criterion_7(Tally& t, const std::string& golden_path) {
  std::ifstream in(golden_path, std::ios::binary);
  t.expect(static_cast<bool>(in), "cannot read golden file '" + golden_path + "'");
  if (in) {
    std::ostringstream golden;
    golden << in.rdbuf();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"gonseq", "table1", "--gamma-max", "6", "--mode", "paper-faithful",
                               "--format", "md"},
                              out, err);
    t.expect(code == cli::kOk, "table1 exited with " + std::to_string(code) + ": " + err.str());
    t.expect(out.str() == golden.str(), "table1 output differs from the golden file");
  }

  for (const TableRow& row : table1(6, TableMode::Resolved)) {
    for (Int r = 5; r <= kResolveMaxR; ++r) {
      if (!row.instantiable(r)) continue;
      const std::string at = row.degree_expr + " gamma=" + std::to_string(row.gamma) +
                             " r=" + std::to_string(r);
      const auto claimed = token_status(row.verdict, r);
      t.expect(claimed.has_value(), "resolved token '" + row.verdict + "' says nothing for " + at);
      for (Int d = row.d_lo.at(r); d <= row.d_hi.at(r); ++d) {
        const auto model = find_model(d, r, row.kind, row.gamma);
        t.expect(model.has_value(), "row does not classify at " + at);
        if (model && claimed) {
          t.expect(slope_verdict(*model).status == *claimed,
                   "resolved token disagrees with the engine at " + at + " d=" + std::to_string(d));
        }
      }
    }
  }
}

void criterion_8(Tally& t) {
  for (Int n = 3; n <= 15; ++n) {
    const std::string at = where({{"n", n}});
    const VerylastResult res = verylast_sequence(n);
    t.expect(res.genus == 6 * n - 3, "g != 6n-3 at " + at);

    Int previous = 0;
    for (const GonalityEntry& e : res.ledger.entries()) {
      if (!e.exact()) continue;
      t.expect(e.lo > previous, "exact entries not increasing at " + at + " r=" +
                                    std::to_string(e.index));
      t.expect(e.lo <= 4 * e.index, "d_r > 4r at " + at + " r=" + std::to_string(e.index));
      previous = e.lo;
    }

    const Int a_max = (n - 3) / 2;
    t.expect(static_cast<Int>(res.rows.size()) == a_max + 1, "wrong number of embeddings at " + at);
    for (const VerylastRow& row : res.rows) {
      const CurveProfile p = profile(row.degree, row.r);
      const std::string ra = at + " a=" + std::to_string(row.a);
      t.expect(row.degree == 4 * (n + row.a) && row.r == n + 2 * row.a + 1, "embedding data at " + ra);
      t.expect(p.m == 3 && row.m == 3, "m != 3 at " + ra);
      t.expect(p.eps == n - 2 * row.a - 1 && row.eps == p.eps, "eps mismatch at " + ra);
      t.expect(p.pi == 6 * n - 3 && row.pi == p.pi, "pi != 6n-3 at " + ra);
    }

    for (Int r = n; r <= n + 2 * a_max + 1; ++r) {
      const GonalityEntry dr = res.ledger.entry(r);
      const GonalityEntry next = res.ledger.entry(r + 1);
      t.expect(dr.exact(), "d_r not exact at " + at + " r=" + std::to_string(r));
      t.expect(next.bounded() && r * next.hi <= (r + 1) * dr.lo,
               "slope inequality not certified at " + at + " r=" + std::to_string(r));
    }
    t.expect(res.tail_index == n + 2 * a_max + 2 && res.tail_bound == 4 * n + 4 * a_max + 3,
             "tail bound mismatch at " + at);
  }

  auto exact_is = [&](const VerylastResult& res, Int r, Int value) {
    const GonalityEntry e = res.ledger.entry(r);
    t.expect(e.exact() && e.lo == value, "n=" + std::to_string(res.n) + ": d_" +
                                             std::to_string(r) + " != " + std::to_string(value));
  };
  auto bounded_by = [&](const VerylastResult& res, Int r, Int value) {
    t.expect(res.ledger.entry(r).hi <= value, "n=" + std::to_string(res.n) + ": hi_" +
                                                  std::to_string(r) + " > " + std::to_string(value));
  };
  {
    const Int n = 4; // even
    const VerylastResult res = verylast_sequence(n);
    exact_is(res, n, 4 * n - 1);
    exact_is(res, n + 1, 4 * n);
    exact_is(res, 2 * n - 4, 6 * n - 9);
    exact_is(res, 2 * n - 3, 6 * n - 8);
    bounded_by(res, 2 * n - 2, 6 * n - 5);
  }
  {
    const Int n = 7; // odd
    const VerylastResult res = verylast_sequence(n);
    exact_is(res, n, 4 * n - 1);
    exact_is(res, n + 1, 4 * n);
    exact_is(res, n + 2, 4 * n + 3);
    exact_is(res, n + 3, 4 * n + 4);
    exact_is(res, 2 * n - 3, 6 * n - 7);
    exact_is(res, 2 * n - 2, 6 * n - 6);
    bounded_by(res, 2 * n - 1, 6 * n - 3);
  }
}

void criterion_9(Tally& t) {
  for (Int k = 5; k <= 12; ++k) {
    const std::string at = where({{"k", k}});
    const Int g = (k - 1) * (k - 2) / 2;
    t.expect(plane_curve_gonality(k, 1) == k - 1, "d_1 != k-1 at " + at);
    t.expect(plane_curve_gonality(k, 2) == k, "d_2 != k at " + at);
    t.expect(plane_curve_gonality(k, 5) == 2 * k, "d_5 != 2k at " + at);
    for (Int r = 1; r + 1 <= g - 1; ++r) {
      t.expect(plane_curve_gonality(k, r) < plane_curve_gonality(k, r + 1),
               "sequence not increasing at " + at + " r=" + std::to_string(r));
    }
    if (k >= 6) {
      t.expect(plane_slope_verdict(k, 5).status == SlopeStatus::Violated,
               "5th slope verdict not violated at " + at);
      const auto model = find_model(2 * k, 5, ModelKind::PlaneVeronese, k - 1);
      t.expect(model.has_value(), "no plane model at " + at);
      if (model) {
        t.expect(slope_verdict(*model).status == SlopeStatus::Violated,
                 "plane model verdict not violated at " + at);
        const GonalityEntry d5 = extremal_ledger(*model).entry(5);
        t.expect(d5.exact() && d5.lo == 2 * k, "ledger d_5 != 2k at " + at);
      }
    }
  }
}

void criterion_10(Tally& t) {
  Int violated = 0;
  for (const ScanRecord& rec : scan(3, 12)) {
    if (rec.verdict.status != SlopeStatus::Violated || rec.dr_lo != rec.dr_hi) continue;
    ++violated;
    t.expect(brill_noether(rec.dr_lo, rec.r, rec.g) < 0,
             "rho >= 0 for a violated verdict at " + where({{"d", rec.d}, {"r", rec.r}}));
  }
  t.expect(violated > 0, "scan(3,12) produced no violated verdict with exact d_r");
}

// Sequences of actual curves, used as witnesses: every seed interval contains
// the witness value, so the seeds are consistent by construction.
struct Witness {
  Int gamma;
  Int g;
  std::vector<Int> d; // d[r-1] = d_r for r = 1 .. g+2
};

Witness general_curve(Int g) {
  Witness w{(g + 3) / 2, g, {}};
  for (Int r = 1; r <= g + 2; ++r) w.d.push_back(r < g ? r + g - g / (r + 1) : r + g);
  return w;
}

Witness hyperelliptic_curve(Int g) {
  Witness w{2, g, {}};
  for (Int r = 1; r <= g + 2; ++r) w.d.push_back(r < g ? 2 * r : r + g);
  return w;
}

Witness plane_curve(Int k) {
  const Int g = (k - 1) * (k - 2) / 2;
  Witness w{k - 1, g, {}};
  for (Int r = 1; r <= g + 2; ++r) w.d.push_back(plane_curve_gonality(k, r));
  return w;
}

void random_ledgers(Tally& t, std::mt19937_64& rng, Int count) {
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<Int> genus(3, 40);
  std::uniform_int_distribution<Int> plane_degree(5, 10);
  std::uniform_int_distribution<Int> slack(0, 3);
  std::uniform_int_distribution<int> coin(0, 3);

  for (Int trial = 0; trial < count; ++trial) {
    Witness w;
    switch (family(rng)) {
    case 0: w = general_curve(genus(rng)); break;
    case 1: w = hyperelliptic_curve(genus(rng)); break;
    default: w = plane_curve(plane_degree(rng)); break;
    }
    const std::string at = "trial " + std::to_string(trial) + " (gamma=" + std::to_string(w.gamma) +
                           ", g=" + std::to_string(w.g) + ")";
    try {
      GonalityLedger ledger = baseline_ledger(w.gamma, w.g);
      for (Int r = 1; r <= static_cast<Int>(w.d.size()); ++r) {
        const Int value = w.d[static_cast<std::size_t>(r - 1)];
        const int pick = coin(rng);
        if (pick == 0) ledger.raise_lower(r, value - slack(rng), "seed-lo-" + std::to_string(r));
        if (pick == 1) ledger.lower_upper(r, value + slack(rng), "seed-hi-" + std::to_string(r));
      }
      ledger.propagate();
      bool inside = true;
      for (const GonalityEntry& e : ledger.entries()) {
        const Int value = w.d[static_cast<std::size_t>(e.index - 1)];
        inside = inside && e.lo <= e.hi && e.lo <= value && value <= e.hi;
      }
      t.expect(inside, "witness escaped its bounds in " + at);
    } catch (const Contradiction& c) {
      t.expect(false, "consistent seeds contradicted in " + at + ": " + c.what());
    }
  }
}

void injected_contradictions(Tally& t, std::mt19937_64& rng, Int count) {
  std::vector<ExtremalModel> models;
  for (Int r = 3; r <= 8; ++r) {
    for (Int d = 2 * r + 1; d <= 6 * r - 5; ++d) {
      for (const ExtremalModel& m : classify_extremal(d, r)) models.push_back(m);
    }
  }
  std::uniform_int_distribution<std::size_t> which(0, models.size() - 1);
  std::uniform_int_distribution<int> style(0, 1);
  std::uniform_int_distribution<Int> offset(1, 5);

  for (Int trial = 0; trial < count; ++trial) {
    const ExtremalModel& m = models[which(rng)];
    const GonalityLedger ledger = extremal_ledger(m);
    std::uniform_int_distribution<Int> index(1, ledger.horizon() - 1);
    const Int r = index(rng);
    const GonalityEntry e = ledger.entry(r);

    std::vector<std::string> pins;
    if (style(rng) == 0) {
      // A value outside the current interval.
      const bool below = !e.bounded() || (rng() & 1U);
      const Int value = below ? e.lo - offset(rng) : e.hi + offset(rng);
      pins.push_back(std::to_string(r) + ":" + std::to_string(value));
    } else {
      // Two consecutive entries pinned to the same value break strict increase.
      pins.push_back(std::to_string(r) + ":" + std::to_string(e.lo));
      pins.push_back(std::to_string(r + 1) + ":" + std::to_string(e.lo));
    }

    std::vector<std::string> args{"gonseq", "bounds", "--d", std::to_string(m.d), "--r",
                                  std::to_string(m.r), "--gamma", std::to_string(m.gamma)};
    for (const std::string& p : pins) {
      args.push_back("--pin");
      args.push_back(p);
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    const std::string text = err.str();
    const auto lower = text.find("lower=");
    const auto upper = text.find(" upper=");
    bool two_tags = false;
    if (lower != std::string::npos && upper != std::string::npos && upper > lower) {
      const std::string lo_tag = text.substr(lower + 6, upper - lower - 6);
      const auto end = text.find('\n', upper);
      const std::string hi_tag = text.substr(upper + 7, end - upper - 7);
      two_tags = !lo_tag.empty() && !hi_tag.empty() && lo_tag != hi_tag;
    }
    std::string argline;
    for (const auto& a : args) argline += a + " ";
    t.expect(code == cli::kContradiction, "exit " + std::to_string(code) + " for: " + argline);
    t.expect(two_tags, "diagnostic does not name two tags for: " + argline + "-> " + text);
  }
}

} // namespace

std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "pi(10,4)=9 and (10,4,4) holds", 1.0, criterion_1));
  out.push_back(timed(2, "adjunction genus matches closed form", 1000.0, criterion_2));
  out.push_back(timed(3, "scroll re-embedding is extremal", 1000.0, criterion_3));
  out.push_back(timed(4, "classified scroll classes verify", 1000.0, criterion_4));
  out.push_back(timed(5, "degree 3r-2 fourgonal violation", 10.0, criterion_5));
  out.push_back(timed(6, "gonal band holds", 100.0, criterion_6));
  out.push_back(timed(7, "table golden file and resolved rows", 100.0,
                      [&](Tally& t) { criterion_7(t, options.golden_path); }));
  out.push_back(timed(8, "4(C0+nL) gonality subsequence", 100.0, criterion_8));
  out.push_back(timed(9, "smooth plane curves", 10.0, criterion_9));
  out.push_back(timed(10, "violations have negative rho", 1000.0, criterion_10));
  out.push_back(timed(11, "ledger propagation properties", 0.0, [&](Tally& t) {
    std::mt19937_64 rng(options.seed);
    random_ledgers(t, rng, options.random_ledgers);
    injected_contradictions(t, rng, options.injected_contradictions);
  }));
  return out;
}

} // namespace gonseq
