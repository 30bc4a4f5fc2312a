#include "gonseq/gonality.hpp"

#include <algorithm>
#include <sstream>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

const std::string kRiemannRoch = "riemann-roch";

std::vector<std::string> merge(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '+';
    out += p;
  }
  return out;
}

void require_index(Int r) {
  if (r < 1) throw InvalidInput("gonality index must be >= 1, got " + std::to_string(r));
}

} // namespace

std::string GonalityLedger::Side::tag() const {
  if (rule.empty()) return join(origins);
  return rule + "(" + join(origins) + ")";
}

GonalityLedger::GonalityLedger(Int gamma, Int genus) : gamma_(gamma), genus_(genus) {
  if (gamma < 1) throw InvalidInput("gonality must be >= 1");
  if (genus < 0) throw InvalidInput("genus must be >= 0");
  const Int horizon = checked::add(genus, 2);
  bounds_.reserve(static_cast<std::size_t>(horizon));
  for (Int r = 1; r <= horizon; ++r) {
    bounds_.push_back({Side{r, "", {"nondegenerate"}}, Side{kUnbounded, "", {"none"}}});
  }
}

GonalityEntry GonalityLedger::entry(Int r) const {
  require_index(r);
  if (r > horizon()) {
    const Int v = checked::add(r, genus_);
    return {r, v, v, kRiemannRoch, kRiemannRoch, {kRiemannRoch}};
  }
  const Slot& s = bounds_[static_cast<std::size_t>(r - 1)];
  return {r, s.lo.value, s.hi.value, s.lo.tag(), s.hi.tag(), merge(s.lo.origins, s.hi.origins)};
}

std::vector<GonalityEntry> GonalityLedger::entries() const {
  std::vector<GonalityEntry> out;
  out.reserve(bounds_.size());
  for (Int r = 1; r <= horizon(); ++r) out.push_back(entry(r));
  return out;
}

void GonalityLedger::check_beyond_horizon(Int r, Int lo, Int hi, const std::string& tag) const {
  const Int v = checked::add(r, genus_);
  if (lo > v || hi < v) {
    std::ostringstream msg;
    msg << "d_" << r << ": bound from " << tag << " contradicts d_" << r << " = " << v
        << " from " << kRiemannRoch;
    if (lo > v) throw Contradiction(r, tag, kRiemannRoch, msg.str());
    throw Contradiction(r, kRiemannRoch, tag, msg.str());
  }
}

void GonalityLedger::check(Int r) const {
  const Slot& s = bounds_[static_cast<std::size_t>(r - 1)];
  if (s.lo.value <= s.hi.value) return;
  std::ostringstream msg;
  msg << "d_" << r << ": lower bound " << s.lo.value << " from " << s.lo.tag()
      << " exceeds upper bound " << s.hi.value << " from " << s.hi.tag();
  throw Contradiction(r, s.lo.tag(), s.hi.tag(), msg.str());
}

bool GonalityLedger::tighten_lo(Int r, Int value, const std::string& rule,
                                std::vector<std::string> origins) {
  Side& lo = bounds_[static_cast<std::size_t>(r - 1)].lo;
  if (value <= lo.value) return false;
  lo = Side{value, rule, std::move(origins)};
  check(r);
  return true;
}

bool GonalityLedger::tighten_hi(Int r, Int value, const std::string& rule,
                                std::vector<std::string> origins) {
  Side& hi = bounds_[static_cast<std::size_t>(r - 1)].hi;
  if (value >= hi.value) return false;
  hi = Side{value, rule, std::move(origins)};
  check(r);
  return true;
}

void GonalityLedger::raise_lower(Int r, Int value, const std::string& tag) {
  require_index(r);
  if (r > horizon()) return check_beyond_horizon(r, value, kUnbounded, tag);
  tighten_lo(r, value, "", {tag});
}

void GonalityLedger::lower_upper(Int r, Int value, const std::string& tag) {
  require_index(r);
  if (r > horizon()) return check_beyond_horizon(r, std::numeric_limits<Int>::min(), value, tag);
  tighten_hi(r, value, "", {tag});
}

void GonalityLedger::pin(Int r, Int value, const std::string& tag) {
  raise_lower(r, value, tag);
  lower_upper(r, value, tag);
}

void GonalityLedger::propagate() {
  const Int n = horizon();
  auto lo = [&](Int r) -> const Side& { return bounds_[static_cast<std::size_t>(r - 1)].lo; };
  auto hi = [&](Int r) -> const Side& { return bounds_[static_cast<std::size_t>(r - 1)].hi; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (Int r = 1; r < n; ++r) {
      if (lo(r).value + 1 > lo(r + 1).value) {
        changed |= tighten_lo(r + 1, lo(r).value + 1, "monotone", lo(r).origins);
      }
    }
    for (Int r = n - 1; r >= 1; --r) {
      if (hi(r + 1).value == kUnbounded || hi(r + 1).value - 1 >= hi(r).value) continue;
      changed |= tighten_hi(r, hi(r + 1).value - 1, "monotone", hi(r + 1).origins);
    }
    for (Int r = 1; 2 * r <= n; ++r) {
      for (Int s = r; r + s <= n; ++s) {
        const bool hr = hi(r).value != kUnbounded;
        const bool hs = hi(s).value != kUnbounded;
        if (hr && hs) {
          const Int sum = checked::add(hi(r).value, hi(s).value);
          if (sum < hi(r + s).value) {
            changed |= tighten_hi(r + s, sum, "subadditive", merge(hi(r).origins, hi(s).origins));
          }
        }
        if (hs) {
          const Int diff = checked::sub(lo(r + s).value, hi(s).value);
          if (diff > lo(r).value) {
            changed |= tighten_lo(r, diff, "subadditive", merge(lo(r + s).origins, hi(s).origins));
          }
        }
        if (hr) {
          const Int diff = checked::sub(lo(r + s).value, hi(r).value);
          if (diff > lo(s).value) {
            changed |= tighten_lo(s, diff, "subadditive", merge(lo(r + s).origins, hi(r).origins));
          }
        }
      }
    }
  }
}

GonalityLedger baseline_ledger(Int gamma, Int g) {
  if (gamma < 2) throw InvalidInput("baseline ledger needs gamma >= 2");
  if (g < 3) throw InvalidInput("baseline ledger needs g >= 3");
  GonalityLedger ledger(gamma, g);
  for (Int r = 1; r <= ledger.horizon(); ++r) {
    ledger.lower_upper(r, checked::mul(r, gamma), "gonal-multiple");
  }
  ledger.pin(1, gamma, "gonality");
  ledger.pin(g - 1, 2 * g - 2, "canonical-series");
  for (Int r = g; r <= ledger.horizon(); ++r) ledger.pin(r, r + g, kRiemannRoch);
  ledger.propagate();
  return ledger;
}

GonalityLedger apply_extremal_facts(GonalityLedger ledger, const ExtremalModel& model) {
  if (model.g != ledger.genus() || model.gamma != ledger.gamma()) {
    throw InvalidInput("model (gamma=" + std::to_string(model.gamma) + ", g=" +
                       std::to_string(model.g) + ") does not match the ledger (gamma=" +
                       std::to_string(ledger.gamma()) + ", g=" + std::to_string(ledger.genus()) +
                       ")");
  }
  const Int r = model.r;
  const Int d = model.d;

  ledger.lower_upper(r, d, "hyperplane-series");

  if (d >= 3 * r - 1) {
    ledger.pin(r - 1, d - 1, "extremal-corank");
    ledger.pin(r, d, "extremal-corank");
    if (model.on_scroll() && model.gamma >= 4) {
      ledger.lower_upper(r + 1, checked::add(d, model.gamma - 1), "gonal-extension");
    }
  }
  if (d == 3 * r - 1) {
    // (r+1) d_r < r d_{r+1} with d_r = d.
    ledger.raise_lower(r + 1, checked::mul(r + 1, d) / r + 1, "degree-3r-1-violation");
  }
  if (model.kind == ModelKind::TypeIII && model.gamma == 4 && d == 3 * r - 2 && r >= 5) {
    ledger.pin(r + 1, 3 * r + 1, "projected-dual");
  }
  if (model.kind == ModelKind::PlaneVeronese) {
    for (Int i = 1; i <= ledger.horizon(); ++i) {
      ledger.pin(i, plane_curve_gonality(*model.plane_degree, i), "max-noether");
    }
  }
  ledger.propagate();
  return ledger;
}

GonalityLedger extremal_ledger(const ExtremalModel& model) {
  return apply_extremal_facts(baseline_ledger(model.gamma, model.g), model);
}

SlopeStatus ledger_slope_status(const GonalityLedger& ledger, Int r) {
  require_index(r);
  const GonalityEntry here = ledger.entry(r);
  const GonalityEntry next = ledger.entry(r + 1);
  if (next.bounded() && checked::mul(r + 1, here.lo) >= checked::mul(r, next.hi)) {
    return SlopeStatus::Holds;
  }
  if (here.bounded() && checked::mul(r + 1, here.hi) < checked::mul(r, next.lo)) {
    return SlopeStatus::Violated;
  }
  return SlopeStatus::Undetermined;
}

SlopeVerdict slope_verdict(const ExtremalModel& model) {
  const Int d = model.d;
  const Int r = model.r;
  const Int gamma = model.gamma;
  if (d < 2 * r + 1) {
    throw InvalidInput("slope_verdict needs d >= 2r + 1; use low_degree_verdict below that");
  }

  if (gamma <= 3) {
    return {SlopeStatus::Holds, "low-gonality",
            "hyperelliptic and trigonal curves satisfy every slope inequality"};
  }
  if (model.kind == ModelKind::PlaneVeronese) return plane_slope_verdict(*model.plane_degree, 5);
  if (gamma == 4 && d == 3 * r - 2 && r == 4) {
    return {SlopeStatus::Holds, "genus-9-classification",
            "fourgonal extremal curves of degree 10 in P^4 have genus 9 and d_4 <= 10, so no "
            "slope inequality fails"};
  }
  if (gamma == 4 && d == 3 * r - 2 && r >= 5) {
    return {SlopeStatus::Violated, "projected-dual",
            "fourgonal, d = 3r - 2, r >= 5: d_{r+1} = 3r + 1 via the extremal projection to "
            "P^{r-2} and its Serre dual"};
  }
  if (d == 3 * r - 1) {
    return {SlopeStatus::Violated, "degree-3r-1",
            "extremal curves of degree 3r - 1 violate the r-th slope inequality"};
  }
  if (checked::mul(r, gamma - 1) <= d && d <= checked::add(checked::mul(gamma, r - 1), 1)) {
    return {SlopeStatus::Holds, "gonal-band",
            "r(gamma-1) <= d <= gamma(r-1)+1: d_r = d and d_{r+1} <= d + gamma - 1"};
  }
  return {SlopeStatus::Undetermined, "open",
          "no established result decides this case"};
}

SlopeVerdict family_verdict(CurveFamily family) {
  switch (family) {
  case CurveFamily::Hyperelliptic:
    return {SlopeStatus::Holds, "family-hyperelliptic", "hyperelliptic curves satisfy every slope inequality"};
  case CurveFamily::Trigonal:
    return {SlopeStatus::Holds, "family-trigonal", "trigonal curves satisfy every slope inequality"};
  case CurveFamily::Bielliptic:
    return {SlopeStatus::Holds, "family-bielliptic", "bielliptic curves satisfy every slope inequality"};
  case CurveFamily::GeneralFourgonal:
    return {SlopeStatus::Holds, "family-general-fourgonal",
            "general fourgonal curves satisfy every slope inequality"};
  }
  throw InvalidInput("unknown curve family");
}

NoetherSplit noether_split(Int r) {
  require_index(r);
  Int alpha = 1;
  while (checked::mul(alpha + 1, alpha + 2) / 2 <= r) ++alpha;
  const Int beta = checked::mul(alpha, alpha + 3) / 2 - r;
  return {alpha, beta};
}

namespace {

Int plane_genus(Int k) {
  if (k < 5) throw Unsupported("plane-curve sequences need k >= 5, got k=" + std::to_string(k));
  return checked::mul(k - 1, k - 2) / 2;
}

} // namespace

Int plane_curve_gonality(Int k, Int r) {
  const Int g = plane_genus(k);
  require_index(r);
  if (r >= g) return checked::add(r, g);
  const NoetherSplit s = noether_split(r);
  return checked::sub(checked::mul(s.alpha, k), s.beta);
}

SlopeVerdict plane_slope_verdict(Int k, Int r) {
  const Int g = plane_genus(k);
  require_index(r);
  if (r >= g) {
    return {SlopeStatus::Holds, kRiemannRoch, "r >= g: d_r = r + g and d_{r+1} = r + 1 + g"};
  }
  const NoetherSplit s = noether_split(r);
  if (s.beta != 0) {
    return {SlopeStatus::Holds, "noether-beta-nonzero",
            "plane curve with r = alpha(alpha+3)/2 - beta, beta != 0"};
  }
  if (s.alpha <= k - 4) {
    return {SlopeStatus::Violated, "noether-beta-zero",
            "plane curve with r = alpha(alpha+3)/2 and alpha <= k - 4"};
  }
  return {SlopeStatus::Undetermined, "open",
          "plane curve with beta = 0 and alpha > k - 4 is not covered"};
}

VerylastResult verylast_sequence(Int n) {
  if (n < 3) throw Unsupported("the 4(C0 + nL) family needs n >= 3, got n=" + std::to_string(n));

  const DivisorClass curve = 4 * (DivisorClass::section(n) + n * DivisorClass::fiber(n));
  const Int genus = adjunction_genus(curve);
  const Int gamma = gonality_from_class(curve);
  if (genus != checked::sub(checked::mul(6, n), 3) || gamma != 4) {
    throw std::logic_error("4(C0 + nL) has unexpected genus or gonality");
  }

  GonalityLedger ledger = baseline_ledger(gamma, genus);
  std::vector<VerylastRow> rows;
  const Int a_max = (n - 3) / 2;
  for (Int a = 0; a <= a_max; ++a) {
    const ScrollEmbedding scroll = scroll_from_beta(n + a, n);
    const Int degree = intersect(curve, scroll.hyperplane());
    const CurveProfile p = profile(degree, scroll.r(), DegreeMode::Strict);
    if (scroll.r() != n + 2 * a + 1 || degree != 4 * (n + a) || p.m != 3 ||
        p.eps != n - 2 * a - 1 || p.pi != genus) {
      throw std::logic_error("re-embedding a=" + std::to_string(a) + " of 4(C0 + nL) is not extremal");
    }
    const auto model = find_model(degree, scroll.r(), ModelKind::TypeIII, gamma);
    if (!model || model->scroll_class != class_in_HL(curve, scroll)) {
      throw std::logic_error("re-embedding a=" + std::to_string(a) + " is not a type III class");
    }
    ledger = apply_extremal_facts(std::move(ledger), *model);
    rows.push_back({a, scroll.r(), degree, p.m, p.eps, p.pi, scroll.beta(), scroll.is_cone()});
  }

  const Int tail_index = n + 2 * a_max + 2;
  const Int tail_bound = 4 * n + 4 * a_max + 3;
  if (ledger.entry(tail_index).hi > tail_bound) {
    throw std::logic_error("tail bound on d_" + std::to_string(tail_index) + " was not derived");
  }
  return {n, curve, genus, gamma, std::move(rows), tail_index, tail_bound, std::move(ledger)};
}

} // namespace gonseq
