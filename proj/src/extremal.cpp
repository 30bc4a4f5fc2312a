#include "gonseq/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gonseq/errors.hpp"

namespace gonseq {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::TypeII: return "type-ii";
  case ModelKind::TypeIII: return "type-iii";
  case ModelKind::PlaneVeronese: return "plane-veronese";
  }
  return "?";
}

namespace {

std::string pair_str(Int d, Int r) {
  return "(d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")";
}

} // namespace

Int scroll_curve_genus(const HLClass& c, Int r) {
  const HLClass k = scroll_canonical_class(r);
  const HLClass adjoint{checked::add(k.h, c.h), checked::add(k.l, c.l)};
  const Int twice = intersect_HL(adjoint, c, r);
  if (twice % 2 != 0) throw std::logic_error("odd adjunction value on scroll for " + c.to_string());
  return checked::add(twice / 2, 1);
}

std::vector<ExtremalModel> classify_extremal(Int d, Int r) {
  const CurveProfile p = profile(d, r, DegreeMode::Strict);
  std::vector<ExtremalModel> models;

  if (p.eps == 0) {
    ExtremalModel m2{ModelKind::TypeII, d, r, p.m, 0, p.m, p.pi, std::nullopt, HLClass{p.m, 1}};
    // d = gamma(r-1) + 1 and g = gamma(gamma-1)(r-1)/2.
    if (checked::add(checked::mul(m2.gamma, r - 1), 1) != d ||
        checked::mul(m2.gamma, m2.gamma - 1, r - 1) / 2 != p.pi) {
      throw std::logic_error("type II closed forms disagree with the profile at " + pair_str(d, r));
    }
    models.push_back(m2);
  }

  {
    const Int gamma = p.m + 1;
    ExtremalModel m3{ModelKind::TypeIII, d, r, p.m, p.eps, gamma, p.pi, std::nullopt,
                     HLClass{gamma, -(r - p.eps - 2)}};
    // d = (gamma-1)(r-1) + eps + 1 and g = (gamma-1)((gamma-2)(r-1)/2 + eps).
    const Int d3 = checked::add(checked::mul(gamma - 1, r - 1), p.eps + 1);
    const Int g3 = checked::add(checked::mul(gamma - 1, gamma - 2, r - 1) / 2,
                                checked::mul(gamma - 1, p.eps));
    if (d3 != d || g3 != p.pi) {
      throw std::logic_error("type III closed forms disagree with the profile at " + pair_str(d, r));
    }
    models.push_back(m3);
  }

  if (r == 5 && d % 2 == 0) {
    const Int k = d / 2;
    const Int g = checked::mul(k - 1, k - 2) / 2;
    if (g != p.pi) {
      throw std::logic_error("plane genus differs from pi(2k, 5) at k=" + std::to_string(k));
    }
    models.push_back({ModelKind::PlaneVeronese, d, r, p.m, p.eps, k - 1, g, k, std::nullopt});
  }
  return models;
}

std::optional<ExtremalModel> find_model(Int d, Int r, ModelKind kind, Int gamma) {
  for (const ExtremalModel& m : classify_extremal(d, r)) {
    if (m.kind == kind && m.gamma == gamma) return m;
  }
  return std::nullopt;
}

bool verify_extremal_class(const HLClass& c, const ScrollEmbedding& s) {
  const Int r = s.r();
  const Int d = degree_HL(c, r);
  if (d <= 0) throw DomainError("class " + c.to_string() + " has non-positive degree");
  if (d < 2 * r + 1) return false;
  return scroll_curve_genus(c, r) == castelnuovo_bound(d, r);
}

Embedding embed_extremal(Int gamma, Int lambda, Int n) {
  const DivisorClass curve = DivisorClass(n, gamma, lambda).normalized();
  const Int g_coef = curve.a();
  const Int l_coef = curve.b();

  if (g_coef <= 2) {
    throw Unsupported("scroll re-embedding needs gamma >= 3 (the quotient by gamma - 2 is undefined "
                      "or degenerate); got " + curve.to_string());
  }
  if (!is_irreducible_smoothable(curve)) {
    throw DomainError("no smooth irreducible curve in |" + curve.to_string() + "| on F_" +
                      std::to_string(n));
  }
  if (n == 1 && l_coef == g_coef) {
    throw PlaneCurveException(curve.to_string() + " on F_1 is a plane curve of degree " +
                              std::to_string(g_coef) + " blown up at a point; its gonality " +
                              "is not computed by the ruling");
  }

  const Int numerator = checked::sub(checked::sub(l_coef, n), 1);
  const Int beta = checked::floor_div(numerator, g_coef - 2);
  const Int eps = checked::floor_mod(numerator, g_coef - 2);
  // With beta = n the map is onto a cone that contracts C0; it is still an
  // isomorphism on X when X misses C0, i.e. when X.C0 = lambda - gamma n = 0.
  const bool misses_section = intersect(curve, DivisorClass::section(n)) == 0;
  if (beta < n || (beta == n && !(n > 0 && misses_section))) {
    throw EmbeddingFailure("beta=" + std::to_string(beta) + " <= n=" + std::to_string(n) +
                           ": |C0 + beta L| does not embed " + curve.to_string());
  }

  const ScrollEmbedding scroll = scroll_from_beta(beta, n);
  const Int r = scroll.r();
  const Int d = checked::add(checked::mul(g_coef, checked::sub(beta, n)), l_coef);
  if (d != intersect(curve, scroll.hyperplane())) {
    throw std::logic_error("embedded degree disagrees with X.H for " + curve.to_string());
  }

  const Int genus = adjunction_genus(curve);
  const CurveProfile prof = profile(d, r, DegreeMode::Lenient);
  const bool hypothesis = checked::mul(2, l_coef) >= checked::mul(g_coef, g_coef + n - 2);

  Embedding out{curve, scroll, beta, eps, genus, prof, false, std::nullopt};
  if (!hypothesis) return out;

  if (prof.m != g_coef - 1 || prof.eps != eps || prof.pi != genus) {
    std::ostringstream msg;
    msg << "re-embedding of " << curve.to_string() << " on F_" << n << " is not extremal: m=" << prof.m
        << " eps=" << prof.eps << " pi=" << prof.pi << " g=" << genus;
    throw std::logic_error(msg.str());
  }
  out.extremality_proven = true;

  if (d >= 2 * r + 1) {
    out.model = find_model(d, r, ModelKind::TypeIII, g_coef);
    if (!out.model || out.model->scroll_class != class_in_HL(curve, scroll)) {
      throw std::logic_error("classification does not reproduce the scroll class of " +
                             curve.to_string());
    }
  }
  return out;
}

Int gonality_from_class(const DivisorClass& x) {
  if (!is_irreducible_smoothable(x)) {
    throw DomainError("no smooth irreducible curve in |" + x.to_string() + "|");
  }
  const bool fiber = (x.a() == 0 && x.b() == 1) || (x.n() == 0 && x.a() == 1 && x.b() == 0);
  if (fiber) throw DomainError("a fiber of a ruling has no gonal cover from that ruling");

  if (x.n() == 0) return std::min(x.a(), x.b());
  if (x.n() == 1 && x.a() == x.b() && x.a() >= 2) return x.a() - 1;
  return x.a();
}

} // namespace gonseq
