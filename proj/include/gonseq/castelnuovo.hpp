#pragma once

#include "gonseq/checked.hpp"
#include "gonseq/verdict.hpp"

namespace gonseq {

/// Strict: d >= 2r + 1, the range where extremal curves are classified.
/// Lenient: d >= r + 1.
enum class DegreeMode { Strict, Lenient };

/// Degree d in P^r with d - 1 = m(r-1) + eps, 0 <= eps <= r-2, and the
/// Castelnuovo bound pi = m((m-1)(r-1)/2 + eps).
struct CurveProfile {
  Int d;
  Int r;
  Int m;
  Int eps;
  Int pi;
  friend bool operator==(const CurveProfile&, const CurveProfile&) = default;
};

CurveProfile profile(Int d, Int r, DegreeMode mode = DegreeMode::Strict);

/// pi(d, r) for any d >= r + 1.
Int castelnuovo_bound(Int d, Int r);

/// rho(d, r, g) = g - (r+1)(g - d + r).
Int brill_noether(Int d, Int r, Int g);

/// Slope verdict for r + 1 <= d <= 2r, where the gonality sequence around
/// index r is fixed by Riemann-Roch. Throws InvalidInput outside that range.
SlopeVerdict low_degree_verdict(Int d, Int r);

} // namespace gonseq
