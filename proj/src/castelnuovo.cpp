#include "gonseq/castelnuovo.hpp"

#include <string>

#include "gonseq/errors.hpp"

namespace gonseq {

std::string_view to_string(SlopeStatus status) {
  switch (status) {
  case SlopeStatus::Holds: return "holds";
  case SlopeStatus::Violated: return "violated";
  case SlopeStatus::Undetermined: return "undetermined";
  }
  return "?";
}

CurveProfile profile(Int d, Int r, DegreeMode mode) {
  if (r < 3) throw InvalidInput("profile needs r >= 3, got r=" + std::to_string(r));
  const Int floor_degree = mode == DegreeMode::Strict ? checked::add(checked::mul(2, r), 1)
                                                      : checked::add(r, 1);
  if (d < floor_degree) {
    throw InvalidInput("degree " + std::to_string(d) + " below " +
                       (mode == DegreeMode::Strict ? "2r+1" : "r+1") + " for r=" +
                       std::to_string(r));
  }
  const Int m = checked::floor_div(d - 1, r - 1);
  const Int eps = checked::sub(d - 1, checked::mul(m, r - 1));
  // m(m-1) is even, so the half is exact.
  const Int pi = checked::add(checked::mul(m, m - 1, r - 1) / 2, checked::mul(m, eps));
  return {d, r, m, eps, pi};
}

Int castelnuovo_bound(Int d, Int r) { return profile(d, r, DegreeMode::Lenient).pi; }

Int brill_noether(Int d, Int r, Int g) {
  if (g < 0) throw InvalidInput("genus must be >= 0");
  if (r < 1) throw InvalidInput("brill_noether needs r >= 1");
  return checked::sub(g, checked::mul(checked::add(r, 1), checked::add(checked::sub(g, d), r)));
}

SlopeVerdict low_degree_verdict(Int d, Int r) {
  if (r < 3) throw InvalidInput("low_degree_verdict needs r >= 3");
  if (d < r + 1 || d > checked::mul(2, r)) {
    throw InvalidInput("low_degree_verdict covers r+1 <= d <= 2r; got d=" + std::to_string(d) +
                       ", r=" + std::to_string(r));
  }
  if (d < 2 * r) {
    return {SlopeStatus::Holds, "nonspecial",
            "d < 2r: the series is non-special, g = d - r < r and d_r = r + g by Riemann-Roch"};
  }
  return {SlopeStatus::Holds, "d=2r",
          "d = 2r: m = 2, eps = 1, g = r + 1, so d_r = 2g - 2 and d_{r+1} = 2g"};
}

} // namespace gonseq
