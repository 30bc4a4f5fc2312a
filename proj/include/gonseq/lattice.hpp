#pragma once

// Intersection theory on the Picard lattice of the Hirzebruch surface F_n,
//
//   Pic(F_n) = Z[C0] + Z[L],   C0^2 = -n,  C0.L = 1,  L^2 = 0,
//
// and on its rational normal scroll models, where the hyperplane class is
// H = C0 + beta L and the lattice is re-expressed in the basis (H, L) with
// H^2 = r - 1, H.L = 1, L^2 = 0.

#include <string>

#include "gonseq/checked.hpp"

namespace gonseq {

/// The class a*C0 + b*L on F_n. Values are immutable.
class DivisorClass {
public:
  /// Throws InvalidInput when n < 0.
  DivisorClass(Int n, Int a, Int b);

  static DivisorClass section(Int n) { return {n, 1, 0}; }
  static DivisorClass fiber(Int n) { return {n, 0, 1}; }

  Int n() const noexcept { return n_; }
  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }

  /// On F_0 the two rulings are interchangeable; the normal form has a <= b.
  /// Identity for n > 0. This is a relabelling of one curve class, not a
  /// lattice map: apply it to a curve, never to one summand of a sum.
  DivisorClass normalized() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  friend DivisorClass operator*(Int k, const DivisorClass& d);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "4C0+12L" style rendering.
  std::string to_string() const;

private:
  Int n_;
  Int a_;
  Int b_;
};

/// -n a1 a2 + a1 b2 + a2 b1. Throws InvalidInput on mismatched surfaces.
Int intersect(const DivisorClass& lhs, const DivisorClass& rhs);

/// K = -2C0 - (n+2)L.
DivisorClass canonical_class(Int n);

/// (K+X).X / 2 + 1 with no admissibility check. Formal: meaningful as a
/// genus only for classes that carry a smooth irreducible curve.
Int formal_genus(const DivisorClass& x);

/// Arithmetic genus of a smooth irreducible member of |X|. Throws DomainError
/// when |X| has no such member or the adjunction value is negative.
Int adjunction_genus(const DivisorClass& x);

/// |aC0 + bL| contains a smooth irreducible curve iff
/// (a,b) = (0,1) or (1,0), or a > 0 and b > an, or a > 0, b = an, n > 0.
bool is_irreducible_smoothable(const DivisorClass& d);

/// a > 0 and b > an (b > 0 on F_0).
bool is_very_ample(const DivisorClass& d);

/// h^0(O(C0 + beta L)) = 2 beta + 2 - n, for beta >= n >= 0.
Int h0_unisecant(Int beta, Int n);

/// F_n mapped to P^r by |C0 + beta L|; a cone over a rational normal curve
/// when beta == n.
class ScrollEmbedding {
public:
  Int n() const noexcept { return n_; }
  Int beta() const noexcept { return beta_; }
  Int r() const noexcept { return r_; }
  Int degree() const noexcept { return r_ - 1; }
  bool is_cone() const noexcept { return beta_ == n_; }
  DivisorClass hyperplane() const { return {n_, 1, beta_}; }

  friend bool operator==(const ScrollEmbedding&, const ScrollEmbedding&) = default;

private:
  ScrollEmbedding(Int n, Int beta, Int r) : n_(n), beta_(beta), r_(r) {}
  friend ScrollEmbedding scroll_from_rn(Int r, Int n);
  friend ScrollEmbedding scroll_from_beta(Int beta, Int n);

  Int n_;
  Int beta_;
  Int r_;
};

/// beta = (r + n - 1) / 2. Requires r >= 3, n >= 0, r + n odd, beta >= n.
ScrollEmbedding scroll_from_rn(Int r, Int n);

/// r = 2 beta + 1 - n. Requires beta >= n >= 0 and r >= 3.
ScrollEmbedding scroll_from_beta(Int beta, Int n);

/// The scroll of degree r-1 over F_0 or F_1 (whichever matches the parity
/// of r). Classes written in the (H, L) basis only see r, so this is the
/// default host surface for them.
ScrollEmbedding standard_scroll(Int r);

/// A class written as h H + l L on a scroll.
struct HLClass {
  Int h;
  Int l;
  friend bool operator==(const HLClass&, const HLClass&) = default;
  std::string to_string() const;
};

/// aC0 + bL = aH + (b - a beta)L.
HLClass class_in_HL(const DivisorClass& d, const ScrollEmbedding& s);
DivisorClass class_from_HL(const HLClass& c, const ScrollEmbedding& s);

/// Intersection form in the (H, L) basis on a scroll in P^r.
Int intersect_HL(const HLClass& lhs, const HLClass& rhs, Int r);

/// K = -2H + (r-3)L.
HLClass scroll_canonical_class(Int r);

/// Degree in P^r of a curve of class hH + lL, i.e. h(r-1) + l.
Int degree_HL(const HLClass& c, Int r);

} // namespace gonseq
