#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gonseq/castelnuovo.hpp"
#include "gonseq/lattice.hpp"

namespace gonseq {

/// The three shapes an extremal curve X in P^r (r >= 3, d >= 2r+1) can take.
///   TypeII:        X in |mH + L| on a scroll, eps = 0, gonality m.
///   TypeIII:       X in |(m+1)H - (r-eps-2)L| on a scroll, gonality m+1.
///   PlaneVeronese: Veronese image of a smooth plane curve of degree k,
///                  r = 5, d = 2k, gonality k-1.
/// Declaration order is the output order of classify_extremal.
enum class ModelKind { TypeII, TypeIII, PlaneVeronese };

std::string_view to_string(ModelKind kind);

struct ExtremalModel {
  ModelKind kind;
  Int d;
  Int r;
  Int m;
  Int eps;
  Int gamma;
  Int g;
  std::optional<Int> plane_degree;    // PlaneVeronese only
  std::optional<HLClass> scroll_class; // scroll kinds only

  bool on_scroll() const noexcept { return kind != ModelKind::PlaneVeronese; }
  friend bool operator==(const ExtremalModel&, const ExtremalModel&) = default;
};

/// Every admissible model for an extremal curve of degree d in P^r: TypeII
/// (when eps = 0), then TypeIII, then PlaneVeronese (r = 5, d even).
/// Each carries g = pi(d, r).
std::vector<ExtremalModel> classify_extremal(Int d, Int r);

/// Model of the given kind and gonality, if classify_extremal emits one.
std::optional<ExtremalModel> find_model(Int d, Int r, ModelKind kind, Int gamma);

/// Whether a smooth member of |hH + lL| on the scroll is extremal: computes
/// d = h(r-1) + l and the adjunction genus with K = -2H + (r-3)L, and
/// compares with pi(d, r). Curves with d < 2r + 1 are never extremal.
/// Throws DomainError when d <= 0.
bool verify_extremal_class(const HLClass& c, const ScrollEmbedding& s);

/// Genus of a smooth member of |hH + lL| on a scroll in P^r, by adjunction.
Int scroll_curve_genus(const HLClass& c, Int r);

/// Result of re-embedding a curve gamma C0 + lambda L of F_n by
/// |C0 + beta L| with beta = floor((lambda - n - 1) / (gamma - 2)).
struct Embedding {
  DivisorClass curve;  // normalized input class
  ScrollEmbedding scroll;
  Int beta;
  Int eps;             // (lambda - n - 1) mod (gamma - 2)
  Int genus;           // adjunction genus on F_n
  CurveProfile profile; // lenient profile of (d, r)
  /// 2 lambda >= gamma (gamma + n - 2): the image is Castelnuovo-maximal
  /// with m = gamma - 1 and the same eps. Checked, not assumed.
  bool extremality_proven;
  /// The TypeIII model of the image; present when extremality is proven
  /// and d >= 2r + 1 (always the case for gamma >= 4).
  std::optional<ExtremalModel> model;
};

/// Throws Unsupported for gamma <= 2 (after F_0 normalization), DomainError
/// for classes without smooth irreducible members, PlaneCurveException for
/// gamma(C0 + L) on F_1, EmbeddingFailure if beta <= n.
Embedding embed_extremal(Int gamma, Int lambda, Int n);

/// Gonality of a smooth irreducible curve of class X on F_n: X.L, except
/// alpha(C0 + L) on F_1 (a plane curve of degree alpha, gonality alpha - 1)
/// and F_0 where the smaller ruling degree wins.
Int gonality_from_class(const DivisorClass& x);

} // namespace gonseq
