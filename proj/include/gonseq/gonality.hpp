#pragma once

// Interval bounds on the gonality sequence d_1 < d_2 < ... of a curve, and
// the slope-inequality verdicts derived from them.
//
// A ledger keeps a closed interval [lo, hi] for every d_r up to a horizon
// g + 2 (beyond it d_r = r + g is known) and tightens the intervals to a
// fixed point under
//
//   strict increase   lo_{r+1} >= lo_r + 1,  hi_r <= hi_{r+1} - 1
//   subadditivity     hi_{r+s} <= hi_r + hi_s,
//                     lo_r >= lo_{r+s} - hi_s
//
// Every bound remembers the seed facts it was derived from, so a conflict
// can name both sides.

#include <limits>
#include <string>
#include <vector>

#include "gonseq/extremal.hpp"
#include "gonseq/verdict.hpp"

namespace gonseq {

inline constexpr Int kUnbounded = std::numeric_limits<Int>::max();

struct GonalityEntry {
  Int index;
  Int lo;
  Int hi; // kUnbounded when nothing is known
  std::string lo_tag;
  std::string hi_tag;
  std::vector<std::string> provenance; // seed facts behind lo and hi

  bool exact() const noexcept { return lo == hi; }
  bool bounded() const noexcept { return hi != kUnbounded; }
};

class GonalityLedger {
public:
  /// An unseeded ledger: lo_r = r, hi_r unbounded. Requires gamma >= 1, g >= 0.
  GonalityLedger(Int gamma, Int genus);

  Int gamma() const noexcept { return gamma_; }
  Int genus() const noexcept { return genus_; }
  /// Last index stored explicitly.
  Int horizon() const noexcept { return static_cast<Int>(bounds_.size()); }

  /// Indices past the horizon report the Riemann-Roch value r + g.
  GonalityEntry entry(Int r) const;
  std::vector<GonalityEntry> entries() const;

  /// Each of these throws Contradiction as soon as some lo exceeds its hi.
  void raise_lower(Int r, Int value, const std::string& tag);
  void lower_upper(Int r, Int value, const std::string& tag);
  void pin(Int r, Int value, const std::string& tag);

  /// Runs the tightening rules to a fixed point.
  void propagate();

private:
  struct Side {
    Int value;
    std::string rule;                 // empty for a seed
    std::vector<std::string> origins; // sorted seed tags
    std::string tag() const;
  };
  struct Slot {
    Side lo;
    Side hi;
  };

  bool tighten_lo(Int r, Int value, const std::string& rule, std::vector<std::string> origins);
  bool tighten_hi(Int r, Int value, const std::string& rule, std::vector<std::string> origins);
  void check(Int r) const;
  void check_beyond_horizon(Int r, Int lo, Int hi, const std::string& tag) const;

  Int gamma_;
  Int genus_;
  std::vector<Slot> bounds_; // bounds_[r-1] holds d_r
};

/// Facts valid on every curve of gonality gamma and genus g:
/// d_1 = gamma, d_{g-1} = 2g - 2, d_r = r + g for r >= g, d_r <= r gamma;
/// then propagated. Requires gamma >= 2, g >= 3.
GonalityLedger baseline_ledger(Int gamma, Int g);

/// Adds what is known for an extremal curve of the given model:
///   d_r <= d;
///   d >= 3r - 1:  d_{r-1} = d - 1, d_r = d;
///                 scroll models also get d_{r+1} <= d + gamma - 1;
///   d = 3r - 1:   d_{r+1} large enough to break the r-th slope inequality;
///   TypeIII, gamma = 4, d = 3r - 2, r >= 5:  d_{r+1} = 3r + 1;
///   PlaneVeronese: the whole sequence from Max Noether's theorem.
/// The model's gamma and g must match the ledger.
GonalityLedger apply_extremal_facts(GonalityLedger ledger, const ExtremalModel& model);

/// baseline_ledger(model.gamma, model.g) followed by apply_extremal_facts.
GonalityLedger extremal_ledger(const ExtremalModel& model);

/// What the ledger alone certifies about the r-th slope inequality:
/// Holds when (r+1) lo_r >= r hi_{r+1}, Violated when (r+1) hi_r < r lo_{r+1}.
SlopeStatus ledger_slope_status(const GonalityLedger& ledger, Int r);

/// Slope verdict at the model's own index r. First match wins:
///   gamma <= 3                        holds (hyperelliptic / trigonal)
///   PlaneVeronese                     plane_slope_verdict(k, 5)
///   gamma = 4, d = 3r - 2, r = 4      holds (genus 9 classification)
///   gamma = 4, d = 3r - 2, r >= 5     violated
///   d = 3r - 1                        violated
///   r(gamma-1) <= d <= gamma(r-1)+1   holds
///   otherwise                         undetermined
SlopeVerdict slope_verdict(const ExtremalModel& model);

/// Special families whose sequences are known to satisfy every slope
/// inequality. Only used when the caller names the family explicitly.
enum class CurveFamily { Hyperelliptic, Trigonal, Bielliptic, GeneralFourgonal };
SlopeVerdict family_verdict(CurveFamily family);

/// r = alpha(alpha+3)/2 - beta with alpha >= 1, 0 <= beta <= alpha.
struct NoetherSplit {
  Int alpha;
  Int beta;
};
NoetherSplit noether_split(Int r);

/// d_r of a smooth plane curve of degree k >= 5: alpha k - beta for r < g,
/// r + g otherwise.
Int plane_curve_gonality(Int k, Int r);

/// Holds when beta != 0; violated when beta = 0 and alpha <= k - 4;
/// undetermined otherwise. Holds for r >= g (Riemann-Roch range).
SlopeVerdict plane_slope_verdict(Int k, Int r);

/// One re-embedding of X = 4(C0 + nL) by H_a = C0 + (n+a)L.
struct VerylastRow {
  Int a;
  Int r;      // n + 2a + 1
  Int degree; // 4(n + a)
  Int m;
  Int eps;    // n - 2a - 1
  Int pi;
  Int beta;   // n + a
  bool cone;  // a = 0
};

struct VerylastResult {
  Int n;
  DivisorClass curve;
  Int genus;
  Int gamma;
  std::vector<VerylastRow> rows;
  Int tail_index; // n + 2 floor((n-3)/2) + 2
  Int tail_bound; // 4n + 4 floor((n-3)/2) + 3
  GonalityLedger ledger;
};

/// Gonality subsequence of X = 4(C0 + nL) on F_n (n >= 3) obtained from
/// its extremal re-embeddings for 0 <= a <= floor((n-3)/2).
VerylastResult verylast_sequence(Int n);

} // namespace gonseq
