#pragma once

#include <string>
#include <string_view>

namespace gonseq {

enum class SlopeStatus { Holds, Violated, Undetermined };

/// Outcome of the r-th slope inequality d_r / r >= d_{r+1} / (r+1).
/// `tag` is a short machine-readable key for the fact that decided it,
/// `reason` a sentence for humans.
struct SlopeVerdict {
  SlopeStatus status;
  std::string tag;
  std::string reason;
};

std::string_view to_string(SlopeStatus status);

} // namespace gonseq
