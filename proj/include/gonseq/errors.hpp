#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gonseq {

/// Parameters outside an operation's admissible range.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed parameters for which the requested quantity is undefined
/// (reducible class, negative genus, degenerate degree).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parameters the library deliberately does not handle (gamma <= 2 in the
/// scroll embedding, plane curves of degree < 5, ...).
class Unsupported : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The unisecant system |C0 + beta L| does not embed the surface.
class EmbeddingFailure : public DomainError {
public:
  using DomainError::DomainError;
};

/// gamma(C0 + L) on F_1: the curve is a plane curve blown up at a point
/// and its gonality is not cut out by the ruling.
class PlaneCurveException : public DomainError {
public:
  using DomainError::DomainError;
};

/// A gonality ledger was driven to lo > hi at some index.
class Contradiction : public std::runtime_error {
public:
  Contradiction(std::int64_t index, std::string lower_tag, std::string upper_tag,
                const std::string& message)
      : std::runtime_error(message), index_(index), lower_tag_(std::move(lower_tag)),
        upper_tag_(std::move(upper_tag)) {}

  std::int64_t index() const noexcept { return index_; }
  const std::string& lower_tag() const noexcept { return lower_tag_; }
  const std::string& upper_tag() const noexcept { return upper_tag_; }

private:
  std::int64_t index_;
  std::string lower_tag_;
  std::string upper_tag_;
};

} // namespace gonseq
