#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace attractor {

/// Raised when an argument violates an operation's precondition
/// (k = 0, out-of-range positions, malformed instances, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No solution exists for the requested problem (e.g. an isolated vertex in
/// an edge cover instance).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate was rejected by its verifier. For attractor markings the
/// uncovered substring is attached.
class CertificateRejected : public std::runtime_error {
 public:
  explicit CertificateRejected(const std::string& what,
                               std::optional<std::vector<std::uint32_t>> witness = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::optional<std::vector<std::uint32_t>>& witness() const { return witness_; }

 private:
  std::optional<std::vector<std::uint32_t>> witness_;
};

/// A brute-force oracle was asked for an instance beyond its enumeration limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing this means a reduction or a
/// converter produced something the correctness argument rules out.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parse errors for the file formats in io.hpp.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace attractor
