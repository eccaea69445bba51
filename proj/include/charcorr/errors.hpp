#pragma once

#include <stdexcept>
#include <string>

namespace charcorr {

/// Bad input: malformed permutation or group file, group above the
/// enumeration cap, mismatched arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to run on an instance lacking a hypothesis it
/// requires (solvability, self-normalizing Sylow, parity).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statement that the theory guarantees failed on a concrete instance.
/// `forensics()` carries whatever state was collected before the failure.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::string forensics = {})
      : std::runtime_error(what), forensics_(std::move(forensics)) {}
  const std::string& forensics() const { return forensics_; }

 private:
  std::string forensics_;
};

}  // namespace charcorr
