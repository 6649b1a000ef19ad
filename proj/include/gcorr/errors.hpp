#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcorr {

enum class ErrorKind {
  Input,                     // malformed or inconsistent input
  NotAnEndomorphism,
  InconsistentMultiplicity,
  ReconstructionFailure,
  VertexMismatch,
  AdMismatch,
  NotUnitary,
  NotAutomorphism,
  NotConjugate,
  BoundsInfeasible,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception. The kind
// distinguishes "the input is malformed" from "the input is well formed but
// the mathematical property does not hold".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

[[noreturn]] inline void input_error(const std::string& what) { throw Error(ErrorKind::Input, what); }

}  // namespace gcorr
