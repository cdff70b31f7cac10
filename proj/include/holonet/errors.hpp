#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holonet {

enum class ErrorCode {
  // poset_core
  DuplicateElement,
  CycleInOrder,
  UnknownElement,
  EndpointMismatch,
  PathOutsidePoset,
  // homotopy
  NotConnected,
  NotALoopAtBase,
  NotComparable,
  // net_bundle
  InvalidBundle,
  RelatorNotSatisfied,
  // representation
  InvalidRepresentation,
  NotCovariant,
  NotANetBundle,
  FiberMismatch,
  // fredholm
  PathMismatch,
  RelationDefect,
  NotFredholm,
  KernelNotInvariant,
  CentralityViolated,
  NotSelfAdjoint,
  // char_class
  NotInfiniteCyclic,
  InexactPhase,
  PhaseRecoveryFailed,
  BasisMismatch,
  // spectral
  NotInvariant,
  // cli
  SyntaxError,
  SchemaError,
  ReferenceError,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holonet
