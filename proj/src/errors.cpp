#include "holonet/errors.hpp"

namespace holonet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::CycleInOrder: return "CycleInOrder";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::PathOutsidePoset: return "PathOutsidePoset";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotALoopAtBase: return "NotALoopAtBase";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::InvalidBundle: return "InvalidBundle";
    case ErrorCode::RelatorNotSatisfied: return "RelatorNotSatisfied";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::NotCovariant: return "NotCovariant";
    case ErrorCode::NotANetBundle: return "NotANetBundle";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::PathMismatch: return "PathMismatch";
    case ErrorCode::RelationDefect: return "RelationDefect";
    case ErrorCode::NotFredholm: return "NotFredholm";
    case ErrorCode::KernelNotInvariant: return "KernelNotInvariant";
    case ErrorCode::CentralityViolated: return "CentralityViolated";
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotInfiniteCyclic: return "NotInfiniteCyclic";
    case ErrorCode::InexactPhase: return "InexactPhase";
    case ErrorCode::PhaseRecoveryFailed: return "PhaseRecoveryFailed";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ReferenceError: return "ReferenceError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace holonet
