#include "menger/error.hpp"

namespace menger {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kUnknownEdge: return "UnknownEdge";
    case ErrorKind::kTerminalInSet: return "TerminalInSet";
    case ErrorKind::kAdjacentTerminals: return "AdjacentTerminals";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kKappaDroppedAfterContraction:
      return "KappaDroppedAfterContraction";
    case ErrorKind::kCriticalityBroken: return "CriticalityBroken";
    case ErrorKind::kLiftFailed: return "LiftFailed";
  }
  return "Unknown";
}

}  // namespace menger
