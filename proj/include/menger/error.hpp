#ifndef MENGER_ERROR_HPP
#define MENGER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace menger {

enum class ErrorKind {
  kSelfLoop,
  kUnknownVertex,
  kUnknownEdge,
  kTerminalInSet,
  kAdjacentTerminals,
  kTooLarge,
  kPreconditionViolated,
  kCapExceeded,
  kParse,
  // The kinds below flag bugs in the recursive path builder. Valid input
  // never produces them.
  kKappaDroppedAfterContraction,
  kCriticalityBroken,
  kLiftFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace menger

#endif  // MENGER_ERROR_HPP
