#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratcat {

enum class ErrorKind {
  InvalidParams,
  MalformedPath,
  AboveDiagonal,
  LimitExceeded,
  Overflow,
  NotCoprimeCase,
  NotNormalized,
  EmptyInput,
  InvalidSet,
  InvalidSkeleton,
  Infeasible,
  TooManyVertices,
  InvalidGraph,
  NoIntersection,
  NotBalanced,
  FormulaMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::MalformedPath: return "MalformedPath";
    case ErrorKind::AboveDiagonal: return "AboveDiagonal";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotCoprimeCase: return "NotCoprimeCase";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal consistency checks that guard theorems we rely on. They throw
// rather than abort so that verification suites can report them.
inline void ensure(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace ratcat
