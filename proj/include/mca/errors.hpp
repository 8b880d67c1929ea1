#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mca {

enum class ErrorKind {
  RankMismatch,
  LengthMismatch,
  ResourceLimit,
  BadDegrees,
  NotMinimized,
  NoSolution,
  IndexMismatch,
  BadPartition,
  BadCyclotomicData,
  SchemaError,
  InvariantViolation,
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BadDegrees: return "BadDegrees";
    case ErrorKind::NotMinimized: return "NotMinimized";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadCyclotomicData: return "BadCyclotomicData";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and machine-readable;
/// `what()` carries the human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mca
