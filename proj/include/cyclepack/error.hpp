#pragma once

#include <stdexcept>
#include <string>

namespace cyclepack {

enum class ErrorKind {
  NonPlanar,
  InvalidRotation,
  NotACycle,
  NotLaminar,
  BadInstance,
  BadParams,
  NegativeWeight,
  NoWitness,
  NoUncrossing,
  LengthNotMinimal,
  ChainViolation,
  BoundViolated,
  Truncated,
  ValueMismatch,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotLaminar: return "NotLaminar";
    case ErrorKind::BadInstance: return "BadInstance";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NoUncrossing: return "NoUncrossing";
    case ErrorKind::LengthNotMinimal: return "LengthNotMinimal";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::ValueMismatch: return "ValueMismatch";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, ErrorKind k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

}  // namespace cyclepack
