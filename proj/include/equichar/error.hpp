#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equichar {

enum class ErrorKind {
  Validation,            // malformed or out-of-range input
  Overflow,              // checked 64-bit arithmetic overflowed
  ModulusMismatch,
  NegativeMultiplicity,  // virtual module failed to materialize
  NotAnOrbitSum,
  InconsistentTData,
  InvalidJump,
  InvalidCover,
  EtaleUnsupported,
  RelationCheckFailed,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace equichar
