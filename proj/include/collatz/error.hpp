#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collatz {

enum class ErrorCode {
  InvalidArgument,
  IterationCapHit,
  ClassThree,
  ParityMismatch,
  NonIntegerForm,
  NotOddPositive,
  Internal,
};

const char* to_string(ErrorCode code);

// Single exception type for the library. The code decides how callers (the
// CLI in particular) classify the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : Error(ErrorCode::IterationCapHit,
              "iteration cap of " + std::to_string(cap) + " reached"),
        cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace collatz
