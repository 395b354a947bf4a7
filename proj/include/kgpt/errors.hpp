#pragma once

#include <stdexcept>
#include <string>

namespace kgpt {

enum class ErrorCode {
  InvalidParameter,
  InadmissibleLevel,
  DegenerateLevel,
  NoSignChange,
  ConvergenceFailure,
  PoleError,
  RecurrenceBreakdown,
  ShapeInvarianceViolation,
};

const char* to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the library. The C API maps the code
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define KGPT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : Error(ErrorCode::Name, what) {}                         \
  };

KGPT_DEFINE_ERROR(InvalidParameter)
KGPT_DEFINE_ERROR(InadmissibleLevel)
KGPT_DEFINE_ERROR(DegenerateLevel)
KGPT_DEFINE_ERROR(NoSignChange)
KGPT_DEFINE_ERROR(ConvergenceFailure)
KGPT_DEFINE_ERROR(PoleError)
KGPT_DEFINE_ERROR(RecurrenceBreakdown)
KGPT_DEFINE_ERROR(ShapeInvarianceViolation)

#undef KGPT_DEFINE_ERROR

}  // namespace kgpt
