#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctec {

enum class ErrorCode {
   ZeroInverse,
   OutOfRange,
   BadLength,
   ParseError,
   ValidationError,
   InconsistentParameters,
   InvalidArgument,
   ExceptionalPoint,
   InvalidPoint,
   SmallSubgroupResult,
   ZeroRS,
   RngFailure,
   NotFound,
   Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is the stable part of the
/// contract; the message is for humans.
class Error : public std::runtime_error {
   public:
      Error(ErrorCode code, const std::string& what) :
            std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code) {}

      ErrorCode code() const noexcept { return m_code; }

   private:
      ErrorCode m_code;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
   throw Error(code, what);
}

}  // namespace ctec
