#include <ctec/error.hpp>

namespace ctec {

std::string_view to_string(ErrorCode code) {
   switch(code) {
      case ErrorCode::ZeroInverse:
         return "ZeroInverse";
      case ErrorCode::OutOfRange:
         return "OutOfRange";
      case ErrorCode::BadLength:
         return "BadLength";
      case ErrorCode::ParseError:
         return "ParseError";
      case ErrorCode::ValidationError:
         return "ValidationError";
      case ErrorCode::InconsistentParameters:
         return "InconsistentParameters";
      case ErrorCode::InvalidArgument:
         return "InvalidArgument";
      case ErrorCode::ExceptionalPoint:
         return "ExceptionalPoint";
      case ErrorCode::InvalidPoint:
         return "InvalidPoint";
      case ErrorCode::SmallSubgroupResult:
         return "SmallSubgroupResult";
      case ErrorCode::ZeroRS:
         return "ZeroRS";
      case ErrorCode::RngFailure:
         return "RngFailure";
      case ErrorCode::NotFound:
         return "NotFound";
      case ErrorCode::Unsupported:
         return "Unsupported";
   }
   return "Unknown";
}

}  // namespace ctec
