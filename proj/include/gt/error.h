#ifndef GT_ERROR_H_
#define GT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gt {

enum class ErrorKind {
  kInvalidProfile,
  kInvalidArgument,
  kUnsupportedShape,
  kDegenerateGame,
  kNoEquilibrium,
  kUndefinedRatio,
  kInfeasibleBargain,
  kStepLimit,
  kInvalidState,
  kIntegrationDiverged,
  kUnsupportedMatrix,
  kInsufficientData,
  kInvalidBasis,
  kDivisionByZero,
  kInvalidPrime,
  kPrimeMismatch,
  kInvalidSOVM,
  kParseError,
  kSizeLimit,
};

std::string_view error_kind_name(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        message_(what) {}

  ErrorKind kind() const { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

#define GT_REQUIRE(cond, kind, msg)            \
  do {                                         \
    if (!(cond)) throw ::gt::Error((kind), (msg)); \
  } while (false)

}  // namespace gt

#endif  // GT_ERROR_H_
