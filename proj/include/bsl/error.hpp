#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsl {

// Every domain error carries a stable kind name; what() is "<kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BSL_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

BSL_DEFINE_ERROR(NonInvertibleDenominator);
BSL_DEFINE_ERROR(UnsupportedSpecKind);
BSL_DEFINE_ERROR(NoUnitRealization);
BSL_DEFINE_ERROR(PinchDomainViolation);
BSL_DEFINE_ERROR(ZeroElement);
BSL_DEFINE_ERROR(ShapeMismatch);
BSL_DEFINE_ERROR(PreconditionViolated);
BSL_DEFINE_ERROR(GcdMismatch);
BSL_DEFINE_ERROR(SameGroup);
BSL_DEFINE_ERROR(UndecidableSpec);
BSL_DEFINE_ERROR(OracleInconsistent);
BSL_DEFINE_ERROR(InvalidAutSpec);
BSL_DEFINE_ERROR(InvalidSpec);

#undef BSL_DEFINE_ERROR

// A finite digit sequence ran out. index is the first missing digit (1-based).
class RDigitBudgetExceeded : public Error {
 public:
  explicit RDigitBudgetExceeded(std::size_t index)
      : Error("RDigitBudgetExceeded",
              "digit r_" + std::to_string(index) + " is not available"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& detail)
      : Error("ParseError", detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bsl
