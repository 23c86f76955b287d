#pragma once

#include <stdexcept>
#include <string>

namespace nondeg {

// Domain errors carry a stable name that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define NONDEG_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  };

NONDEG_DEFINE_ERROR(DimensionMismatch)
NONDEG_DEFINE_ERROR(DegenerateInput)
NONDEG_DEFINE_ERROR(IdenticalCenters)
NONDEG_DEFINE_ERROR(InvalidArgument)
NONDEG_DEFINE_ERROR(BetaOutOfRange)
NONDEG_DEFINE_ERROR(GroundTooLarge)
NONDEG_DEFINE_ERROR(BudgetExceeded)
NONDEG_DEFINE_ERROR(InfeasibleDedup)
NONDEG_DEFINE_ERROR(UnrepresentableRadius)
NONDEG_DEFINE_ERROR(Exhausted)
NONDEG_DEFINE_ERROR(DuplicatePoints)
NONDEG_DEFINE_ERROR(CoincidentPoints)
NONDEG_DEFINE_ERROR(InternalError)
NONDEG_DEFINE_ERROR(MissingParams)
NONDEG_DEFINE_ERROR(ParseError)

#undef NONDEG_DEFINE_ERROR

}  // namespace nondeg
