#pragma once

#include <stdexcept>
#include <string>

namespace gastba {

/// Base class of every numerical or domain failure raised by the library.
/// `kind()` is a stable machine-readable tag used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GASTBA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

GASTBA_DEFINE_ERROR(PoleError)
GASTBA_DEFINE_ERROR(DomainError)
GASTBA_DEFINE_ERROR(ConvergenceError)
GASTBA_DEFINE_ERROR(NoSolutionError)
GASTBA_DEFINE_ERROR(BranchAmbiguityError)
GASTBA_DEFINE_ERROR(DimensionError)
GASTBA_DEFINE_ERROR(ExcludedOrderError)
GASTBA_DEFINE_ERROR(SingularityError)
GASTBA_DEFINE_ERROR(EmptyBracketError)

#undef GASTBA_DEFINE_ERROR

/// The fermionic 2d equation has no finite root for h <= -1: z runs off to
/// infinity. Carries the limit so callers can report it instead of crashing.
class DivergentSolution : public Error {
 public:
  DivergentSolution(const std::string& what, double limit_c)
      : Error("DivergentSolution", what), limit_c_(limit_c) {}
  /// Central charge of the z -> infinity limit.
  double limit_central_charge() const noexcept { return limit_c_; }

 private:
  double limit_c_;
};

}  // namespace gastba
