#pragma once

#include <stdexcept>
#include <string>

namespace ttower {

// Base for all typed domain errors. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

#define TTOWER_ERROR(Name)                                              \
  struct Name : DomainError {                                           \
    explicit Name(const std::string& what = #Name) : DomainError(what) {} \
  }

TTOWER_ERROR(SporadicSurfaceError);
TTOWER_ERROR(MalformedMapError);
TTOWER_ERROR(NotRecurrentError);
TTOWER_ERROR(NotFillingShapedError);
TTOWER_ERROR(InvalidSubtrackError);
TTOWER_ERROR(WrongTrackError);
TTOWER_ERROR(NotLargeBranchError);
TTOWER_ERROR(InvalidSplitError);
TTOWER_ERROR(NotFoldableError);
TTOWER_ERROR(NotCarriedError);
TTOWER_ERROR(BadSequenceError);
TTOWER_ERROR(ChainExhaustedError);
TTOWER_ERROR(BudgetExceededError);
TTOWER_ERROR(NotFillingError);
TTOWER_ERROR(NoEmbeddingError);
TTOWER_ERROR(InvalidCurveError);

#undef TTOWER_ERROR

}  // namespace ttower
