#pragma once

#include <stdexcept>
#include <string>

namespace knaplat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficientError : Error {
  using Error::Error;
};
struct NotPrimitiveError : Error {
  using Error::Error;
};
struct NotPointedError : Error {
  using Error::Error;
};
struct BadShapeError : Error {
  using Error::Error;
};
// m = 1 instances must have a positive coefficient vector.
struct NonPositiveRowError : Error {
  using Error::Error;
};
struct DependentBasisError : Error {
  using Error::Error;
};
struct TargetOutsideSpanError : Error {
  using Error::Error;
};
struct EmptyPolytopeError : Error {
  using Error::Error;
};
struct EnumerationBudgetError : Error {
  using Error::Error;
};
struct GcdNotOneError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct GenerationError : Error {
  using Error::Error;
};

}  // namespace knaplat
