#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace motss {

/// Base class for all domain errors. `code()` is a stable machine-readable
/// identifier; `what()` carries the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define MOTSS_DEFINE_ERROR(Name, code_literal)                      \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message)                       \
        : Error(code_literal, message) {}                           \
  }

MOTSS_DEFINE_ERROR(NonPositivePrice, "non_positive_price");
MOTSS_DEFINE_ERROR(InvertedInterval, "inverted_interval");
MOTSS_DEFINE_ERROR(LengthMismatch, "length_mismatch");
MOTSS_DEFINE_ERROR(OutOfBounds, "out_of_bounds");
MOTSS_DEFINE_ERROR(ArityMismatch, "arity_mismatch");
MOTSS_DEFINE_ERROR(NonPositiveInput, "non_positive_input");
MOTSS_DEFINE_ERROR(InvalidParameter, "invalid_parameter");
MOTSS_DEFINE_ERROR(NotCanonical, "not_canonical");
MOTSS_DEFINE_ERROR(UnsupportedArity, "unsupported_arity");
MOTSS_DEFINE_ERROR(UnsupportedScalarization, "unsupported_scalarization");
MOTSS_DEFINE_ERROR(NotRealInterval, "not_real_interval");
MOTSS_DEFINE_ERROR(NotFiniteGrid, "not_finite_grid");
MOTSS_DEFINE_ERROR(ToleranceNotPositive, "tolerance_not_positive");
MOTSS_DEFINE_ERROR(DiscontinuousScalarization, "discontinuous_scalarization");
MOTSS_DEFINE_ERROR(NoSurfacePointFound, "no_surface_point_found");
MOTSS_DEFINE_ERROR(WitnessOffSurface, "witness_off_surface");
MOTSS_DEFINE_ERROR(BudgetExceeded, "budget_exceeded");
MOTSS_DEFINE_ERROR(EmptyFront, "empty_front");
MOTSS_DEFINE_ERROR(ParseError, "parse_error");
MOTSS_DEFINE_ERROR(ConfigError, "config_error");
MOTSS_DEFINE_ERROR(IoError, "io_error");

#undef MOTSS_DEFINE_ERROR

}  // namespace motss
