#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "acx/types.hpp"

namespace acx {

struct AcxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spectral norm of A reached 1 at some point of the chart ball.
struct NormTooLarge : AcxError {
  NormTooLarge(const std::string& what, CVector at, double norm_value)
      : AcxError(what), point(std::move(at)), norm(norm_value) {}
  CVector point;
  double norm;
};

struct SingularDenominator : AcxError {
  explicit SingularDenominator(CVector at)
      : AcxError("pushforward denominator is singular"), point(std::move(at)) {}
  CVector point;
};

struct InverseDiverged : AcxError {
  using AcxError::AcxError;
};

struct NoConvergence : AcxError {
  NoConvergence(const std::string& what, std::vector<double> history)
      : AcxError(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

struct IterateLeftChart : AcxError {
  IterateLeftChart(CVector at, double radius)
      : AcxError("disc iterate left the chart ball"), point(std::move(at)), chart_radius(radius) {}
  CVector point;
  double chart_radius;
};

struct EvaluationTooCloseToBoundary : AcxError {
  using AcxError::AcxError;
};

struct DomainError : AcxError {
  using AcxError::AcxError;
};

struct EmptyShell : AcxError {
  EmptyShell(double at_scale)
      : AcxError("approach-region sampler found no point at scale " + std::to_string(at_scale)),
        scale(at_scale) {}
  double scale;
};

struct TotallyRealFailure : AcxError {
  TotallyRealFailure(CVector at, double sigma)
      : AcxError("slice tangent space contains a complex direction"),
        point(std::move(at)),
        smallest_singular_value(sigma) {}
  CVector point;
  double smallest_singular_value;
};

/// Malformed scenario / chart / field specification. `where` points at the
/// offending key.
struct SpecError : AcxError {
  SpecError(const std::string& what, std::string key)
      : AcxError(what), where(std::move(key)) {}
  std::string where;
};

}  // namespace acx
