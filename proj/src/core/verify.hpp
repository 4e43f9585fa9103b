#pragma once

#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace thetakit {

/// Outcome of one grid-evaluated identity check.
struct VerificationReport {
  std::string name;
  std::string description;
  std::vector<std::string> axes;             // coordinate names of a grid point
  std::vector<std::vector<double>> grid;     // evaluation points
  double max_defect = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::vector<double> worst;                 // point attaining max_defect
};

enum class HyperbolicKind { Coth, Csch, Tanh, Sech };

/// n_terms-partial sum of the partial-fraction expansion of coth, csch,
/// tanh or sech (coth and csch include the leading 1/z).
double ml_partial(HyperbolicKind kind, double z, long n_terms);

/// The same partial sum with its tail removed: Euler-Maclaurin for the
/// positive coth/tanh series, averaging of consecutive partial sums for the
/// alternating csch/sech series.
double ml_accelerated(HyperbolicKind kind, double z, long n_terms);

/// Exact hyperbolic value the expansions converge to.
double ml_direct(HyperbolicKind kind, double z);

/// Every registered identity label, in suite order.
std::vector<std::string> identity_names();

/// Runs the named checks ("all" expands to the full registry). A given tol
/// overrides every identity's default tolerance. Defects are reported, never
/// thrown; unknown labels throw UnknownIdentity before anything runs.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& names,
                                          std::optional<double> tol = std::nullopt,
                                          const SeriesPolicy& policy = {});

}  // namespace thetakit
