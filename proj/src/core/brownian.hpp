#pragma once

#include <random>

#include "series.hpp"

namespace thetakit {

enum class ProcessKind { Reflected, Killed };

// Images: reflection-principle Gaussian sums (and, for Green functions, the
// hyperbolic closed forms). Spectral: eigenfunction expansions.
enum class MethodKind { Images, Spectral };

struct DensityQuery {
  double t = 1.0;
  double x = 0.0;
  double y = 0.0;
};

/// Transition density of Brownian motion on [-1, 1], reflected or killed at
/// the endpoints, with respect to the speed measure 2 dy.
double density(ProcessKind proc, MethodKind method, const DensityQuery& query,
               const SeriesPolicy& policy = {});

/// The same density with respect to Lebesgue measure, i.e. 2 p.
double density_lebesgue(ProcessKind proc, MethodKind method,
                        const DensityQuery& query, const SeriesPolicy& policy = {});

/// Green function G_alpha(x, y) = int_0^inf e^{-alpha t} p(t; x, y) dt.
///
/// Images evaluates the hyperbolic closed form. Spectral evaluates the
/// eigenvalue sum; its 1/n^2 tail is removed by summing the 1/lambda and
/// 1/lambda^2 parts in closed form, leaving a 1/n^6 residual series.
double green(ProcessKind proc, MethodKind method, double alpha, double x,
             double y, const SeriesPolicy& policy = {});

/// P(H > t) for the exit time H of (-1, 1) started at 0.
double exit_survival(double t, const SeriesPolicy& policy = {});

/// Density of H.
double exit_density(MethodKind method, double t, const SeriesPolicy& policy = {});

/// Hitting time of 1 for a three-dimensional Bessel process started at 0.
double bessel3_hit_density(MethodKind method, double t,
                           const SeriesPolicy& policy = {});
double bessel3_hit_cdf(MethodKind method, double t, const SeriesPolicy& policy = {});
double bessel3_hit_laplace(double alpha);

enum class ExitScheme {
  // Euler steps plus the Brownian-bridge probability of having crossed a
  // barrier between two grid points.
  BridgeCorrected,
  // Euler steps, exit detected only at grid points (biased upward by
  // O(sqrt(dt))).
  PlainEuler,
};

inline constexpr long kMaxExitSteps = 10'000'000;

/// One simulated exit time of (-1, 1) for Brownian motion started at 0.
double mc_exit_sample(std::mt19937_64& rng, double dt,
                      ExitScheme scheme = ExitScheme::BridgeCorrected);

}  // namespace thetakit
