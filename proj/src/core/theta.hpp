#pragma once

#include "series.hpp"

namespace thetakit {

/// Jacobi theta functions of real argument z and real nome q in (0, 1), by
/// their Fourier series.
double theta_series(ThetaKind kind, double z, double q,
                    const SeriesPolicy& policy = {});

/// The same functions through Jacobi's triple-product representation,
/// accumulated as a sum of log-factors.
double theta_product(ThetaKind kind, double z, double q,
                     const SeriesPolicy& policy = {});

/// d/dz theta_1(z, q), by the term-wise differentiated Fourier series.
double theta1_prime(double z, double q, const SeriesPolicy& policy = {});

struct ModularPair {
  double lhs;
  double rhs;
};

/// Both sides of the real form (tau = i t) of a modular identity.
///
/// lhs is the sqrt(t)-weighted trigonometric series in the nome exp(-pi t);
/// rhs is the Gaussian image sum over the lattice pi Z (shifted by pi/2 for
/// kinds 1 and 4). For kind 1 both sides are half of theta_1, matching the
/// sum over n >= 0 in the sine/sinh form.
ModularPair modular_pair(ThetaKind kind, double z, double t,
                         const SeriesPolicy& policy = {});

}  // namespace thetakit
