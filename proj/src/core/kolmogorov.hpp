#pragma once

#include <random>

#include "series.hpp"

namespace thetakit {

enum class KolmogorovRoute { Series, Product, Elliptic };

/// F(h) = P(sup |W| < h) for a standard Brownian bridge W on [0, 1].
///
/// Series: sum (-1)^n e^{-2 n^2 h^2} (loses accuracy to cancellation for
/// h below about 0.3). Product: prod (1 - q^n)/(1 + q^n), q = e^{-2h^2}.
/// Elliptic: sqrt((2/pi) k' K(k)) with K(k')/K(k) = 2h^2/pi.
double kolmogorov_cdf(double h, KolmogorovRoute route, const SeriesPolicy& policy = {});

/// F'(h). Series: -4h sum n^2 (-1)^n e^{-2 n^2 h^2}. Elliptic:
/// (4/pi^2) sqrt(k') K sqrt(K') (K - E). Product is not a pdf route.
double kolmogorov_pdf(double h, KolmogorovRoute route, const SeriesPolicy& policy = {});

/// The elliptic density in the form
/// (1/pi^2) (K/K') K'^{-1/2} (sqrt(k' K')/2 - E' K / sqrt(2 pi)).
/// It does not match F'; kept to quantify the discrepancy.
double kolmogorov_pdf_as_printed(double h);

/// max |W_i| over a Brownian bridge sampled at n_steps equal steps, built
/// as S_i - (i/n) S_n from a Gaussian random walk S.
double mc_bridge_sup_sample(std::mt19937_64& rng, long n_steps);

}  // namespace thetakit
