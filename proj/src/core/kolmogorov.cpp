#include "kolmogorov.hpp"

#include <cmath>
#include <vector>

#include "elliptic.hpp"

namespace thetakit {

namespace {

void check_h(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("kolmogorov: h must be finite and > 0");
  }
}

EllipticModulus modulus_for(double h) { return modulus_from_lattice(2.0 * h * h / kPi); }

double alternate(long n, double v) { return (n % 2 == 0) ? v : -v; }

}  // namespace

double kolmogorov_cdf(double h, KolmogorovRoute route, const SeriesPolicy& policy) {
  check_h(h);
  require_policy(policy);
  const double a = 2.0 * h * h;
  switch (route) {
    case KolmogorovRoute::Series: {
      auto envelope = [&](long n) {
        return 2.0 * std::exp(-a * static_cast<double>(n) * static_cast<double>(n));
      };
      auto term = [&](long n) { return alternate(n, envelope(n)); };
      return 1.0 + sum_until_tail_below(1, term, envelope, policy, "kolmogorov_cdf (series)");
    }
    case KolmogorovRoute::Product: {
      const double q = std::exp(-a);
      double log_sum = 0.0;
      double qn = 1.0;
      for (int n = 1; n <= policy.max_terms; ++n) {
        qn *= q;
        log_sum += std::log1p(-qn) - std::log1p(qn);
        // Each remaining log factor is at most 2 q^m / (1 - q^m) in size.
        const double tail = 2.0 * qn * q / ((1.0 - q) * (1.0 - qn * q));
        if (qn < 0.5 && tail * std::exp(log_sum) < policy.tol) {
          return std::exp(log_sum);
        }
      }
      throw_nonconvergent("kolmogorov_cdf (product)", policy);
    }
    case KolmogorovRoute::Elliptic: {
      const auto m = modulus_for(h);
      return std::sqrt(2.0 / kPi * m.k_prime * m.bigK);
    }
  }
  return 0.0;
}

double kolmogorov_pdf(double h, KolmogorovRoute route, const SeriesPolicy& policy) {
  check_h(h);
  require_policy(policy);
  const double a = 2.0 * h * h;
  switch (route) {
    case KolmogorovRoute::Series: {
      auto envelope = [&](long n) {
        const double nd = static_cast<double>(n);
        return 8.0 * h * nd * nd * std::exp(-a * nd * nd);
      };
      auto term = [&](long n) { return alternate(n + 1, envelope(n)); };
      return sum_until_tail_below(1, term, envelope, policy, "kolmogorov_pdf (series)");
    }
    case KolmogorovRoute::Elliptic: {
      const auto m = modulus_for(h);
      return 4.0 / (kPi * kPi) * std::sqrt(m.k_prime) * m.bigK * std::sqrt(m.bigK_prime) *
             m.bigK_minus_E;
    }
    case KolmogorovRoute::Product:
      break;
  }
  throw DomainError("kolmogorov_pdf: routes are series and elliptic");
}

double kolmogorov_pdf_as_printed(double h) {
  check_h(h);
  const auto m = modulus_for(h);
  const double K = m.bigK;
  const double Kp = m.bigK_prime;
  return 1.0 / (kPi * kPi) * (K / Kp) / std::sqrt(Kp) *
         (0.5 * std::sqrt(m.k_prime * Kp) - m.bigE_prime * K / std::sqrt(2.0 * kPi));
}

double mc_bridge_sup_sample(std::mt19937_64& rng, long n_steps) {
  if (n_steps < 1) {
    throw DomainError("mc_bridge_sup_sample: n_steps must be >= 1");
  }
  const double dt = 1.0 / static_cast<double>(n_steps);
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));
  std::vector<double> walk(static_cast<std::size_t>(n_steps) + 1, 0.0);
  for (long i = 1; i <= n_steps; ++i) {
    walk[static_cast<std::size_t>(i)] = walk[static_cast<std::size_t>(i - 1)] + normal(rng);
  }
  const double end = walk.back();
  double sup = 0.0;
  for (long i = 1; i < n_steps; ++i) {
    const double b = walk[static_cast<std::size_t>(i)] - static_cast<double>(i) * dt * end;
    sup = std::max(sup, std::fabs(b));
  }
  return sup;
}

}  // namespace thetakit
