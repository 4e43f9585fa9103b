#include "theta.hpp"

#include <cmath>

namespace thetakit {

namespace {

void check_nome(double q, double z) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("nome q must lie in (0, 1)");
  }
  if (!std::isfinite(z)) {
    throw DomainError("argument z must be finite");
  }
}

}  // namespace

double theta_series(ThetaKind kind, double z, double q,
                    const SeriesPolicy& policy) {
  check_nome(q, z);
  require_policy(policy);
  const double log_q = std::log(q);
  // Consecutive envelopes shrink by q^(2n+1) <= q, so stopping once the
  // envelope falls below tol (1 - q) bounds the whole tail by tol.
  const double stop = policy.tol * (1.0 - q);

  switch (kind) {
    case ThetaKind::One:
    case ThetaKind::Two: {
      double sum = 0.0;
      for (int n = 0; n < policy.max_terms; ++n) {
        const double h = n + 0.5;
        const double envelope = 2.0 * std::exp(h * h * log_q);
        const double arg = (2.0 * n + 1.0) * z;
        if (kind == ThetaKind::One) {
          sum += ((n % 2 == 0) ? envelope : -envelope) * std::sin(arg);
        } else {
          sum += envelope * std::cos(arg);
        }
        if (envelope < stop) {
          return sum;
        }
      }
      break;
    }
    case ThetaKind::Three:
    case ThetaKind::Four: {
      double sum = 1.0;
      for (int n = 1; n <= policy.max_terms; ++n) {
        const double envelope = 2.0 * std::exp(double(n) * n * log_q);
        const double sign = (kind == ThetaKind::Four && n % 2 == 1) ? -1.0 : 1.0;
        sum += sign * envelope * std::cos(2.0 * n * z);
        if (envelope < stop) {
          return sum;
        }
      }
      break;
    }
  }
  throw_nonconvergent("theta_series", policy);
}

double theta_product(ThetaKind kind, double z, double q,
                     const SeriesPolicy& policy) {
  check_nome(q, z);
  require_policy(policy);
  const double cos2z = std::cos(2.0 * z);
  const double q2 = q * q;

  double prefactor = 1.0;
  double sign = 0.0;  // sign of the cross term 2 q^m cos 2z
  bool odd_powers = false;
  switch (kind) {
    case ThetaKind::One:
      prefactor = 2.0 * std::pow(q, 0.25) * std::sin(z);
      sign = -1.0;
      break;
    case ThetaKind::Two:
      prefactor = 2.0 * std::pow(q, 0.25) * std::cos(z);
      sign = 1.0;
      break;
    case ThetaKind::Three:
      sign = 1.0;
      odd_powers = true;
      break;
    case ThetaKind::Four:
      sign = -1.0;
      odd_powers = true;
      break;
  }
  if (prefactor == 0.0) {
    return 0.0;
  }

  double log_sum = 0.0;
  double q2n = 1.0;
  for (int n = 1; n <= policy.max_terms; ++n) {
    q2n *= q2;
    const double qm = odd_powers ? q2n / q : q2n;  // q^(2n-1) or q^(2n)
    const double cross = sign * 2.0 * qm * cos2z + qm * qm;
    log_sum += std::log1p(-q2n) + std::log1p(cross);
    // |log f_m| <= envelope_m / (1 - envelope_m) and envelopes shrink by at
    // least q^2 per factor; bound the relative tail, then scale to absolute.
    const double envelope = q2n + 2.0 * qm + qm * qm;
    if (envelope < 0.5) {
      const double tail = 2.0 * envelope * q2 / (1.0 - q2);
      if (tail * std::fabs(prefactor) * std::exp(log_sum) < policy.tol) {
        return prefactor * std::exp(log_sum);
      }
    }
  }
  throw_nonconvergent("theta_product", policy);
}

double theta1_prime(double z, double q, const SeriesPolicy& policy) {
  check_nome(q, z);
  require_policy(policy);
  const double log_q = std::log(q);
  double sum = 0.0;
  for (int n = 0; n < policy.max_terms; ++n) {
    const double h = n + 0.5;
    const double weight = 2.0 * n + 1.0;
    const double envelope = 2.0 * weight * std::exp(h * h * log_q);
    const double term = envelope * std::cos(weight * z);
    sum += (n % 2 == 0) ? term : -term;
    // Ratio of successive envelopes: (2n+3)/(2n+1) q^(2n+2).
    const double ratio = (weight + 2.0) / weight * std::exp((2.0 * n + 2.0) * log_q);
    if (ratio < 1.0 && envelope * ratio / (1.0 - ratio) < policy.tol) {
      return sum;
    }
  }
  throw_nonconvergent("theta1_prime", policy);
}

ModularPair modular_pair(ThetaKind kind, double z, double t,
                         const SeriesPolicy& policy) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("modular_pair needs t > 0");
  }
  if (!std::isfinite(z)) {
    throw DomainError("argument z must be finite");
  }
  const double q = std::exp(-kPi * t);
  const double root_t = std::sqrt(t);
  const double width = kPi * t;

  ModularPair out{};
  switch (kind) {
    case ThetaKind::One:
      // e^{-z^2/(pi t)} sinh((2n+1) z / t) e^{-pi (n+1/2)^2 / t} is half the
      // difference of two Gaussians centred at -+pi (n + 1/2).
      out.lhs = 0.5 * root_t * theta_series(kind, z, q, policy);
      out.rhs = 0.5 * gaussian_image_sum(0.5 * kPi - z, kPi, width, true,
                                         policy, "modular_pair rhs");
      break;
    case ThetaKind::Two:
      out.lhs = root_t * theta_series(kind, z, q, policy);
      out.rhs = gaussian_image_sum(z, kPi, width, true, policy, "modular_pair rhs");
      break;
    case ThetaKind::Three:
      out.lhs = root_t * theta_series(kind, z, q, policy);
      out.rhs = gaussian_image_sum(z, kPi, width, false, policy, "modular_pair rhs");
      break;
    case ThetaKind::Four:
      out.lhs = root_t * theta_series(kind, z, q, policy);
      out.rhs = gaussian_image_sum(z + 0.5 * kPi, kPi, width, false, policy,
                                   "modular_pair rhs");
      break;
  }
  return out;
}

}  // namespace thetakit
