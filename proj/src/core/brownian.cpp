#include "brownian.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace thetakit {

namespace {

constexpr double kEigenScale = kPi * kPi / 8.0;  // lambda_n = n^2 pi^2 / 8

void check_time(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + ": t must be finite and > 0");
  }
}

void check_query(const DensityQuery& q) {
  check_time(q.t, "density");
  if (!(std::fabs(q.x) <= 1.0) || !(std::fabs(q.y) <= 1.0)) {
    throw DomainError("density: x and y must lie in [-1, 1]");
  }
}

double alternate(long n, double v) { return (n % 2 == 0) ? v : -v; }

// sum_{n>=1} cos(n theta) / n^2 and / n^4 for theta in [0, 2 pi].
double cos_sum_2(double theta) {
  return kPi * kPi / 6.0 - kPi * theta / 2.0 + theta * theta / 4.0;
}

double cos_sum_4(double theta) {
  const double t2 = theta * theta;
  const double pi2 = kPi * kPi;
  return pi2 * pi2 / 90.0 - pi2 * t2 / 12.0 + kPi * t2 * theta / 12.0 - t2 * t2 / 48.0;
}

double green_closed(ProcessKind proc, double alpha, double x, double y) {
  // y <= x; cosh(a s) cosh(b s) / (s sinh 2s) resp. sinh sinh, scaled by
  // e^{-(a+b)s} so nothing overflows for large alpha.
  const double s = std::sqrt(2.0 * alpha);
  const double a = 1.0 - x;
  const double b = 1.0 + y;
  const double scale = std::exp((a + b - 2.0) * s);
  const double denom = 2.0 * s * (-std::expm1(-4.0 * s));
  if (proc == ProcessKind::Reflected) {
    return scale * (1.0 + std::exp(-2.0 * a * s)) * (1.0 + std::exp(-2.0 * b * s)) / denom;
  }
  return scale * (-std::expm1(-2.0 * a * s)) * (-std::expm1(-2.0 * b * s)) / denom;
}

double green_spectral(ProcessKind proc, double alpha, double x, double y,
                      const SeriesPolicy& policy) {
  const double A = kPi * (x + 1.0) / 2.0;
  const double B = kPi * (y + 1.0) / 2.0;
  const double sign = proc == ProcessKind::Reflected ? 1.0 : -1.0;
  // cos nA cos nB = (cos n(A-B) + cos n(A+B)) / 2; sin sin has a minus sign.
  const double d = std::fabs(A - B);
  const double s = A + B;
  const double inv_lambda = 8.0 / (kPi * kPi);
  const double sum_1 = inv_lambda * 0.5 * (cos_sum_2(d) + sign * cos_sum_2(s));
  const double sum_2 = inv_lambda * inv_lambda * 0.5 * (cos_sum_4(d) + sign * cos_sum_4(s));

  // 1/(alpha + l) = 1/l - alpha/l^2 + alpha^2 / (l^2 (alpha + l)).
  double residual = 0.0;
  const double a2 = alpha * alpha;
  const double k3 = inv_lambda * inv_lambda * inv_lambda;
  bool done = false;
  for (long n = 1; n <= policy.max_terms; ++n) {
    const double lambda = kEigenScale * static_cast<double>(n) * static_cast<double>(n);
    const double w = proc == ProcessKind::Reflected ? std::cos(n * A) * std::cos(n * B)
                                                    : std::sin(n * A) * std::sin(n * B);
    residual += w / (lambda * lambda * (alpha + lambda));
    // Remaining tail below alpha^2 (8/pi^2)^3 sum_{m>n} m^-6 <= ... / (5 n^5).
    const double nd = static_cast<double>(n);
    if (a2 * k3 / (5.0 * nd * nd * nd * nd * nd) < policy.tol) {
      done = true;
      break;
    }
  }
  if (!done) {
    throw_nonconvergent("green (spectral)", policy);
  }
  const double series = sum_1 - alpha * sum_2 + a2 * residual;
  if (proc == ProcessKind::Reflected) {
    return 0.5 * (1.0 / (2.0 * alpha) + series);
  }
  return 0.5 * series;
}

}  // namespace

double density(ProcessKind proc, MethodKind method, const DensityQuery& query,
               const SeriesPolicy& policy) {
  check_query(query);
  require_policy(policy);
  const double t = query.t;
  const double x = query.x;
  const double y = query.y;
  const double sign = proc == ProcessKind::Reflected ? 1.0 : -1.0;

  if (method == MethodKind::Images) {
    const double direct = gaussian_image_sum(x - y, 4.0, 2.0 * t, false, policy, "density (images)");
    const double mirrored =
        gaussian_image_sum(x + y + 2.0, 4.0, 2.0 * t, false, policy, "density (images)");
    return 0.5 / std::sqrt(2.0 * kPi * t) * (direct + sign * mirrored);
  }

  const double A = kPi * (x + 1.0) / 2.0;
  const double B = kPi * (y + 1.0) / 2.0;
  auto envelope = [&](long n) {
    return std::exp(-kEigenScale * static_cast<double>(n) * static_cast<double>(n) * t);
  };
  auto term = [&](long n) {
    const double nd = static_cast<double>(n);
    const double w = proc == ProcessKind::Reflected ? std::cos(nd * A) * std::cos(nd * B)
                                                    : std::sin(nd * A) * std::sin(nd * B);
    return envelope(n) * w;
  };
  const double sum = sum_until_tail_below(1, term, envelope, policy, "density (spectral)");
  return proc == ProcessKind::Reflected ? 0.5 * (0.5 + sum) : 0.5 * sum;
}

double density_lebesgue(ProcessKind proc, MethodKind method,
                        const DensityQuery& query, const SeriesPolicy& policy) {
  return 2.0 * density(proc, method, query, policy);
}

double green(ProcessKind proc, MethodKind method, double alpha, double x,
             double y, const SeriesPolicy& policy) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("green: alpha must be finite and > 0");
  }
  if (!(std::fabs(x) <= 1.0) || !(std::fabs(y) <= 1.0)) {
    throw DomainError("green: x and y must lie in [-1, 1]");
  }
  require_policy(policy);
  if (y > x) {
    std::swap(x, y);
  }
  if (method == MethodKind::Images) {
    return green_closed(proc, alpha, x, y);
  }
  return green_spectral(proc, alpha, x, y, policy);
}

double exit_survival(double t, const SeriesPolicy& policy) {
  check_time(t, "exit_survival");
  require_policy(policy);
  if (t >= 0.05) {
    auto envelope = [&](long n) {
      const double m = 2.0 * static_cast<double>(n) + 1.0;
      return 4.0 / (m * kPi) * std::exp(-m * m * kEigenScale * t);
    };
    auto term = [&](long n) { return alternate(n, envelope(n)); };
    return sum_until_tail_below(0, term, envelope, policy, "exit_survival");
  }
  // Small t: integrate the killed image density over [-1, 1]. Gaussians of
  // variance t centred at 4n count +1, those centred at 4n + 2 count -1.
  const double scale = 1.0 / std::sqrt(2.0 * t);
  auto mass = [&](double centre) {
    return 0.5 * (std::erf((1.0 - centre) * scale) - std::erf((-1.0 - centre) * scale));
  };
  double sum = mass(0.0);
  for (long n = 0; n < policy.max_terms; ++n) {
    const double m = 4.0 * static_cast<double>(n);
    const double add = (n > 0 ? mass(m) + mass(-m) : 0.0) - mass(m + 2.0) - mass(-m - 2.0);
    sum += add;
    // Beyond this ring every centre is at distance >= m + 3 from [-1, 1].
    const double far = (m + 3.0) * scale;
    if (std::erfc(far) < policy.tol) {
      return sum;
    }
  }
  throw_nonconvergent("exit_survival (images)", policy);
}

double exit_density(MethodKind method, double t, const SeriesPolicy& policy) {
  check_time(t, "exit_density");
  require_policy(policy);
  if (method == MethodKind::Spectral) {
    auto envelope = [&](long n) {
      const double m = 2.0 * static_cast<double>(n) + 1.0;
      return kPi / 2.0 * m * std::exp(-m * m * kEigenScale * t);
    };
    auto term = [&](long n) { return alternate(n, envelope(n)); };
    return sum_until_tail_below(0, term, envelope, policy, "exit_density (spectral)");
  }
  // Log space: for tiny t the prefactor overflows before the Gaussian
  // underflows.
  const double log_pre = std::log(2.0) - 0.5 * std::log(2.0 * kPi) - 1.5 * std::log(t);
  auto envelope = [&](long n) {
    const double m = 2.0 * static_cast<double>(n) + 1.0;
    return std::exp(log_pre + std::log(m) - m * m / (2.0 * t));
  };
  auto term = [&](long n) { return alternate(n, envelope(n)); };
  return sum_until_tail_below(0, term, envelope, policy, "exit_density (images)");
}

double bessel3_hit_density(MethodKind method, double t, const SeriesPolicy& policy) {
  check_time(t, "bessel3_hit_density");
  require_policy(policy);
  if (method == MethodKind::Spectral) {
    auto envelope = [&](long n) {
      const double a = static_cast<double>(n) * static_cast<double>(n) * kPi * kPi / 2.0;
      return 2.0 * a * std::exp(-a * t);
    };
    auto term = [&](long n) { return alternate(n + 1, envelope(n)); };
    return sum_until_tail_below(1, term, envelope, policy, "bessel3_hit_density (spectral)");
  }
  const double log_pre = std::log(2.0) - 0.5 * std::log(2.0 * kPi) - 2.5 * std::log(t);
  auto weighted = [&](long n, double shift) {
    const double m = 2.0 * static_cast<double>(n) + 1.0;
    const double w = m * m + shift;
    const double mag = std::exp(log_pre + std::log(std::fabs(w)) - m * m / (2.0 * t));
    return w < 0.0 ? -mag : mag;
  };
  auto envelope = [&](long n) { return weighted(n, t); };
  auto term = [&](long n) { return weighted(n, -t); };
  return sum_until_tail_below(0, term, envelope, policy, "bessel3_hit_density (images)");
}

double bessel3_hit_cdf(MethodKind method, double t, const SeriesPolicy& policy) {
  check_time(t, "bessel3_hit_cdf");
  require_policy(policy);
  if (method == MethodKind::Spectral) {
    auto envelope = [&](long n) {
      return 2.0 * std::exp(-static_cast<double>(n) * static_cast<double>(n) * kPi * kPi * t / 2.0);
    };
    auto term = [&](long n) { return alternate(n, envelope(n)); };
    return 1.0 + sum_until_tail_below(1, term, envelope, policy, "bessel3_hit_cdf (spectral)");
  }
  const double log_pre = std::log(4.0) - 0.5 * std::log(2.0 * kPi * t);
  auto envelope = [&](long n) {
    const double m = 2.0 * static_cast<double>(n) + 1.0;
    return std::exp(log_pre - m * m / (2.0 * t));
  };
  return sum_until_tail_below(0, envelope, envelope, policy, "bessel3_hit_cdf (images)");
}

double bessel3_hit_laplace(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("bessel3_hit_laplace: alpha must be finite and >= 0");
  }
  if (alpha == 0.0) {
    return 1.0;
  }
  const double s = std::sqrt(2.0 * alpha);
  return 2.0 * s * std::exp(-s) / (-std::expm1(-2.0 * s));
}

double mc_exit_sample(std::mt19937_64& rng, double dt, ExitScheme scheme) {
  if (!(dt > 0.0) || !(dt < 1.0)) {
    throw DomainError("mc_exit_sample: dt must lie in (0, 1)");
  }
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double x = 0.0;
  for (long step = 1; step <= kMaxExitSteps; ++step) {
    const double next = x + normal(rng);
    const double t = static_cast<double>(step) * dt;
    if (std::fabs(next) >= 1.0) {
      return t;
    }
    if (scheme == ExitScheme::BridgeCorrected) {
      const double up = std::exp(-2.0 * (1.0 - x) * (1.0 - next) / dt);
      const double down = std::exp(-2.0 * (1.0 + x) * (1.0 + next) / dt);
      if (uniform(rng) < up + down - up * down) {
        return t;
      }
    }
    x = next;
  }
  throw NonConvergent("mc_exit_sample: no exit within " + std::to_string(kMaxExitSteps) + " steps");
}

}  // namespace thetakit
