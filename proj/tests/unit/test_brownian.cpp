#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <initializer_list>
#include <random>

#include "brownian.hpp"
#include "doctest.h"

using namespace thetakit;
using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::gauss_kronrod;

namespace {

constexpr ProcessKind kProcs[] = {ProcessKind::Reflected, ProcessKind::Killed};

double integrate_interval(const auto& f) {
  return gauss_kronrod<double, 61>::integrate(f, -1.0, 1.0, 15, 1e-14);
}

// Small times go through the image sum, where the spectral sum needs
// thousands of terms; both routes are checked equal elsewhere.
double p_any(ProcessKind proc, double t, double x, double y) {
  const auto method = t < 0.1 ? MethodKind::Images : MethodKind::Spectral;
  return density(proc, method, {t, x, y});
}

}  // namespace

TEST_CASE("densities against frozen values") {
  const DensityQuery q{1.0, 0.3, -0.2};
  CHECK(density(ProcessKind::Reflected, MethodKind::Images, q) ==
        doctest::Approx(0.231276709144723655).epsilon(1e-14));
  CHECK(density(ProcessKind::Killed, MethodKind::Spectral, q) ==
        doctest::Approx(0.121677284055972002).epsilon(1e-14));
  CHECK(density_lebesgue(ProcessKind::Killed, MethodKind::Images, q) ==
        doctest::Approx(2 * 0.121677284055972002).epsilon(1e-14));
}

TEST_CASE("spectral and image densities agree") {
  for (auto proc : kProcs) {
    for (double t : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (double x = -1.0; x <= 1.0001; x += 0.25) {
        for (double y = -1.0; y <= 1.0001; y += 0.25) {
          const double a = density(proc, MethodKind::Images, {t, x, y});
          const double b = density(proc, MethodKind::Spectral, {t, x, y});
          CHECK(std::fabs(a - b) < 1e-12);
          CHECK(a == density(proc, MethodKind::Images, {t, y, x}));
        }
      }
    }
  }
  CHECK(density(ProcessKind::Reflected, MethodKind::Spectral, {60.0, 0.2, 0.9}) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::fabs(density(ProcessKind::Killed, MethodKind::Images, {1.0, 0.0, 1.0})) < 1e-15);
  CHECK(std::fabs(density(ProcessKind::Killed, MethodKind::Spectral, {1.0, 0.0, -1.0})) < 1e-15);
}

TEST_CASE("mass, Chapman-Kolmogorov and killed survival") {
  for (double t : {0.1, 1.0, 3.0}) {
    for (double x : {-0.7, 0.0, 0.5}) {
      const double m = integrate_interval(
          [&](double y) { return 2.0 * p_any(ProcessKind::Reflected, t, x, y); });
      CHECK(std::fabs(m - 1.0) < 1e-10);
    }
    const double killed = integrate_interval(
        [&](double y) { return 2.0 * p_any(ProcessKind::Killed, t, 0.0, y); });
    CHECK(std::fabs(killed - exit_survival(t)) < 1e-10);
  }
  for (auto proc : kProcs) {
    const double x = 0.3;
    const double y = -0.6;
    const double lhs = integrate_interval([&](double z) {
      return density(proc, MethodKind::Spectral, {0.5, x, z}) *
             density(proc, MethodKind::Spectral, {0.5, z, y}) * 2.0;
    });
    CHECK(std::fabs(lhs - density(proc, MethodKind::Spectral, {1.0, x, y})) < 1e-8);
  }
}

TEST_CASE("Green function closed forms") {
  CHECK(green(ProcessKind::Reflected, MethodKind::Images, 0.5, 1.0, 1.0) ==
        doctest::Approx(1.0 / std::tanh(2.0)).epsilon(1e-14));
  CHECK(green(ProcessKind::Reflected, MethodKind::Images, 0.7, 0.4, -0.5) ==
        doctest::Approx(0.238419234795572512).epsilon(1e-14));
  CHECK(green(ProcessKind::Killed, MethodKind::Images, 0.7, -0.5, 0.4) ==
        doctest::Approx(0.0773139096276755750).epsilon(1e-14));
  CHECK(green(ProcessKind::Killed, MethodKind::Images, 1e-10, 0.2, -0.4) ==
        doctest::Approx(0.8 * 0.6 / 2).epsilon(1e-9));
  CHECK(std::isfinite(green(ProcessKind::Reflected, MethodKind::Images, 1e6, 0.0, 0.0)));
  CHECK_THROWS_AS(green(ProcessKind::Killed, MethodKind::Images, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("accelerated spectral Green sum matches the closed form") {
  for (auto proc : kProcs) {
    for (double alpha : {0.1, 0.5, 1.0, 4.0, 20.0}) {
      for (double x = -1.0; x <= 1.0001; x += 0.5) {
        for (double y = -1.0; y <= 1.0001; y += 0.5) {
          const double a = green(proc, MethodKind::Images, alpha, x, y);
          const double b = green(proc, MethodKind::Spectral, alpha, x, y);
          CHECK(std::fabs(a - b) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("Laplace transform of the density is the Green function") {
  for (auto proc : kProcs) {
    for (double alpha : {0.5, 2.0}) {
      const double x = 0.25;
      const double y = -0.4;
      exp_sinh<double> integrator;
      const double lt = integrator.integrate(
          [&](double t) { return std::exp(-alpha * t) * p_any(proc, t, x, y); }, 1e-12);
      CHECK(std::fabs(lt - green(proc, MethodKind::Images, alpha, x, y)) < 1e-7);
    }
  }
}

TEST_CASE("exit time laws") {
  CHECK(exit_survival(1.0) == doctest::Approx(0.370777429799523905).epsilon(1e-14));
  CHECK(exit_survival(0.02) == doctest::Approx(0.99999999999692508).epsilon(1e-14));
  // Both survival routes around the switch point.
  CHECK(std::fabs(exit_survival(0.0499999) - exit_survival(0.05)) < 1e-6);
  CHECK(exit_density(MethodKind::Spectral, 1.0) ==
        doctest::Approx(0.457365225633919932).epsilon(1e-14));
  for (double t : {0.05, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    CHECK(std::fabs(exit_density(MethodKind::Spectral, t) - exit_density(MethodKind::Images, t)) <
          1e-12);
  }
  exp_sinh<double> integrator;
  const double alpha = 0.5;
  const double lt = integrator.integrate(
      [&](double t) { return alpha * std::exp(-alpha * t) * exit_survival(t); }, 1e-12);
  CHECK(lt == doctest::Approx(1.0 - 1.0 / std::cosh(1.0)).epsilon(1e-10));
  const double total = integrator.integrate(
      [&](double t) {
        return exit_density(t < 0.5 ? MethodKind::Images : MethodKind::Spectral, t);
      },
      1e-12);
  CHECK(std::fabs(total - 1.0) < 1e-10);
  const double t = 10.0;
  const double lead = kPi / 2.0 * std::exp(-kPi * kPi * t / 8.0);
  CHECK(std::fabs(exit_density(MethodKind::Spectral, t) / lead - 1.0) < 1e-8);
}

TEST_CASE("Bessel(3) hitting time") {
  CHECK(bessel3_hit_density(MethodKind::Spectral, 1.0) ==
        doctest::Approx(0.0709809380046486848).epsilon(1e-13));
  CHECK(bessel3_hit_cdf(MethodKind::Spectral, 0.5) ==
        doctest::Approx(0.830493500976424635).epsilon(1e-14));
  for (double t : {0.05, 0.25, 1.0, 4.0}) {
    CHECK(std::fabs(bessel3_hit_density(MethodKind::Spectral, t) -
                    bessel3_hit_density(MethodKind::Images, t)) < 1e-12);
    CHECK(std::fabs(bessel3_hit_cdf(MethodKind::Spectral, t) -
                    bessel3_hit_cdf(MethodKind::Images, t)) < 1e-12);
  }
  CHECK(bessel3_hit_laplace(0.0) == 1.0);
  CHECK(bessel3_hit_laplace(0.5) == doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-15));
  exp_sinh<double> integrator;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double lt = integrator.integrate(
        [&](double t) {
          return std::exp(-alpha * t) *
                 bessel3_hit_density(t < 0.3 ? MethodKind::Images : MethodKind::Spectral, t);
        },
        1e-12);
    CHECK(std::fabs(lt - bessel3_hit_laplace(alpha)) < 1e-8);
  }
  const double t = 0.05;
  const double lead = 2.0 / (t * t * std::sqrt(2.0 * kPi * t)) * (1.0 - t) * std::exp(-1.0 / (2.0 * t));
  CHECK(bessel3_hit_density(MethodKind::Images, t) == doctest::Approx(lead).epsilon(1e-8));
}

TEST_CASE("Monte Carlo exit time") {
  std::mt19937_64 rng(20240611);
  const int n = 20000;
  double sum = 0.0;
  double sum_sq = 0.0;
  int survived = 0;
  for (int i = 0; i < n; ++i) {
    const double h = mc_exit_sample(rng, 1e-3);
    sum += h;
    sum_sq += h * h;
    survived += h > 1.0;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::fabs(mean - 1.0) < 3.0 * se);
  const double p = double(survived) / n;
  const double p_se = std::sqrt(p * (1 - p) / n);
  CHECK(std::fabs(p - exit_survival(1.0)) < 3.0 * p_se);
  CHECK_THROWS_AS(mc_exit_sample(rng, 0.0), DomainError);
}
