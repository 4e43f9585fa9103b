#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "theta.hpp"

using namespace thetakit;

namespace {

// Reference values at z = 0.3, q = 1/2 (50-digit evaluation).
constexpr double kRef[4] = {0.193513813064573143, 1.86968294990914367,
                            1.86972026353229279, 0.220824168094031577};

}  // namespace

TEST_CASE("theta series matches frozen reference values") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(theta_series(theta_kind_from_int(k), 0.3, 0.5) ==
          doctest::Approx(kRef[k - 1]).epsilon(1e-14));
  }
  CHECK(theta_series(ThetaKind::Three, 0.0, 0.5) ==
        doctest::Approx(2.12893682721187716).epsilon(1e-14));
  CHECK(theta_series(ThetaKind::Four, 0.0, 0.5) ==
        doctest::Approx(0.121124208002580502).epsilon(1e-13));
}

TEST_CASE("triple product agrees with the Fourier series") {
  for (int k = 1; k <= 4; ++k) {
    const auto kind = theta_kind_from_int(k);
    for (double q : {0.01, 0.2, 0.5, 0.8}) {
      for (double z : {-1.0, -0.3, 0.0, 0.4, 1.2}) {
        const double s = theta_series(kind, z, q);
        const double p = theta_product(kind, z, q);
        CHECK(std::fabs(s - p) < 1e-12 * std::fmax(1.0, std::fabs(s)));
      }
    }
  }
}

TEST_CASE("theta1 derivative") {
  CHECK(theta1_prime(0.0, 0.5) == doctest::Approx(0.548978532560340562).epsilon(1e-14));
  CHECK(theta1_prime(0.7, 0.1) == doctest::Approx(0.877233221882347454).epsilon(1e-14));
  // Jacobi: theta1' = theta2 theta3 theta4 at z = 0.
  for (double q : {0.05, 0.3, 0.6}) {
    const double prod = theta_series(ThetaKind::Two, 0.0, q) *
                        theta_series(ThetaKind::Three, 0.0, q) *
                        theta_series(ThetaKind::Four, 0.0, q);
    CHECK(theta1_prime(0.0, q) == doctest::Approx(prod).epsilon(1e-13));
  }
}

TEST_CASE("modular identities hold on a grid") {
  for (int k = 1; k <= 4; ++k) {
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (double z = -1.0; z <= 1.0001; z += 0.25) {
        const auto pair = modular_pair(theta_kind_from_int(k), z, t);
        CHECK(std::fabs(pair.lhs - pair.rhs) < 1e-13);
      }
    }
  }
}

TEST_CASE("theta domain errors") {
  CHECK_THROWS_AS(theta_series(ThetaKind::One, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(theta_series(ThetaKind::One, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(theta_kind_from_int(5), DomainError);
  CHECK_THROWS_AS(modular_pair(ThetaKind::Two, 0.0, -1.0), DomainError);
  CHECK_THROWS_AS(theta_series(ThetaKind::Three, 0.0, 0.999999, SeriesPolicy{1e-14, 10}),
                  NonConvergent);
}
