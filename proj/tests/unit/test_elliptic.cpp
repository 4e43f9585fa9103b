#include <cmath>
#include <initializer_list>
#include <numbers>

#include "doctest.h"
#include "elliptic.hpp"
#include "errors.hpp"
#include "reference_tables.hpp"

using namespace thetakit;

TEST_CASE("complete integrals against frozen values") {
  const double k = std::sqrt(0.5);
  CHECK(ellip_k(k) == doctest::Approx(1.85407467730137192).epsilon(1e-15));
  CHECK(ellip_e(k) == doctest::Approx(1.35064388104767551).epsilon(1e-15));
  CHECK(ellip_k(0.9) == doctest::Approx(2.28054913842277033).epsilon(1e-15));
  CHECK(ellip_e(0.9) == doctest::Approx(1.17169705278161410).epsilon(1e-15));
  CHECK(ellip_k(0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(ellip_e(1.0) == 1.0);
  CHECK_THROWS_AS(ellip_k(1.0), DomainError);
}

TEST_CASE("modulus from lattice parameter") {
  CHECK(modulus_from_lattice(2.0).k == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(modulus_from_lattice(0.5).k == doctest::Approx(0.985171431009416039).epsilon(1e-14));
  CHECK(modulus_from_lattice(0.05).k_prime ==
        doctest::Approx(9.08440427329639120e-14).epsilon(1e-10));
  CHECK(modulus_from_lattice(20.0).k == doctest::Approx(9.08440427329637535e-14).epsilon(1e-10));
  CHECK(modulus_from_lattice(100.0).k == doctest::Approx(2.41680883132962767e-68).epsilon(1e-9));
  for (double c : {0.1, 0.3, 1.0, 1.7, 6.0, 40.0}) {
    CHECK(modulus_from_lattice(c).lattice() == doctest::Approx(c).epsilon(1e-13));
  }
}

TEST_CASE("Legendre relation and complement") {
  for (double k : {1e-8, 0.01, 0.3, std::sqrt(0.5), 0.9, 0.999999}) {
    const auto m = EllipticModulus::from_k(k);
    CHECK(std::fabs(legendre_defect(m)) < 1e-13);
    CHECK(m.complement().complement().k == m.k);
  }
}

TEST_CASE("Landen ascent halves the lattice parameter") {
  for (double c : {0.5, 1.0, 3.0}) {
    const auto m = modulus_from_lattice(c);
    CHECK(lattice_from_modulus(landen_ascend(m.k)) == doctest::Approx(c / 2).epsilon(1e-12));
  }
}

TEST_CASE("singular values satisfy K'/K = sqrt(r)") {
  for (int r = kSingularMin; r <= kSingularMax; ++r) {
    const auto v = singular_reference(r);
    const auto m = EllipticModulus::from_k(v.k_r);
    CHECK(m.lattice() == doctest::Approx(std::sqrt(r)).epsilon(1e-13));
    CHECK(m.bigK == doctest::Approx(v.bigK_r).epsilon(1e-13));
    // Singular value function: alpha(r) = E/K - pi/(4 K^2) ... in the form
    // alpha = (pi / (4 K^2) + sqrt(r) (1 - E/K)).
    const double alpha = std::numbers::pi / (4.0 * m.bigK * m.bigK) + std::sqrt(r) * (1.0 - m.bigE / m.bigK);
    CHECK(alpha == doctest::Approx(v.alpha_r).epsilon(1e-12));
  }
  CHECK_THROWS_AS(singular_reference(11), DomainError);
}
