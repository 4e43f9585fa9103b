#pragma once

namespace thetakit {

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1.
double ellip_k(double k);

/// Complete elliptic integral of the second kind E(k), 0 <= k <= 1.
double ellip_e(double k);

/// A modulus k together with its complement and the four complete integrals.
///
/// K and E are computed from AGM(1, k') and K', E' from AGM(1, k), so both
/// halves stay accurate when either modulus is tiny.
struct EllipticModulus {
  double k = 0.0;
  double k_prime = 0.0;
  double bigK = 0.0;
  double bigK_prime = 0.0;
  double bigE = 0.0;
  double bigE_prime = 0.0;
  // K - E and K' - E', kept separately to avoid cancellation for small k.
  double bigK_minus_E = 0.0;
  double bigK_minus_E_prime = 0.0;

  static EllipticModulus from_k(double k);
  // Both values must satisfy k^2 + k'^2 = 1; no check beyond the range.
  static EllipticModulus from_pair(double k, double k_prime);

  // K(k') / K(k).
  double lattice() const { return bigK_prime / bigK; }
  EllipticModulus complement() const;
};

/// K E' + K' E - K K' - pi/2; zero up to rounding.
double legendre_defect(const EllipticModulus& m);

/// The unique k with K(k')/K(k) = c.
EllipticModulus modulus_from_lattice(double c);

/// c = K(k')/K(k).
double lattice_from_modulus(double k);

/// q = exp(-pi K(k')/K(k)).
double nome_from_modulus(double k);

/// Ascending Landen map k -> 2 sqrt(k) / (1 + k); halves the lattice parameter.
double landen_ascend(double k);
/// The same step on a modulus pair; k' is carried without cancellation.
EllipticModulus landen_ascend(const EllipticModulus& m);

}  // namespace thetakit
