#pragma once

#include <random>
#include <vector>

#include "elliptic.hpp"
#include "series.hpp"

namespace thetakit {

enum class Family { Theta2, Theta3 };

enum class VarianceRoute { Elliptic, Lambert, Direct };

enum class CumulantRoute { Lambert, Eisenstein };

/// Discrete Gaussian law on Z with weights exp(-c pi (n + s)^2), where s = 1/2
/// for the theta_2 family and s = 0 for theta_3.
///
/// Immutable after construction. The modulus k with K(k')/K(k) = c and the
/// truncated support weights are computed once.
class ThetaDistribution {
 public:
  ThetaDistribution(Family family, double c);
  static ThetaDistribution from_modulus(Family family, double k);
  static ThetaDistribution from_elliptic(Family family, const EllipticModulus& m);

  Family family() const { return family_; }
  const LatticeParam& lattice() const { return lattice_; }
  double c() const { return lattice_.c(); }
  const EllipticModulus& modulus() const { return modulus_; }
  // theta_2(0, q) or theta_3(0, q).
  double norm() const { return norm_; }

  // Effective support is [-N - 1, N]; mass outside is below 1e-19.
  long support_bound() const { return bound_; }
  long support_min() const { return -bound_ - 1; }
  long support_max() const { return bound_; }

  double pmf(long n) const;
  // Same weights, normalized by Jacobi's identity sqrt((2/pi) K) resp.
  // sqrt((2/pi) k K) and with c = K'/K.
  double pmf_elliptic(long n) const;

  double mean() const;
  double mean_direct() const;
  double variance(VarianceRoute route, const SeriesPolicy& policy = {}) const;

  /// kappa_order of X; order 1 is the mean.
  double cumulant(int order, CumulantRoute route, const SeriesPolicy& policy = {}) const;
  /// Cumulants of X + 1 for theta_2 (kappa_1 = +1/2), of X for theta_3.
  double shifted_cumulant(int order, CumulantRoute route,
                          const SeriesPolicy& policy = {}) const;

  /// E[e^{zX}]; throws Overflow when the value is not representable.
  double mgf(double z, const SeriesPolicy& policy = {}) const;

  double centered_moment(int order) const;

  /// E[(-1)^X]: 0 for theta_2, sqrt(k') for theta_3.
  double signed_mean() const;
  double signed_mean_direct() const;
  double odd_probability() const;

  double entropy_direct() const;

  /// Inverse-CDF draw, walking outward from the mode.
  long sample_exact(std::mt19937_64& rng) const;
  /// Draw through the Bernoulli-pair representation, truncated once the
  /// remaining pairs are nonzero with total probability below policy.tol.
  long sample_bernoulli(std::mt19937_64& rng, const SeriesPolicy& policy = {}) const;
  /// Number of Bernoulli pairs sample_bernoulli uses at this tolerance.
  long bernoulli_pairs(const SeriesPolicy& policy = {}) const;

 private:
  ThetaDistribution(Family family, const LatticeParam& lattice,
                    const EllipticModulus& modulus);

  double shift() const { return family_ == Family::Theta2 ? 0.5 : 0.0; }
  double weight(long n) const;
  template <class F>
  double support_sum(F&& f) const;

  Family family_;
  LatticeParam lattice_;
  EllipticModulus modulus_;
  double norm_ = 0.0;
  long bound_ = 0;
  double weight_total_ = 0.0;
  std::vector<double> probs_;       // pmf on [-N - 1, N]
  std::vector<long> mode_order_;    // support sorted by decreasing pmf
};

/// Euler polynomial value E_n(0), from the generating function 2 / (1 + e^z).
double euler_polynomial_at_zero(int n);

/// E[(-1)^X X] for X ~ theta_2 with modulus k.
double theta2_signed_first_moment(double k);
/// sqrt(k)/K(k) E[(-1)^X X] at k minus the same at k'.
double pr1_defect(double k);

/// Moment duality between theta_3(k) and theta_3(k'); left minus right side.
double duality_defect(double k, int m);

/// max_n |P(X2(c) + X3(c) = n) - P(X2(c/2) = n)|.
double convolution_defect(double c);

/// P(pi_c = 1) = (1 + k') / 2.
double stability_p_c(double c);
/// The same probability as theta_3(0, q^2)^2 / theta_3(0, q)^2.
double stability_p_c_theta(double c, const SeriesPolicy& policy = {});
/// Max pointwise pmf difference between aX + bX' (X, X' ~ theta_3(c)) and
/// the mixture over theta_3(2c) and theta_2(2c).
double stability_defect(long a, long b, double c);
/// The same identity for real a, b through moment generating functions,
/// max over the given z values.
double stability_mgf_defect(double a, double b, double c, const std::vector<double>& zs);

/// 1/2 log((2/pi) K) + pi K K' sigma^2 / K^2 for theta_3(k).
double entropy_theta3(double k);
double entropy_theta3_direct(double k);
/// 1/2 + 1/2 log(pi / Gamma(3/4)^4): minimum over k of h(X_k) + h(X_k').
double entropy_pair_minimum();
/// 1/2 + 1/2 log((4/pi^2) K K').
double entropy_pair_sum(double k);

/// P(X_A = i) proportional to q^{i^2} / (q^2; q^2)_i.
double heine_pmf(double q, long i);
/// max_n |P(X_A - X_B = n) - P(X3(c) = n)| with q = e^{-pi c}.
double heine_difference_defect(double c);

}  // namespace thetakit
