#include "discrete_gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "theta.hpp"

namespace thetakit {

namespace {

constexpr int kMaxCumulantOrder = 30;

// Gaussian weights below e^{-45} relative to the mode are dropped; the
// 4 log term leaves room for fourth moments.
long support_for(double c) {
  const double scale = kPi * c;
  double n = std::sqrt(45.0 / scale);
  n = std::sqrt((45.0 + 4.0 * std::log1p(n)) / scale);
  return static_cast<long>(std::ceil(n)) + 2;
}

double alternate(long n, double v) { return (n % 2 == 0) ? v : -v; }

void check_order(int order) {
  if (order < 1 || order > kMaxCumulantOrder) {
    throw DomainError("cumulant order must lie in 1.." + std::to_string(kMaxCumulantOrder));
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

std::complex<double> int_power(std::complex<double> z, int p) {
  std::complex<double> out(1.0, 0.0);
  while (p > 0) {
    if (p & 1) {
      out *= z;
    }
    z *= z;
    p >>= 1;
  }
  return out;
}

// Sum over odd m of (m + i y)^{-2n}: the odd m in [-2M+1, 2M-1] directly, the
// two tails by the midpoint rule integral plus its first Euler-Maclaurin
// correction f'(edge) / 12.
std::complex<double> eisenstein_row(double y, int n, long M) {
  std::complex<double> sum(0.0, 0.0);
  const int power = 2 * n;
  for (long j = -M; j < M; ++j) {
    const std::complex<double> z(2.0 * static_cast<double>(j) + 1.0, y);
    sum += int_power(1.0 / z, power);
  }
  const double p = power - 1;
  const double edge = 2.0 * static_cast<double>(M);
  const std::complex<double> right = 1.0 / std::complex<double>(edge, y);
  const std::complex<double> left = 1.0 / std::complex<double>(-edge, y);
  sum += 0.5 * int_power(right, power - 1) / p - power / 12.0 * int_power(right, power + 1);
  sum += -0.5 * int_power(left, power - 1) / p + power / 12.0 * int_power(left, power + 1);
  return sum;
}

// The double lattice sum, rows over n2 outermost. The rows for y and -y are
// complex conjugates, so only y >= 0 is evaluated.
double eisenstein_cumulant(Family family, double c, int n, const SeriesPolicy& policy) {
  constexpr long kHalfWidth = 2000;
  const double prefactor = ((n % 2 == 1) ? 1.0 : -1.0) * factorial(2 * n - 1) /
                           std::pow(kPi, 2.0 * n);
  double total = 0.0;
  long first = 1;
  if (family == Family::Theta2) {
    total = eisenstein_row(0.0, n, kHalfWidth).real();
  }
  for (long r = first; r <= policy.max_terms; ++r) {
    const double rd = static_cast<double>(r);
    const double y = family == Family::Theta2 ? 2.0 * c * rd : c * (2.0 * rd - 1.0);
    const double row = 2.0 * eisenstein_row(y, n, kHalfWidth).real();
    total += row;
    // Rows decay like e^{-pi y}; require that regime before stopping.
    if (std::fabs(prefactor * row) < 0.1 * policy.tol && kPi * y > 2.0 * n) {
      return prefactor * total;
    }
  }
  throw_nonconvergent("cumulant (Eisenstein)", policy);
}

double lambert_cumulant(Family family, double c, int n, const SeriesPolicy& policy) {
  const int power = 2 * n - 1;
  const double a = kPi * c;
  auto magnitude = [&](long m) {
    const double md = static_cast<double>(m);
    // 1/sinh(x) = 2 e^{-x} / (1 - e^{-2x}); theta_2 carries one more e^{-x}.
    const double extra = family == Family::Theta2 ? 2.0 : 1.0;
    return std::pow(md, power) * 2.0 * std::exp(-extra * a * md) / (-std::expm1(-2.0 * a * md));
  };
  auto term = [&](long m) { return alternate(m + 1, magnitude(m)); };
  const double sum = sum_until_tail_below(1, term, magnitude, policy, "cumulant (Lambert)");
  if (family == Family::Theta2) {
    return -0.5 * euler_polynomial_at_zero(power) + sum;
  }
  return sum;
}

}  // namespace

double euler_polynomial_at_zero(int n) {
  if (n < 0) {
    throw DomainError("Euler polynomial index must be >= 0");
  }
  // 2 / (1 + e^z) = sum a_n z^n / n!  =>  2 a_n + sum_{j<n} C(n,j) a_j = 0.
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0.0;
    double binom = 1.0;
    for (int j = 0; j < m; ++j) {
      s += binom * a[static_cast<std::size_t>(j)];
      binom = binom * (m - j) / (j + 1);
    }
    a[static_cast<std::size_t>(m)] = -0.5 * s;
  }
  return a[static_cast<std::size_t>(n)];
}

ThetaDistribution::ThetaDistribution(Family family, double c)
    : ThetaDistribution(family, LatticeParam(c), modulus_from_lattice(c)) {}

ThetaDistribution ThetaDistribution::from_modulus(Family family, double k) {
  return from_elliptic(family, EllipticModulus::from_k(k));
}

ThetaDistribution ThetaDistribution::from_elliptic(Family family, const EllipticModulus& m) {
  return ThetaDistribution(family, LatticeParam(m.lattice()), m);
}

ThetaDistribution::ThetaDistribution(Family family, const LatticeParam& lattice,
                                     const EllipticModulus& modulus)
    : family_(family), lattice_(lattice), modulus_(modulus) {
  const ThetaKind kind = family == Family::Theta2 ? ThetaKind::Two : ThetaKind::Three;
  SeriesPolicy policy;
  policy.max_terms = 1'000'000;
  norm_ = theta_series(kind, 0.0, lattice_.q(), policy);
  bound_ = support_for(lattice_.c());

  const std::size_t size = static_cast<std::size_t>(2 * bound_ + 2);
  probs_.resize(size);
  weight_total_ = 0.0;
  for (long n = support_min(); n <= support_max(); ++n) {
    const double w = weight(n);
    probs_[static_cast<std::size_t>(n - support_min())] = w;
    weight_total_ += w;
  }
  for (double& p : probs_) {
    p /= weight_total_;
  }
  mode_order_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    mode_order_[i] = support_min() + static_cast<long>(i);
  }
  const double s = shift();
  std::stable_sort(mode_order_.begin(), mode_order_.end(), [s](long a, long b) {
    return std::fabs(a + s) < std::fabs(b + s);
  });
}

// Weight relative to the mode, so large c does not underflow.
double ThetaDistribution::weight(long n) const {
  const double s = shift();
  const double u = static_cast<double>(n) + s;
  return std::exp(-kPi * c() * (u * u - s * s));
}

template <class F>
double ThetaDistribution::support_sum(F&& f) const {
  double sum = 0.0;
  for (long n = support_min(); n <= support_max(); ++n) {
    sum += f(n, probs_[static_cast<std::size_t>(n - support_min())]);
  }
  return sum;
}

double ThetaDistribution::pmf(long n) const {
  if (n >= support_min() && n <= support_max()) {
    return probs_[static_cast<std::size_t>(n - support_min())];
  }
  return weight(n) / weight_total_;
}

double ThetaDistribution::pmf_elliptic(long n) const {
  const double s = shift();
  const double u = static_cast<double>(n) + s;
  const double jacobi = family_ == Family::Theta2 ? modulus_.k * modulus_.bigK : modulus_.bigK;
  return std::exp(-kPi * modulus_.lattice() * u * u) / std::sqrt(2.0 / kPi * jacobi);
}

double ThetaDistribution::mean() const { return family_ == Family::Theta2 ? -0.5 : 0.0; }

double ThetaDistribution::mean_direct() const {
  return support_sum([](long n, double p) { return static_cast<double>(n) * p; });
}

double ThetaDistribution::variance(VarianceRoute route, const SeriesPolicy& policy) const {
  require_policy(policy);
  const auto& m = modulus_;
  switch (route) {
    case VarianceRoute::Elliptic:
      if (family_ == Family::Theta2) {
        return m.bigE * m.bigK / (kPi * kPi);
      }
      // (K^2/pi^2)(E/K - k'^2) rewritten as (K/pi^2)(k^2 K - (K - E)).
      return m.bigK / (kPi * kPi) * (m.k * m.k * m.bigK - m.bigK_minus_E);
    case VarianceRoute::Lambert: {
      const double q = lattice_.q();
      const double log_q = std::log(q);
      const bool even = family_ == Family::Theta2;
      auto power = [&](long n) {
        const double e = even ? 2.0 * static_cast<double>(n) : 2.0 * static_cast<double>(n) - 1.0;
        return std::exp(e * log_q);
      };
      auto term = [&](long n) {
        const double x = power(n);
        return 2.0 * x / ((1.0 + x) * (1.0 + x));
      };
      auto envelope = [&](long n) { return 2.0 * power(n); };
      const double sum = sum_until_tail_below(1, term, envelope, policy, "variance (Lambert)");
      return even ? 0.25 + sum : sum;
    }
    case VarianceRoute::Direct:
      return centered_moment(2);
  }
  return 0.0;
}

double ThetaDistribution::cumulant(int order, CumulantRoute route,
                                   const SeriesPolicy& policy) const {
  check_order(order);
  require_policy(policy);
  if (order % 2 == 1) {
    return order == 1 ? mean() : 0.0;
  }
  const int n = order / 2;
  if (route == CumulantRoute::Lambert) {
    return lambert_cumulant(family_, c(), n, policy);
  }
  return eisenstein_cumulant(family_, c(), n, policy);
}

double ThetaDistribution::shifted_cumulant(int order, CumulantRoute route,
                                           const SeriesPolicy& policy) const {
  if (order == 1 && family_ == Family::Theta2) {
    return 0.5;
  }
  return cumulant(order, route, policy);
}

double ThetaDistribution::mgf(double z, const SeriesPolicy& policy) const {
  if (!std::isfinite(z)) {
    throw DomainError("mgf: z must be finite");
  }
  require_policy(policy);
  const double s = shift();
  const double a = kPi * c();
  // Exponent of the n-th term relative to the normalized mode weight.
  auto exponent = [&](long n) {
    const double u = static_cast<double>(n) + s;
    return -a * (u * u - s * s) + z * static_cast<double>(n);
  };
  const double log_total = std::log(weight_total_);
  const long peak = std::lround(z / (2.0 * a) - s);
  if (exponent(peak) - log_total > 709.0) {
    throw Overflow("mgf: E[exp(zX)] overflows at z = " + std::to_string(z));
  }
  double sum = std::exp(exponent(peak) - log_total);
  for (long k = 1; k <= policy.max_terms; ++k) {
    const double right = std::exp(exponent(peak + k) - log_total);
    const double left = std::exp(exponent(peak - k) - log_total);
    sum += right + left;
    if (right + left <= 1e-17 * sum) {
      if (!std::isfinite(sum)) {
        throw Overflow("mgf: E[exp(zX)] overflows at z = " + std::to_string(z));
      }
      return sum;
    }
  }
  throw_nonconvergent("mgf", policy);
}

double ThetaDistribution::centered_moment(int order) const {
  if (order < 1) {
    throw DomainError("centered_moment: order must be >= 1");
  }
  const double mu = mean();
  return support_sum([&](long n, double p) {
    return std::pow(static_cast<double>(n) - mu, order) * p;
  });
}

double ThetaDistribution::signed_mean() const {
  return family_ == Family::Theta2 ? 0.0 : std::sqrt(modulus_.k_prime);
}

double ThetaDistribution::signed_mean_direct() const {
  return support_sum([](long n, double p) { return alternate(std::labs(n), p); });
}

double ThetaDistribution::odd_probability() const {
  return family_ == Family::Theta2 ? 0.5 : 0.5 * (1.0 - std::sqrt(modulus_.k_prime));
}

double ThetaDistribution::entropy_direct() const {
  return support_sum([](long, double p) { return p > 0.0 ? -p * std::log(p) : 0.0; });
}

long ThetaDistribution::sample_exact(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(rng);
  double acc = 0.0;
  for (long n : mode_order_) {
    acc += probs_[static_cast<std::size_t>(n - support_min())];
    if (u < acc) {
      return n;
    }
  }
  // Rounding left the cumulative sum a hair short of 1.
  return mode_order_.front();
}

long ThetaDistribution::bernoulli_pairs(const SeriesPolicy& policy) const {
  require_policy(policy);
  const double step = kPi * c();
  const double denom = -std::expm1(-2.0 * step);
  const double offset = family_ == Family::Theta3 ? 0.5 : 0.0;
  for (long n = 0; n <= policy.max_terms; ++n) {
    // Pairs beyond n are nonzero with total probability at most
    // 2 e^{-2 a_{n+1}} / (1 - e^{-2 pi c}).
    const double next = (static_cast<double>(n + 1) - offset) * step;
    if (2.0 * std::exp(-2.0 * next) / denom < policy.tol) {
      return n;
    }
  }
  throw_nonconvergent("sample_bernoulli", policy);
}

long ThetaDistribution::sample_bernoulli(std::mt19937_64& rng, const SeriesPolicy& policy) const {
  const long pairs = bernoulli_pairs(policy);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double step = kPi * c();
  const double offset = family_ == Family::Theta3 ? 0.5 : 0.0;
  // Twice the sum, so half-integers stay exact.
  long twice = 0;
  if (family_ == Family::Theta2) {
    twice = -1 + (uniform(rng) < 0.5 ? 1 : -1);
  }
  for (long n = 1; n <= pairs; ++n) {
    const double a = (static_cast<double>(n) - offset) * step;
    // P(Z+ = +1/2) = P(Z- = -1/2) = e^a / (2 cosh a).
    const double p = 1.0 / (1.0 + std::exp(-2.0 * a));
    twice += uniform(rng) < p ? 1 : -1;
    twice += uniform(rng) < p ? -1 : 1;
  }
  return twice / 2;
}

double theta2_signed_first_moment(double k) {
  const auto d = ThetaDistribution::from_modulus(Family::Theta2, k);
  double sum = 0.0;
  for (long n = d.support_min(); n <= d.support_max(); ++n) {
    sum += alternate(std::labs(n), static_cast<double>(n) * d.pmf(n));
  }
  return sum;
}

double pr1_defect(double k) {
  const auto m = EllipticModulus::from_k(k);
  auto side = [](const EllipticModulus& mod) {
    const auto d = ThetaDistribution::from_elliptic(Family::Theta2, mod);
    double sum = 0.0;
    for (long n = d.support_min(); n <= d.support_max(); ++n) {
      sum += alternate(std::labs(n), static_cast<double>(n) * d.pmf(n));
    }
    return std::sqrt(mod.k) / mod.bigK * sum;
  };
  return side(m) - side(m.complement());
}

double duality_defect(double k, int m) {
  if (m < 1) {
    throw DomainError("duality_defect: m must be >= 1");
  }
  const auto mod = EllipticModulus::from_k(k);
  const auto x = ThetaDistribution::from_elliptic(Family::Theta3, mod);
  const auto xp = ThetaDistribution::from_elliptic(Family::Theta3, mod.complement());
  const double K = mod.bigK;
  const double Kp = mod.bigK_prime;
  auto mu = [](const ThetaDistribution& d, int order) {
    return order == 0 ? 1.0 : d.centered_moment(order);
  };
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double lhs = mu(x, 2 * m) / std::pow(K, 2 * m) - sign_m * mu(xp, 2 * m) / std::pow(Kp, 2 * m);
  double rhs = 0.0;
  for (int l = 1; l <= m; ++l) {
    const double coeff = factorial(2 * m) / (factorial(l) * factorial(2 * m - 2 * l));
    const double sign = ((m - l) % 2 == 0) ? 1.0 : -1.0;
    rhs += coeff * sign / std::pow(4.0 * kPi * K * Kp, l) * mu(xp, 2 * m - 2 * l) /
           std::pow(Kp, 2 * (m - l));
  }
  return lhs - rhs;
}

double convolution_defect(double c) {
  const ThetaDistribution two(Family::Theta2, c);
  const ThetaDistribution three(Family::Theta3, c);
  const ThetaDistribution half(Family::Theta2, c / 2.0);
  const long lo = std::min(two.support_min() + three.support_min(), half.support_min());
  const long hi = std::max(two.support_max() + three.support_max(), half.support_max());
  double worst = 0.0;
  for (long n = lo; n <= hi; ++n) {
    double conv = 0.0;
    for (long m = three.support_min(); m <= three.support_max(); ++m) {
      conv += two.pmf(n - m) * three.pmf(m);
    }
    worst = std::max(worst, std::fabs(conv - half.pmf(n)));
  }
  return worst;
}

double stability_p_c(double c) {
  const auto m = modulus_from_lattice(c);
  return 0.5 * (1.0 + m.k_prime);
}

double stability_p_c_theta(double c, const SeriesPolicy& policy) {
  const double q = LatticeParam(c).q();
  const double num = theta_series(ThetaKind::Three, 0.0, q * q, policy);
  const double den = theta_series(ThetaKind::Three, 0.0, q, policy);
  return (num * num) / (den * den);
}

namespace {

using Law = std::map<long, double>;

// Law of shift + u X + v X' for independent X, X' ~ d.
Law linear_law(const ThetaDistribution& d, long u, long v, long shift) {
  Law law;
  for (long i = d.support_min(); i <= d.support_max(); ++i) {
    for (long j = d.support_min(); j <= d.support_max(); ++j) {
      law[shift + u * i + v * j] += d.pmf(i) * d.pmf(j);
    }
  }
  return law;
}

}  // namespace

double stability_defect(long a, long b, double c) {
  if (a == 0 || b == 0) {
    throw DomainError("stability_defect: a and b must be nonzero integers");
  }
  const ThetaDistribution x(Family::Theta3, c);
  const ThetaDistribution x3(Family::Theta3, 2.0 * c);
  const ThetaDistribution x2(Family::Theta2, 2.0 * c);
  const double p = stability_p_c(c);

  const Law direct = linear_law(x, a, b, 0);
  const Law z3 = linear_law(x3, a + b, a - b, 0);
  const Law z2 = linear_law(x2, a + b, a - b, a);
  Law mixture;
  for (const auto& [n, v] : z3) {
    mixture[n] += p * v;
  }
  for (const auto& [n, v] : z2) {
    mixture[n] += (1.0 - p) * v;
  }
  double worst = 0.0;
  for (const auto& [n, v] : direct) {
    const auto it = mixture.find(n);
    worst = std::max(worst, std::fabs(v - (it == mixture.end() ? 0.0 : it->second)));
  }
  for (const auto& [n, v] : mixture) {
    if (direct.find(n) == direct.end()) {
      worst = std::max(worst, v);
    }
  }
  return worst;
}

double stability_mgf_defect(double a, double b, double c, const std::vector<double>& zs) {
  if (zs.empty()) {
    throw DomainError("stability_mgf_defect: need at least one z");
  }
  const ThetaDistribution x(Family::Theta3, c);
  const ThetaDistribution x3(Family::Theta3, 2.0 * c);
  const ThetaDistribution x2(Family::Theta2, 2.0 * c);
  const double p = stability_p_c(c);
  double worst = 0.0;
  for (double z : zs) {
    const double lhs = x.mgf(a * z) * x.mgf(b * z);
    const double rhs = p * x3.mgf((a + b) * z) * x3.mgf((a - b) * z) +
                       (1.0 - p) * std::exp(a * z) * x2.mgf((a + b) * z) * x2.mgf((a - b) * z);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs)));
  }
  return worst;
}

double entropy_theta3(double k) {
  const auto d = ThetaDistribution::from_modulus(Family::Theta3, k);
  const auto& m = d.modulus();
  const double var = d.variance(VarianceRoute::Elliptic);
  return 0.5 * std::log(2.0 / kPi * m.bigK) + kPi * m.bigK_prime / m.bigK * var;
}

double entropy_theta3_direct(double k) {
  return ThetaDistribution::from_modulus(Family::Theta3, k).entropy_direct();
}

double entropy_pair_minimum() {
  return 0.5 + 0.5 * std::log(kPi / std::pow(std::tgamma(0.75), 4));
}

double entropy_pair_sum(double k) {
  const auto m = EllipticModulus::from_k(k);
  return 0.5 + 0.5 * std::log(4.0 / (kPi * kPi) * m.bigK * m.bigK_prime);
}

namespace {

// Unnormalized Heine weights q^{i^2} / (q^2; q^2)_i until negligible.
std::vector<double> heine_weights(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("heine: q must lie in (0, 1)");
  }
  std::vector<double> w{1.0};
  double total = 1.0;
  double poch = 1.0;
  const double q2 = q * q;
  double q2i = 1.0;
  for (long i = 1; i < 100'000; ++i) {
    q2i *= q2;
    poch *= 1.0 - q2i;
    const double di = static_cast<double>(i);
    const double v = std::exp(di * di * std::log(q)) / poch;
    w.push_back(v);
    total += v;
    if (v < 1e-18 * total && di * std::log(q) < -1.0) {
      break;
    }
  }
  for (double& v : w) {
    v /= total;
  }
  return w;
}

}  // namespace

double heine_pmf(double q, long i) {
  if (i < 0) {
    throw DomainError("heine_pmf: i must be >= 0");
  }
  const auto w = heine_weights(q);
  return static_cast<std::size_t>(i) < w.size() ? w[static_cast<std::size_t>(i)] : 0.0;
}

double heine_difference_defect(double c) {
  const ThetaDistribution d(Family::Theta3, c);
  const auto w = heine_weights(d.lattice().q());
  const long size = static_cast<long>(w.size());
  double worst = 0.0;
  for (long n = -(size - 1); n <= size - 1; ++n) {
    double p = 0.0;
    for (long i = std::max(0L, n); i < size && i - n < size; ++i) {
      p += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i - n)];
    }
    worst = std::max(worst, std::fabs(p - d.pmf(n)));
  }
  return worst;
}

}  // namespace thetakit
