#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "brownian.hpp"
#include "discrete_gaussian.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "kolmogorov.hpp"
#include "reference_tables.hpp"
#include "theta.hpp"

namespace thetakit {

namespace {

void check_ml(HyperbolicKind kind, double z) {
  if (!std::isfinite(z)) {
    throw DomainError("ml: z must be finite");
  }
  if (z == 0.0 && (kind == HyperbolicKind::Coth || kind == HyperbolicKind::Csch)) {
    throw DomainError("ml: coth and csch expansions need z != 0");
  }
}

// Term n of the series part of each expansion (n >= 1 for coth/csch/tanh,
// n >= 0 for sech), sign included.
double ml_term(HyperbolicKind kind, double z, long n) {
  const double pi2 = kPi * kPi;
  const double nd = static_cast<double>(n);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  switch (kind) {
    case HyperbolicKind::Coth:
      return 2.0 * z / (z * z + nd * nd * pi2);
    case HyperbolicKind::Csch:
      return sign * 2.0 * z / (z * z + nd * nd * pi2);
    case HyperbolicKind::Tanh: {
      const double m = 2.0 * nd - 1.0;
      return 8.0 * z / (4.0 * z * z + m * m * pi2);
    }
    case HyperbolicKind::Sech: {
      const double m = 2.0 * nd + 1.0;
      return sign * 4.0 * kPi * m / (4.0 * z * z + m * m * pi2);
    }
  }
  return 0.0;
}

long ml_first(HyperbolicKind kind) { return kind == HyperbolicKind::Sech ? 0 : 1; }

double ml_lead(HyperbolicKind kind, double z) {
  return (kind == HyperbolicKind::Coth || kind == HyperbolicKind::Csch) ? 1.0 / z : 0.0;
}

// Sum of terms first .. first + n_terms - 1, smallest first.
double ml_body(HyperbolicKind kind, double z, long n_terms) {
  const long first = ml_first(kind);
  double sum = 0.0;
  for (long n = first + n_terms - 1; n >= first; --n) {
    sum += ml_term(kind, z, n);
  }
  return sum;
}

// atan(x) / x, continuous at 0.
double atan_ratio(double x) { return x == 0.0 ? 1.0 : std::atan(x) / x; }

using Point = std::vector<double>;
using Grid = std::vector<Point>;
using Defect = std::function<double(const Point&, const SeriesPolicy&)>;

struct Identity {
  std::string name;
  std::string description;
  std::vector<std::string> axes;
  Grid grid;
  Defect defect;
  double tol;
};

const std::vector<double> kScale = {0.25, 0.5, 1.0, 2.0, 4.0};

std::vector<double> z_grid() {
  std::vector<double> z;
  for (int i = 0; i < 9; ++i) z.push_back(-1.0 + 0.25 * i);
  return z;
}

std::vector<double> interior_grid() {
  std::vector<double> x;
  for (int i = 1; i <= 5; ++i) x.push_back(-1.0 + i / 3.0);
  return x;
}

std::vector<double> rows() {
  std::vector<double> r;
  for (int i = kSingularMin; i <= kSingularMax; ++i) r.push_back(i);
  return r;
}

std::vector<double> h_grid() {
  std::vector<double> h;
  for (int i = 0; i <= 16; ++i) h.push_back(0.4 + 0.1 * i);
  return h;
}

Grid product(const std::vector<std::vector<double>>& axes) {
  Grid out{Point{}};
  for (const auto& axis : axes) {
    Grid next;
    for (const auto& p : out) {
      for (double v : axis) {
        Point q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

double k_of(double c) { return modulus_from_lattice(c).k; }

std::vector<Identity> build_registry() {
  std::vector<Identity> reg;
  const auto z9 = z_grid();
  const auto xy = interior_grid();

  const std::pair<const char*, ThetaKind> modular[] = {
      {"modular-1", ThetaKind::One},
      {"modular-2", ThetaKind::Two},
      {"modular-3", ThetaKind::Three},
      {"modular-4", ThetaKind::Four}};
  for (const auto& [name, kind] : modular) {
    reg.push_back({name, "real-form modular identity, trigonometric vs. image side",
                   {"z", "t"}, product({z9, kScale}),
                   [kind](const Point& p, const SeriesPolicy& pol) {
                     const auto m = modular_pair(kind, p[0], p[1], pol);
                     return std::fabs(m.lhs - m.rhs);
                   },
                   1e-11});
  }
  reg.push_back({"modular-243", "sqrt(t) theta_2(0, e^{-pi t}) = theta_4(0, e^{-pi/t})",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double t = p[0];
                   return std::fabs(std::sqrt(t) * theta_series(ThetaKind::Two, 0.0, std::exp(-kPi * t), pol) -
                                    theta_series(ThetaKind::Four, 0.0, std::exp(-kPi / t), pol));
                 },
                 1e-11});
  reg.push_back({"modular-42", "sqrt(t) theta_4(0, e^{-pi t}) = theta_2(0, e^{-pi/t})",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double t = p[0];
                   return std::fabs(std::sqrt(t) * theta_series(ThetaKind::Four, 0.0, std::exp(-kPi * t), pol) -
                                    theta_series(ThetaKind::Two, 0.0, std::exp(-kPi / t), pol));
                 },
                 1e-11});
  reg.push_back({"modular-32", "sqrt(t) theta_3(0, e^{-pi t}) = theta_3(0, e^{-pi/t})",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double t = p[0];
                   return std::fabs(std::sqrt(t) * theta_series(ThetaKind::Three, 0.0, std::exp(-kPi * t), pol) -
                                    theta_series(ThetaKind::Three, 0.0, std::exp(-kPi / t), pol));
                 },
                 1e-11});
  reg.push_back({"modular-lh10",
                 "(pi v)^{-1/2} sum e^{-(r+n)^2/v} = sum e^{-n^2 pi^2 v} cos(2 n pi r)",
                 {"r", "v"}, product({z9, kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double r = p[0];
                   const double v = p[1];
                   const double lhs = gaussian_image_sum(r, 1.0, v, false, pol, "lh10") /
                                      std::sqrt(kPi * v);
                   const double rhs = theta_series(ThetaKind::Three, kPi * r, std::exp(-kPi * kPi * v), pol);
                   return std::fabs(lhs - rhs);
                 },
                 1e-11});
  reg.push_back({"theta1prime-modular", "t^{3/2} theta_1'(0 | i t) = theta_1'(0 | i/t)",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double t = p[0];
                   return std::fabs(t * std::sqrt(t) * theta1_prime(0.0, std::exp(-kPi * t), pol) -
                                    theta1_prime(0.0, std::exp(-kPi / t), pol));
                 },
                 1e-11});
  reg.push_back({"theta-product", "Fourier series vs. triple product, kinds 1-4",
                 {"kind", "z", "c"}, product({{1, 2, 3, 4}, z9, kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const auto kind = theta_kind_from_int(static_cast<int>(p[0]));
                   const double q = std::exp(-kPi * p[2]);
                   return std::fabs(theta_series(kind, p[1], q, pol) - theta_product(kind, p[1], q, pol));
                 },
                 1e-11});

  const std::pair<const char*, ProcessKind> processes[] = {
      {"reflected", ProcessKind::Reflected}, {"killed", ProcessKind::Killed}};
  for (const auto& [label, proc] : processes) {
    reg.push_back({std::string("density-") + label + "-xcheck",
                   "transition density, eigenfunction expansion vs. image sum",
                   {"t", "x", "y"}, product({kScale, xy, xy}),
                   [proc](const Point& p, const SeriesPolicy& pol) {
                     const DensityQuery q{p[0], p[1], p[2]};
                     return std::fabs(density(proc, MethodKind::Spectral, q, pol) -
                                      density(proc, MethodKind::Images, q, pol));
                   },
                   1e-10});
  }
  for (const auto& [label, proc] : processes) {
    reg.push_back({std::string("green-") + label + "-xcheck",
                   "Green function, accelerated eigenvalue sum vs. hyperbolic closed form",
                   {"alpha", "x", "y"}, product({kScale, xy, xy}),
                   [proc](const Point& p, const SeriesPolicy& pol) {
                     return std::fabs(green(proc, MethodKind::Spectral, p[0], p[1], p[2], pol) -
                                      green(proc, MethodKind::Images, p[0], p[1], p[2], pol));
                   },
                   1e-8});
  }

  const std::pair<const char*, HyperbolicKind> hyperbolic[] = {
      {"coth", HyperbolicKind::Coth},
      {"csch", HyperbolicKind::Csch},
      {"tanh", HyperbolicKind::Tanh},
      {"sech", HyperbolicKind::Sech}};
  constexpr long kMlTerms = 1'000'000;
  for (const auto& [label, kind] : hyperbolic) {
    reg.push_back({std::string("ml-") + label,
                   "tail-corrected partial-fraction sum (10^6 terms) vs. direct value",
                   {"z"}, product({{0.5, 1.0, 2.0}}),
                   [kind](const Point& p, const SeriesPolicy&) {
                     return std::fabs(ml_accelerated(kind, p[0], kMlTerms) - ml_direct(kind, p[0]));
                   },
                   1e-10});
    reg.push_back({std::string("ml-") + label + "-partial",
                   "plain partial-fraction sum (10^6 terms) vs. direct value",
                   {"z"}, product({{0.5, 1.0, 2.0}}),
                   [kind](const Point& p, const SeriesPolicy&) {
                     return std::fabs(ml_partial(kind, p[0], kMlTerms) - ml_direct(kind, p[0]));
                   },
                   1e-5});
  }

  reg.push_back({"mod4-hitting", "exit-time density, eigenfunction vs. image form",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   return std::fabs(exit_density(MethodKind::Spectral, p[0], pol) -
                                    exit_density(MethodKind::Images, p[0], pol));
                 },
                 1e-11});
  reg.push_back({"bessel3-density", "Bessel(3) hitting density, both inversions",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   return std::fabs(bessel3_hit_density(MethodKind::Spectral, p[0], pol) -
                                    bessel3_hit_density(MethodKind::Images, p[0], pol));
                 },
                 1e-11});
  reg.push_back({"bessel3-cdf", "Bessel(3) hitting CDF, both inversions",
                 {"t"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   return std::fabs(bessel3_hit_cdf(MethodKind::Spectral, p[0], pol) -
                                    bessel3_hit_cdf(MethodKind::Images, p[0], pol));
                 },
                 1e-11});

  reg.push_back({"duality-m1", "first moment duality between theta_3(k) and theta_3(k')",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return std::fabs(duality_defect(k_of(p[0]), 1)); },
                 1e-11});
  reg.push_back({"duality-m2", "second moment duality between theta_3(k) and theta_3(k')",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return std::fabs(duality_defect(k_of(p[0]), 2)); },
                 1e-11});
  reg.push_back({"parity-pr0", "E[(-1)^X] = sqrt(k') for theta_3",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) {
                   const ThetaDistribution d(Family::Theta3, p[0]);
                   return std::fabs(d.signed_mean() - d.signed_mean_direct());
                 },
                 1e-12});
  reg.push_back({"parity-oe", "P(X odd) = 1/2 for theta_2",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) {
                   const ThetaDistribution d(Family::Theta2, p[0]);
                   double odd = 0.0;
                   for (long n = d.support_min(); n <= d.support_max(); ++n) {
                     if (n % 2 != 0) odd += d.pmf(n);
                   }
                   return std::fabs(odd - 0.5);
                 },
                 1e-12});
  reg.push_back({"parity-pr1", "signed first moment of theta_2 at k vs. k'",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return std::fabs(pr1_defect(k_of(p[0]))); },
                 1e-11});
  reg.push_back({"convolution", "theta_2(c) + theta_3(c) ~ theta_2(c/2)",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return convolution_defect(p[0]); },
                 1e-12});
  reg.push_back({"stability-1-1", "X + X' as a theta_3(2c) / theta_2(2c) mixture",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return stability_defect(1, 1, p[0]); },
                 1e-12});
  reg.push_back({"stability-1-m1", "X - X' as a theta_3(2c) / theta_2(2c) mixture",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return stability_defect(1, -1, p[0]); },
                 1e-12});
  reg.push_back({"stability-p-c", "mixture weight (1 + k')/2 vs. theta_3(0,q^2)^2/theta_3(0,q)^2",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   return std::fabs(stability_p_c(p[0]) - stability_p_c_theta(p[0], pol));
                 },
                 1e-12});

  const std::pair<const char*, Family> families[] = {{"theta2", Family::Theta2},
                                                     {"theta3", Family::Theta3}};
  for (const auto& [label, family] : families) {
    reg.push_back({std::string("variance-routes-") + label,
                   "variance: elliptic closed form, Lambert series, direct sum",
                   {"c"}, product({kScale}),
                   [family](const Point& p, const SeriesPolicy& pol) {
                     const ThetaDistribution d(family, p[0]);
                     const double e = d.variance(VarianceRoute::Elliptic, pol);
                     const double l = d.variance(VarianceRoute::Lambert, pol);
                     const double s = d.variance(VarianceRoute::Direct, pol);
                     return std::max({std::fabs(e - l), std::fabs(e - s), std::fabs(l - s)});
                   },
                   1e-11});
    reg.push_back({std::string("cumulants-") + label,
                   "kappa_2 and kappa_4, Lambert vs. Eisenstein lattice sums",
                   {"order", "c"}, product({{2, 4}, kScale}),
                   [family](const Point& p, const SeriesPolicy& pol) {
                     const ThetaDistribution d(family, p[1]);
                     const int order = static_cast<int>(p[0]);
                     return std::fabs(d.cumulant(order, CumulantRoute::Lambert, pol) -
                                      d.cumulant(order, CumulantRoute::Eisenstein, pol));
                   },
                   1e-8});
  }
  reg.push_back({"heine", "difference of two Heine variables ~ theta_3",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) { return heine_difference_defect(p[0]); },
                 1e-12});
  reg.push_back({"entropy", "theta_3 entropy, elliptic form vs. direct sum",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) {
                   const double k = k_of(p[0]);
                   return std::fabs(entropy_theta3(k) - entropy_theta3_direct(k));
                 },
                 1e-10});

  reg.push_back({"kolmogorov-cdf-routes", "Kolmogorov CDF: series, product and elliptic",
                 {"h"}, product({h_grid()}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const double s = kolmogorov_cdf(p[0], KolmogorovRoute::Series, pol);
                   const double q = kolmogorov_cdf(p[0], KolmogorovRoute::Product, pol);
                   const double e = kolmogorov_cdf(p[0], KolmogorovRoute::Elliptic, pol);
                   return std::max({std::fabs(s - q), std::fabs(s - e), std::fabs(q - e)});
                 },
                 2e-11});
  reg.push_back({"kolmogorov-pdf-routes", "Kolmogorov density: series vs. elliptic",
                 {"h"}, product({h_grid()}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   return std::fabs(kolmogorov_pdf(p[0], KolmogorovRoute::Series, pol) -
                                    kolmogorov_pdf(p[0], KolmogorovRoute::Elliptic, pol));
                 },
                 2e-9});

  reg.push_back({"jacobi-theta-constant", "theta_3(0, q)^2 = (2/pi) K(k)",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy& pol) {
                   const auto m = modulus_from_lattice(p[0]);
                   const double t3 = theta_series(ThetaKind::Three, 0.0, std::exp(-kPi * p[0]), pol);
                   return std::fabs(t3 * t3 - 2.0 / kPi * m.bigK);
                 },
                 1e-11});
  reg.push_back({"legendre", "K E' + K' E - K K' = pi/2",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) {
                   return std::fabs(legendre_defect(modulus_from_lattice(p[0])));
                 },
                 1e-12});
  reg.push_back({"landen", "ascending Landen step halves the lattice parameter",
                 {"c"}, product({kScale}),
                 [](const Point& p, const SeriesPolicy&) {
                   return std::fabs(landen_ascend(modulus_from_lattice(p[0])).lattice() - p[0] / 2.0);
                 },
                 1e-11});

  reg.push_back({"table-1", "singular moduli: K(k_r')/K(k_r) = sqrt(r)",
                 {"r"}, product({rows()}),
                 [](const Point& p, const SeriesPolicy&) {
                   const auto v = singular_reference(static_cast<int>(p[0]));
                   return std::fabs(EllipticModulus::from_k(v.k_r).lattice() - std::sqrt(p[0]));
                 },
                 1e-10});
  reg.push_back({"table-1-alpha", "singular value function alpha(r) from K and E at k_r",
                 {"r"}, product({rows()}),
                 [](const Point& p, const SeriesPolicy&) {
                   const auto v = singular_reference(static_cast<int>(p[0]));
                   const auto m = EllipticModulus::from_k(v.k_r);
                   const double alpha = kPi / (4.0 * m.bigK * m.bigK) +
                                        std::sqrt(p[0]) * (1.0 - m.bigE / m.bigK);
                   return std::fabs(alpha - v.alpha_r);
                 },
                 1e-10});
  for (const auto& [label, family] : families) {
    const bool two = family == Family::Theta2;
    const std::string table = two ? "table-2" : "table-3";
    reg.push_back({table, "closed-form variance at c = sqrt(r) vs. root-found elliptic route",
                   {"r"}, product({rows()}),
                   [family, two](const Point& p, const SeriesPolicy& pol) {
                     const int r = static_cast<int>(p[0]);
                     const double closed = two ? theta2_variance_closed_form(r) : theta3_variance_closed_form(r);
                     const ThetaDistribution d(family, std::sqrt(p[0]));
                     return std::fabs(closed - d.variance(VarianceRoute::Elliptic, pol));
                   },
                   1e-9});
    reg.push_back({table + "-printed", "rounded printed variance vs. recomputation",
                   {"r"}, product({rows()}),
                   [family, two](const Point& p, const SeriesPolicy& pol) {
                     const int r = static_cast<int>(p[0]);
                     const double printed = two ? theta2_variance_printed(r) : theta3_variance_printed(r);
                     const ThetaDistribution d(family, std::sqrt(p[0]));
                     return std::fabs(printed - d.variance(VarianceRoute::Elliptic, pol));
                   },
                   1e-6});
  }
  return reg;
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

VerificationReport run_one(const Identity& id, std::optional<double> tol,
                           const SeriesPolicy& policy) {
  VerificationReport rep;
  rep.name = id.name;
  rep.description = id.description;
  rep.axes = id.axes;
  rep.grid = id.grid;
  rep.tol = tol.value_or(id.tol);
  rep.worst = id.grid.front();
  for (const auto& p : id.grid) {
    double d;
    try {
      d = id.defect(p, policy);
    } catch (const Error&) {
      // A check that cannot be evaluated counts as an infinite defect.
      d = INFINITY;
    }
    if (std::isnan(d)) d = INFINITY;
    if (d > rep.max_defect) {
      rep.max_defect = d;
      rep.worst = p;
    }
  }
  rep.passed = rep.max_defect <= rep.tol;
  return rep;
}

}  // namespace

double ml_partial(HyperbolicKind kind, double z, long n_terms) {
  check_ml(kind, z);
  if (n_terms < 1) {
    throw DomainError("ml_partial: n_terms must be >= 1");
  }
  return ml_lead(kind, z) + ml_body(kind, z, n_terms);
}

double ml_accelerated(HyperbolicKind kind, double z, long n_terms) {
  check_ml(kind, z);
  if (n_terms < 2) {
    throw DomainError("ml_accelerated: n_terms must be >= 2");
  }
  const double pi2 = kPi * kPi;
  switch (kind) {
    case HyperbolicKind::Coth:
    case HyperbolicKind::Tanh: {
      // sum_{n > N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12 + O(f'''(N)).
      const double N = static_cast<double>(n_terms);
      double integral;
      double fN;
      double dfN;
      if (kind == HyperbolicKind::Coth) {
        const double d = z * z + N * N * pi2;
        integral = 2.0 * z * atan_ratio(z / (kPi * N)) / (pi2 * N);
        fN = 2.0 * z / d;
        dfN = -2.0 * z * 2.0 * N * pi2 / (d * d);
      } else {
        const double m = 2.0 * N - 1.0;
        const double d = 4.0 * z * z + m * m * pi2;
        integral = 8.0 * z * atan_ratio(2.0 * z / (kPi * m)) / (2.0 * pi2 * m);
        fN = 8.0 * z / d;
        dfN = -8.0 * z * 4.0 * m * pi2 / (d * d);
      }
      return ml_partial(kind, z, n_terms) + integral - fN / 2.0 - dfN / 12.0;
    }
    case HyperbolicKind::Csch:
    case HyperbolicKind::Sech: {
      // Repeated averaging of consecutive partial sums (Euler transform);
      // each level gains a factor of order 1/N.
      constexpr int kLevels = 8;
      double partial[kLevels + 1];
      partial[0] = ml_body(kind, z, n_terms);
      for (int j = 1; j <= kLevels; ++j) {
        partial[j] = partial[j - 1] + ml_term(kind, z, ml_first(kind) + n_terms + j - 1);
      }
      for (int level = kLevels; level > 0; --level) {
        for (int j = 0; j < level; ++j) partial[j] = 0.5 * (partial[j] + partial[j + 1]);
      }
      return ml_lead(kind, z) + partial[0];
    }
  }
  return 0.0;
}

double ml_direct(HyperbolicKind kind, double z) {
  check_ml(kind, z);
  switch (kind) {
    case HyperbolicKind::Coth:
      return 1.0 / std::tanh(z);
    case HyperbolicKind::Csch:
      return 1.0 / std::sinh(z);
    case HyperbolicKind::Tanh:
      return std::tanh(z);
    case HyperbolicKind::Sech:
      return 1.0 / std::cosh(z);
  }
  return 0.0;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& id : registry()) names.push_back(id.name);
  return names;
}

std::vector<VerificationReport> run_suite(const std::vector<std::string>& names,
                                          std::optional<double> tol,
                                          const SeriesPolicy& policy) {
  require_policy(policy);
  if (names.empty()) {
    throw DomainError("run_suite: no identities requested");
  }
  if (tol && !(*tol > 0.0)) {
    throw DomainError("run_suite: tol must be > 0");
  }
  const auto& reg = registry();
  std::vector<const Identity*> selected;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& id : reg) selected.push_back(&id);
      continue;
    }
    auto it = std::find_if(reg.begin(), reg.end(), [&](const Identity& id) { return id.name == name; });
    if (it == reg.end()) {
      throw UnknownIdentity("unknown identity: " + name);
    }
    selected.push_back(&*it);
  }
  std::vector<VerificationReport> out;
  out.reserve(selected.size());
  for (const auto* id : selected) out.push_back(run_one(*id, tol, policy));
  return out;
}

}  // namespace thetakit
