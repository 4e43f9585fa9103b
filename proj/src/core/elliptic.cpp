#include "elliptic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "errors.hpp"

namespace thetakit {

namespace {

constexpr double kPi = std::numbers::pi;

struct AgmResult {
  double bigK;
  double bigE;
  double bigK_minus_E;
};

// Gauss AGM with the companion sum E = K (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
// Takes k' explicitly so callers can pass an exactly known complement.
AgmResult agm(double k, double k_prime) {
  double a = 1.0;
  double b = k_prime;
  double c = k;
  double weight = 0.5;
  double sum = weight * c * c;
  for (int i = 0; i < 64; ++i) {
    const double a_next = 0.5 * (a + b);
    // a_n^2 - b_n^2 = c_n^2, hence c_(n+1) = c_n^2 / (4 a_(n+1)).
    const double c_next = c * c / (4.0 * a_next);
    b = std::sqrt(a * b);
    a = a_next;
    c = c_next;
    weight *= 2.0;
    const double add = weight * c * c;
    sum += add;
    if (add <= 1e-17 * sum && std::fabs(a - b) <= 1e-16 * a) {
      break;
    }
  }
  const double bigK = kPi / (2.0 * a);
  return {bigK, bigK * (1.0 - sum), bigK * sum};
}

double complement_of(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

double ellip_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("ellip_k needs 0 <= k < 1 (K(1) is infinite)");
  }
  return agm(k, complement_of(k)).bigK;
}

double ellip_e(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("ellip_e needs 0 <= k <= 1");
  }
  if (k == 1.0) {
    return 1.0;
  }
  return agm(k, complement_of(k)).bigE;
}

EllipticModulus EllipticModulus::from_k(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("elliptic modulus must lie in (0, 1)");
  }
  return from_pair(k, complement_of(k));
}

EllipticModulus EllipticModulus::from_pair(double k, double k_prime) {
  if (!(k > 0.0 && k <= 1.0) || !(k_prime > 0.0 && k_prime <= 1.0)) {
    throw DomainError("elliptic modulus pair must lie in (0, 1]");
  }
  const AgmResult direct = agm(k, k_prime);
  const AgmResult dual = agm(k_prime, k);
  EllipticModulus m;
  m.k = k;
  m.k_prime = k_prime;
  m.bigK = direct.bigK;
  m.bigE = direct.bigE;
  m.bigK_minus_E = direct.bigK_minus_E;
  m.bigK_prime = dual.bigK;
  m.bigE_prime = dual.bigE;
  m.bigK_minus_E_prime = dual.bigK_minus_E;
  return m;
}

EllipticModulus EllipticModulus::complement() const {
  EllipticModulus m = *this;
  std::swap(m.k, m.k_prime);
  std::swap(m.bigK, m.bigK_prime);
  std::swap(m.bigE, m.bigE_prime);
  std::swap(m.bigK_minus_E, m.bigK_minus_E_prime);
  return m;
}

double legendre_defect(const EllipticModulus& m) {
  // K E' + K' E - K K' = K' E - K (K' - E').
  return m.bigK_prime * m.bigE - m.bigK * m.bigK_minus_E_prime - kPi / 2.0;
}

namespace {

// Solves K(k')/K(k) = c for c >= 1 in the variable t = log k, on which the
// ratio is smooth and strictly decreasing.
std::pair<double, double> solve_small_modulus(double c) {
  auto ratio = [](double t) {
    const double k = std::exp(t);
    const double kp = complement_of(k);
    return agm(kp, k).bigK / agm(k, kp).bigK;
  };
  double lo = -690.0;  // k ~ 1e-300, ratio ~ 440
  double hi = std::log(std::sqrt(0.5));
  double f_lo = ratio(lo) - c;
  double f_hi = ratio(hi) - c;
  if (f_lo < 0.0) {
    throw NonConvergent("modulus_from_lattice: c too large to bracket");
  }
  if (f_hi >= 0.0) {
    const double k = std::exp(hi);
    return {k, complement_of(k)};
  }

  int iterations = 0;
  while (hi - lo > 1e-6) {
    if (++iterations > 200) {
      throw NonConvergent("modulus_from_lattice: bisection did not converge");
    }
    const double mid = 0.5 * (lo + hi);
    const double f_mid = ratio(mid) - c;
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  // Secant polish, kept inside the bracket (falls back to bisection).
  for (int i = 0; i < 100; ++i) {
    double next = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double f_next = ratio(next) - c;
    if (f_next == 0.0) {
      lo = hi = next;
      break;
    }
    if (f_next > 0.0) {
      lo = next;
      f_lo = f_next;
    } else {
      hi = next;
      f_hi = f_next;
    }
    if (std::fabs(f_next) < 1e-15 * c || hi - lo < 1e-16 * std::fabs(lo)) {
      lo = hi = next;
      break;
    }
  }
  const double t = std::fabs(f_lo) < std::fabs(f_hi) ? lo : hi;
  const double k = std::exp(t);
  return {k, complement_of(k)};
}

}  // namespace

EllipticModulus modulus_from_lattice(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("modulus_from_lattice needs c > 0");
  }
  if (c == 1.0) {
    const double r = std::sqrt(0.5);
    return EllipticModulus::from_pair(r, r);
  }
  if (c > 1.0) {
    const auto [k, kp] = solve_small_modulus(c);
    return EllipticModulus::from_pair(k, kp);
  }
  // K(k')/K(k) = c  <=>  K(k)/K(k') = 1/c, so the roles swap.
  const auto [kp, k] = solve_small_modulus(1.0 / c);
  return EllipticModulus::from_pair(k, kp);
}

double lattice_from_modulus(double k) {
  return EllipticModulus::from_k(k).lattice();
}

double nome_from_modulus(double k) {
  return std::exp(-kPi * lattice_from_modulus(k));
}

double landen_ascend(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("landen_ascend needs k in (0, 1)");
  }
  return 2.0 * std::sqrt(k) / (1.0 + k);
}

EllipticModulus landen_ascend(const EllipticModulus& m) {
  const double k1 = landen_ascend(m.k);
  // 1 - k1 is tiny when k' is; (1 - k)/(1 + k) = k'^2 / (1 + k)^2 keeps it.
  const double kp1 = (m.k_prime / (1.0 + m.k)) * (m.k_prime / (1.0 + m.k));
  return EllipticModulus::from_pair(k1, kp1);
}

}  // namespace thetakit
