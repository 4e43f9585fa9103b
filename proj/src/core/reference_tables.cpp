#include "reference_tables.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace thetakit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_row(int r) {
  if (r < kSingularMin || r > kSingularMax) {
    throw DomainError("singular value index r must be in 1..10, got " +
                      std::to_string(r));
  }
}

double g(double num, double den) { return std::tgamma(num / den); }

// Gamma products that recur across the three tables.
double gamma_20() { return g(1, 20) * g(3, 20) * g(7, 20) * g(9, 20); }
double gamma_24() { return g(1, 24) * g(5, 24) * g(7, 24) * g(11, 24); }
double gamma_8_sq() { return std::pow(g(1, 8) * g(3, 8), 2); }
double gamma_7_sq() { return std::pow(g(1, 7) * g(2, 7) * g(4, 7), 2); }
double gamma_40() {
  return g(1, 40) * g(7, 40) * g(9, 40) * g(11, 40) * g(13, 40) * g(19, 40) *
         g(23, 40) * g(37, 40);
}

}  // namespace

SingularValue singular_reference(int r) {
  check_row(r);
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s6 = std::sqrt(6.0);
  const double s7 = std::sqrt(7.0);
  const double s10 = std::sqrt(10.0);
  const double sqrt_pi = std::sqrt(kPi);
  const double quarter_root3 = std::pow(3.0, 0.25);

  SingularValue v;
  v.r = r;
  switch (r) {
    case 1:
      v.k_r = s2 / 2.0;
      v.bigK_r = std::pow(g(1, 4), 2) / (4.0 * sqrt_pi);
      v.alpha_r = 0.5;
      break;
    case 2:
      v.k_r = s2 - 1.0;
      v.bigK_r = std::sqrt(s2 + 1.0) / (std::pow(2.0, 13.0 / 4.0) * sqrt_pi) *
                 g(1, 8) * g(3, 8);
      v.alpha_r = s2 - 1.0;
      break;
    case 3:
      v.k_r = s2 / 4.0 * (s3 - 1.0);
      v.bigK_r = quarter_root3 / (std::pow(2.0, 7.0 / 3.0) * kPi) * std::pow(g(1, 3), 3);
      v.alpha_r = (s3 - 1.0) / 2.0;
      break;
    case 4:
      v.k_r = 3.0 - 2.0 * s2;
      v.bigK_r = (s2 + 1.0) / (std::pow(2.0, 3.5) * sqrt_pi) * std::pow(g(1, 4), 2);
      v.alpha_r = 2.0 * std::pow(s2 - 1.0, 2);
      break;
    case 5:
      v.k_r = std::sqrt(0.5 - std::sqrt(s5 - 2.0));
      v.bigK_r = std::pow(s5 + 2.0, 0.25) * std::sqrt(gamma_20() / (160.0 * kPi));
      v.alpha_r = (s5 - std::sqrt(2.0 * s5 - 2.0)) / 2.0;
      break;
    case 6:
      v.k_r = (2.0 - s3) * (s3 - s2);
      v.bigK_r = std::sqrt((s2 - 1.0) * (s2 + s3) * (s3 + 2.0)) *
                 std::sqrt(gamma_24() / (384.0 * kPi));
      v.alpha_r = 5.0 * s6 + 6.0 * s3 - 8.0 * s2 - 11.0;
      break;
    case 7:
      v.k_r = s2 * (3.0 - s7) / 8.0;
      v.bigK_r = g(1, 7) * g(2, 7) * g(4, 7) / (std::pow(7.0, 0.25) * 4.0 * kPi);
      v.alpha_r = (s7 - 2.0) / 2.0;
      break;
    case 8:
      v.k_r = std::pow(s2 - std::sqrt(2.0 * s2 + 2.0) + 1.0, 2);
      v.bigK_r = std::sqrt((2.0 * s2 + std::sqrt(5.0 * s2 + 1.0)) / (4.0 * s2)) *
                 std::pow(s2 + 1.0, 0.25) * g(1, 8) * g(3, 8) / (8.0 * sqrt_pi);
      v.alpha_r = 2.0 * (7.0 * s2 + 10.0) * std::pow(1.0 - std::sqrt(std::sqrt(8.0) - 2.0), 2);
      break;
    case 9:
      v.k_r = 0.5 * (s2 - quarter_root3) * (s3 - 1.0);
      v.bigK_r = quarter_root3 * std::sqrt(s3 + 2.0) * std::pow(g(1, 4), 2) / (12.0 * sqrt_pi);
      v.alpha_r = 0.5 * (3.0 - std::pow(3.0, 0.75) * s2 * (s3 - 1.0));
      break;
    case 10:
      v.k_r = (s10 - 3.0) * std::pow(s2 - 1.0, 2);
      v.bigK_r = std::sqrt(3.0 * s2 + s5 + 2.0) * std::sqrt(gamma_40() / (2560.0 * std::pow(kPi, 3)));
      v.alpha_r = 72.0 * s2 - 46.0 * s5 + 33.0 * s10 - 103.0;
      break;
  }
  return v;
}

double theta2_variance_closed_form(int r) {
  check_row(r);
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s6 = std::sqrt(6.0);
  const double s7 = std::sqrt(7.0);
  const double s10 = std::sqrt(10.0);
  const double pi2 = kPi * kPi;
  const double pi3 = pi2 * kPi;
  const double pi4 = pi3 * kPi;
  const double gamma_quarter_4 = std::pow(g(1, 4), 4);
  switch (r) {
    case 1:
      return (8.0 * pi2 + gamma_quarter_4) / (32.0 * pi3);
    case 2:
      return (32.0 * pi2 + (s2 + 2.0) * gamma_8_sq()) / (128.0 * s2 * pi3);
    case 3:
      return (16.0 * pi3 + std::cbrt(2.0) * (s3 + 3.0) * std::pow(g(1, 3), 6)) /
             (64.0 * s3 * pi4);
    case 4:
      return (8.0 * pi2 + (s2 + 1.0) * gamma_quarter_4) / (64.0 * pi3);
    case 5:
      return (80.0 * pi2 * s5 +
              (5.0 * std::sqrt(s5 + 2.0) + std::sqrt(10.0 * (s5 + 3.0))) * gamma_20()) /
             (1600.0 * pi3);
    case 6:
      return (96.0 * pi2 * s6 + (6.0 * s2 + 2.0 * s3 + 3.0 * s6 + 6.0) * gamma_24()) /
             (2304.0 * pi3);
    case 7:
      return (56.0 * pi3 + (2.0 * s7 + 7.0) * gamma_7_sq()) / (224.0 * s7 * pi4);
    case 8: {
      const double inner =
          1.0 - (7.0 * s2 + 10.0) * std::pow(std::sqrt(2.0 * (s2 - 1.0)) - 1.0, 2) / s2;
      return (32.0 * pi2 + inner * std::sqrt(s2 + 1.0) *
                               (2.0 * s2 + std::sqrt(5.0 * s2 + 1.0)) * gamma_8_sq()) /
             (256.0 * s2 * pi3);
    }
    case 9: {
      const double q3 = std::pow(3.0, 0.25);
      return (24.0 * pi2 + (q3 * s2 + std::pow(3.0, 0.75) * s2 + 2.0 * s3 + 3.0) *
                               gamma_quarter_4) /
             (288.0 * pi3);
    }
    default:
      return (640.0 * pi4 * s10 + (15.0 * s2 + 10.0 * s5 + 4.0 * s10 + 20.0) * gamma_40()) /
             (25600.0 * pi4 * kPi);
  }
}

double theta3_variance_closed_form(int r) {
  check_row(r);
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s6 = std::sqrt(6.0);
  const double s7 = std::sqrt(7.0);
  const double s10 = std::sqrt(10.0);
  const double pi2 = kPi * kPi;
  const double pi3 = pi2 * kPi;
  const double pi4 = pi3 * kPi;
  switch (r) {
    case 1:
      return 1.0 / (4.0 * kPi);
    case 2:
      return (32.0 * pi2 + (s2 - 2.0) * gamma_8_sq()) / (128.0 * s2 * pi3);
    case 3:
      return (32.0 * s3 * pi3 - 3.0 * std::cbrt(2.0) * std::pow(g(1, 3), 6)) / (384.0 * pi4);
    case 4:
      return 1.0 / (8.0 * kPi) - 4.0 * (s2 - 1.0) * std::pow(std::tgamma(1.25), 4) / pi3;
    case 5:
      return (80.0 * pi2 * s5 + (s5 - 5.0) * gamma_20()) / (1600.0 * pi3);
    case 6:
      return (96.0 * pi2 * s6 + (-6.0 * s2 + 2.0 * s3 + 3.0 * s6 - 6.0) * gamma_24()) /
             (2304.0 * pi3);
    case 7:
      return (64.0 * s7 * pi3 - 5.0 * gamma_7_sq()) / (1792.0 * pi4);
    case 8:
      return (32.0 * pi2 + (s2 - 2.0 * std::sqrt(2.0 * (s2 + 1.0)) + 2.0) * gamma_8_sq()) /
             (256.0 * s2 * pi3);
    case 9:
      return (12.0 * pi2 - std::sqrt(2.0 * s3 - 3.0) * std::pow(g(1, 4), 4)) / (144.0 * pi3);
    default:
      return (640.0 * pi4 * s10 + (15.0 * s2 - 10.0 * s5 + 4.0 * s10 - 20.0) * gamma_40()) /
             (25600.0 * pi4 * kPi);
  }
}

double theta2_variance_printed(int r) {
  check_row(r);
  static constexpr std::array<double, 10> kPrinted = {
      0.253728,      0.250277,      0.250038,      0.250007,      0.250002,
      0.25 + 4.1e-7, 0.25 + 1.2e-7, 0.25 + 3.8e-8, 0.25 + 1.3e-8, 0.25 + 4.7e-9};
  return kPrinted[static_cast<std::size_t>(r - 1)];
}

double theta3_variance_printed(int r) {
  check_row(r);
  static constexpr std::array<double, 10> kPrinted = {
      7.95775e-2, 2.29835e-2, 8.59238e-3, 3.72099e-3, 1.77591e-3,
      9.09095e-4, 4.90926e-4, 2.76612e-4, 1.61373e-4, 9.69284e-5};
  return kPrinted[static_cast<std::size_t>(r - 1)];
}

}  // namespace thetakit
