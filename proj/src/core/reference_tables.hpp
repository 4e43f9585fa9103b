#pragma once

namespace thetakit {

/// Singular modulus data: K(k_r') / K(k_r) = sqrt(r).
///
/// Every field is evaluated from its radical / Gamma-function closed form;
/// nothing here is root-found.
struct SingularValue {
  int r = 0;
  double k_r = 0.0;
  double bigK_r = 0.0;
  double alpha_r = 0.0;
};

inline constexpr int kSingularMin = 1;
inline constexpr int kSingularMax = 10;

SingularValue singular_reference(int r);

// Closed-form variances of the theta_2 / theta_3 distributions at c = sqrt(r).
double theta2_variance_closed_form(int r);
double theta3_variance_closed_form(int r);

// The rounded numerical columns printed alongside those closed forms.
double theta2_variance_printed(int r);
double theta3_variance_printed(int r);

}  // namespace thetakit
