#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace thetakit {

inline constexpr double kPi = std::numbers::pi;

/// Truncation contract shared by every series and product evaluator.
///
/// An evaluator stops once the magnitude envelope of the current term, times
/// the geometric tail factor, is below `tol`; it throws NonConvergent when
/// `max_terms` terms have been used without meeting that bound.
struct SeriesPolicy {
  double tol = 1e-14;
  int max_terms = 10'000;
};

inline void require_policy(const SeriesPolicy& policy) {
  if (!(policy.tol > 0.0) || policy.max_terms <= 0) {
    throw DomainError("series policy needs tol > 0 and max_terms > 0");
  }
}

[[noreturn]] inline void throw_nonconvergent(const std::string& what,
                                             const SeriesPolicy& policy) {
  throw NonConvergent(what + ": no convergence within " +
                      std::to_string(policy.max_terms) + " terms");
}

/// Lattice parameter tau = i c of a theta series, with nome q = exp(-pi c).
class LatticeParam {
 public:
  explicit LatticeParam(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw DomainError("lattice parameter c must be finite and > 0");
    }
    q_ = std::exp(-kPi * c);
    if (!(q_ > 0.0)) {
      throw DomainError("lattice parameter c too large: nome underflows");
    }
  }

  double c() const { return c_; }
  double q() const { return q_; }

  // tau' = -1/tau, i.e. c' = 1/c.
  LatticeParam dual() const { return LatticeParam(1.0 / c_); }

 private:
  double c_;
  double q_;
};

enum class ThetaKind { One = 1, Two = 2, Three = 3, Four = 4 };

inline ThetaKind theta_kind_from_int(int tag) {
  if (tag < 1 || tag > 4) {
    throw DomainError("theta kind must be one of 1, 2, 3, 4");
  }
  return static_cast<ThetaKind>(tag);
}

}  // namespace thetakit

namespace thetakit {

/// Sums term(n) for n = first, first + 1, ...
///
/// `envelope(n)` must bound |term(n)| and, past its peak, decrease with
/// non-increasing consecutive ratios (true for every Gaussian-times-polynomial
/// envelope in this library). The loop stops once the geometric majorant
/// envelope(n+1) / (1 - ratio) of the remaining tail is below policy.tol.
template <class Term, class Envelope>
double sum_until_tail_below(long first, Term&& term, Envelope&& envelope,
                            const SeriesPolicy& policy, const char* what) {
  double sum = 0.0;
  for (long i = 0; i < policy.max_terms; ++i) {
    const long n = first + i;
    sum += term(n);
    const double e1 = envelope(n + 1);
    if (e1 == 0.0) {
      return sum;
    }
    const double ratio = envelope(n + 2) / e1;
    if (ratio < 1.0 && e1 / (1.0 - ratio) < policy.tol) {
      return sum;
    }
  }
  throw_nonconvergent(what, policy);
}

/// Sum over n in Z of sign(n) * exp(-(offset + spacing n)^2 / width), where
/// sign(n) = (-1)^n when `alternating` and 1 otherwise.
///
/// Terms are added outward from the peak; on each side consecutive ratios are
/// at most exp(-2 spacing^2 / width) after the first step.
double gaussian_image_sum(double offset, double spacing, double width,
                          bool alternating, const SeriesPolicy& policy,
                          const char* what);

}  // namespace thetakit
