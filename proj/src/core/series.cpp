#include "series.hpp"

#include <cstdlib>

namespace thetakit {

double gaussian_image_sum(double offset, double spacing, double width,
                          bool alternating, const SeriesPolicy& policy,
                          const char* what) {
  require_policy(policy);
  if (!(spacing > 0.0) || !(width > 0.0)) {
    throw DomainError(std::string(what) + ": image sum needs spacing > 0 and width > 0");
  }
  const auto peak = static_cast<long>(std::lround(-offset / spacing));
  auto term = [&](long n) {
    const double u = offset + spacing * static_cast<double>(n);
    const double g = std::exp(-u * u / width);
    return (alternating && (std::labs(n) % 2 == 1)) ? -g : g;
  };
  const double ratio = std::exp(-2.0 * spacing * spacing / width);
  const double tail_factor = ratio < 1.0 ? 1.0 / (1.0 - ratio) : HUGE_VAL;

  double sum = term(peak);
  for (long k = 1; k <= policy.max_terms; ++k) {
    const double right = term(peak + k);
    const double left = term(peak - k);
    sum += right + left;
    if ((std::fabs(right) + std::fabs(left)) * ratio * tail_factor < policy.tol) {
      return sum;
    }
  }
  throw_nonconvergent(what, policy);
}

}  // namespace thetakit
