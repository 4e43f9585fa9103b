#pragma once

#include <boost/math/special_functions/gamma.hpp>
#include <map>
#include <vector>

namespace testing_stats {

// Pearson chi-square goodness of fit; bins with expected count < 5 are
// pooled into one. Returns the p-value.
inline double chi_square_gof(const std::map<long, long>& counts,
                             const std::map<long, double>& probs, long total) {
  double stat = 0.0;
  int bins = 0;
  double pooled_expected = 0.0;
  double pooled_observed = 0.0;
  for (const auto& [n, p] : probs) {
    const double expected = p * static_cast<double>(total);
    const auto it = counts.find(n);
    const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    if (expected < 5.0) {
      pooled_expected += expected;
      pooled_observed += observed;
      continue;
    }
    stat += (observed - expected) * (observed - expected) / expected;
    ++bins;
  }
  for (const auto& [n, count] : counts) {
    if (probs.find(n) == probs.end()) {
      pooled_observed += static_cast<double>(count);
    }
  }
  if (pooled_expected > 0.0) {
    stat += (pooled_observed - pooled_expected) * (pooled_observed - pooled_expected) /
            pooled_expected;
    ++bins;
  }
  return boost::math::gamma_q(0.5 * (bins - 1), 0.5 * stat);
}

// Two-sample chi-square homogeneity test for equal sample sizes; bins with
// fewer than 10 combined counts are pooled.
inline double chi_square_two_sample(const std::map<long, long>& a, const std::map<long, long>& b) {
  std::map<long, std::pair<double, double>> joint;
  for (const auto& [n, c] : a) joint[n].first += static_cast<double>(c);
  for (const auto& [n, c] : b) joint[n].second += static_cast<double>(c);
  std::vector<std::pair<double, double>> bins;
  std::pair<double, double> pooled{0.0, 0.0};
  for (const auto& [n, cells] : joint) {
    if (cells.first + cells.second < 10.0) {
      pooled.first += cells.first;
      pooled.second += cells.second;
    } else {
      bins.push_back(cells);
    }
  }
  if (pooled.first + pooled.second > 0.0) bins.push_back(pooled);
  double stat = 0.0;
  for (const auto& [x, y] : bins) {
    stat += (x - y) * (x - y) / (x + y);
  }
  return boost::math::gamma_q(0.5 * (static_cast<double>(bins.size()) - 1), 0.5 * stat);
}

}  // namespace testing_stats
