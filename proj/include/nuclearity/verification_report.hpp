#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nuclearity {

// Residuals below this level are treated as round-off when judging convergence.
inline constexpr double kRoundoffFloor = 1e-12;

struct VerificationReport {
  std::string identity_name;
  std::vector<int> dims_tested;
  int block = 0;
  std::vector<double> residuals;
  double tolerance = 0.0;
  bool verdict = false;
  std::vector<std::pair<std::string, double>> details;
  std::vector<std::string> notes;
};

// Non-increasing over the last three entries, ignoring increases that stay below floor.
inline bool tail_non_increasing(const std::vector<double>& values, double floor = kRoundoffFloor) {
  const std::size_t n = values.size();
  const std::size_t first = n > 3 ? n - 3 : 0;
  for (std::size_t i = first + 1; i < n; ++i) {
    if (values[i] > values[i - 1] && values[i] > floor) return false;
  }
  return true;
}

inline void finalize(VerificationReport& report) {
  report.verdict = !report.residuals.empty() && report.residuals.back() <= report.tolerance &&
                   tail_non_increasing(report.residuals);
}

}  // namespace nuclearity
