#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtclust {

// One coincidence trial: a seeded random dataset with all five payoff
// vectors computed and compared in the max norm.
struct CoincidenceTrial {
  int index = 0;
  int n = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;        // v(N) = 0, nothing to compare
  std::string error;              // nonempty if a solver failed
  double max_deviation = 0.0;     // max pairwise L-inf over the five vectors
  double lambda = 0.0;
  double max_propensity_gap = 0.0;  // max |d_i - 1| over defined entries
};

struct CoincidenceReport {
  std::vector<CoincidenceTrial> trials;
  double max_deviation = 0.0;
  double max_lambda_gap = 0.0;      // max |lambda - 1/2|
  double max_propensity_gap = 0.0;
  int degenerate_count = 0;
  int failed_count = 0;             // solver errors
};

// Runs `trials` seeded trials with n cycling over [n_min, n_max], points
// uniform in the unit square. Each trial is seeded as base_seed + index, so
// trials are independent of one another.
CoincidenceReport run_coincidence(int trials, int n_min, int n_max,
                                  std::uint64_t base_seed);

}  // namespace gtclust
