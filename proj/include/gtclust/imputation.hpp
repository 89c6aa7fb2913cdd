#pragma once

#include <vector>

namespace gtclust {

// A payoff vector, one entry per point. Whether it actually satisfies the
// imputation conditions (efficiency, individual rationality) is checked by
// the predicates in solution_concepts.hpp, not by construction.
struct Imputation {
  std::vector<double> payoffs;

  int size() const { return static_cast<int>(payoffs.size()); }
  double total() const {
    double sum = 0.0;
    for (const double v : payoffs) sum += v;
    return sum;
  }
};

}  // namespace gtclust
