#pragma once

#include <filesystem>
#include <vector>

#include "gtclust/matrix.hpp"

namespace gtclust {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// An ordered 2-D point set. A point's index in `points` is its identity for
// the whole pipeline (games, cluster labels, trace events).
struct Dataset {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

// Pairwise Euclidean distances plus their maximum.
struct DistanceSummary {
  SquareMatrix distances;  // symmetric, zero diagonal
  double d_max = 0.0;
};

// Similarity values 1 - d(i,j)/d_max, so every entry lies in [0,1] and the
// pair realizing d_max maps to exactly 0. The diagonal is stored as 1 for
// completeness but no game formula ever reads it (all sums skip i == j).
struct SimilarityMatrix {
  SquareMatrix values;

  int size() const { return static_cast<int>(values.size()); }
  double operator()(int i, int j) const {
    return values(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
};

// Reads one `x,y` point per line. With `has_header` the first line is
// skipped. Blank lines are ignored; anything else that does not parse as two
// finite reals raises CsvError naming the 1-based line.
Dataset load_csv(const std::filesystem::path& path, bool has_header);

// Throws Error if the dataset is empty or contains a non-finite coordinate.
void validate_dataset(const Dataset& d);

DistanceSummary compute_distances(const Dataset& d);

// Throws DegenerateDataset when d_max == 0 (the kernel divides by d_max).
SimilarityMatrix compute_similarity(const DistanceSummary& ds);

}  // namespace gtclust
