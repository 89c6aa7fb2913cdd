#pragma once

#include <vector>

#include "gtclust/coalition.hpp"
#include "gtclust/dataset.hpp"
#include "gtclust/imputation.hpp"

namespace gtclust {

// Per-point payoff under the clustering game, with the global maximum that
// the clustering algorithm keys its thresholds off.
struct ShapleyVector {
  std::vector<double> phi;
  double g_max = 0.0;

  int size() const { return static_cast<int>(phi.size()); }
};

struct ExcessReport {
  Coalition coalition;
  double excess = 0.0;  // v(S) minus what S receives
};

// The transferable-utility game induced by a similarity matrix: a coalition
// is worth the sum of its members' pairwise similarities. Values are
// computed on demand; the grand-coalition value is cached.
class ClusteringGame {
 public:
  explicit ClusteringGame(SimilarityMatrix similarity);

  int player_count() const { return similarity_.size(); }
  double similarity(int i, int j) const { return similarity_(i, j); }

  // Sum over unordered pairs inside s; equivalently half the ordered-pair
  // sum. Throws std::out_of_range if s lies outside 0..n-1.
  double coalition_value(const Coalition& s) const;
  double coalition_value_mask(std::uint64_t mask) const;

  double grand_value() const { return grand_value_; }

  // Per-player value: half the player's similarity-row sum (diagonal
  // excluded). O(n^2) total.
  ShapleyVector shapley() const;

 private:
  SimilarityMatrix similarity_;
  double grand_value_ = 0.0;
};

// |v(S) - sum of v over the 2-element subsets of S|. Identically zero for
// this game family; callers assert the deviation stays below 1e-12.
double verify_pair_decomposition(const ClusteringGame& g, const Coalition& s);

// v(S) - sum_{i in S} x_i. Throws Error on dimension mismatch.
ExcessReport excess(const ClusteringGame& g, const Imputation& x, const Coalition& s);

}  // namespace gtclust
