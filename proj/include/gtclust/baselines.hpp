#pragma once

#include <cstdint>

#include "gtclust/clustering.hpp"
#include "gtclust/dataset.hpp"

namespace gtclust {

struct KMeansParams {
  int k = 1;
  int max_iters = 100;
  std::uint64_t seed = 0;
};

struct AgglomerativeParams {
  double threshold = 0.0;  // merge while the closest pair of clusters is within this
};

struct DbscanParams {
  double eps = 0.0;
  int min_pts = 1;  // neighborhood counts include the point itself
};

// Lloyd iterations from k distinct seeded data points until the assignment
// stops changing or max_iters is hit. Ties in the nearest-center test go to
// the lower center id; a cluster that empties keeps its previous center.
// Throws Error when k < 1 or k > n.
ClusterState kmeans(const Dataset& d, const KMeansParams& p);

// Single-linkage clustering: clusters are the connected components of the
// graph joining every pair at distance <= threshold. Components are
// numbered by their smallest member index.
ClusterState agglomerative(const Dataset& d, const AgglomerativeParams& p);

// Classic density scan: core points (>= min_pts neighbors within eps,
// themselves included) grow clusters; border points go to the first cluster
// that reaches them in scan order; everything else is noise.
ClusterState dbscan(const Dataset& d, const DbscanParams& p);

}  // namespace gtclust
