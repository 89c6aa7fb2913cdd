#pragma once

#include <vector>

namespace gtclust {

// Label value for points that ended up in no real cluster.
inline constexpr int kNoiseLabel = -1;

// Per-cluster record. The density-driven clusterer fills every field;
// baseline algorithms leave the fields they have no notion of at their
// defaults (center < 0 means "no center point").
struct ClusterInfo {
  int center = -1;              // index of the cluster-center point
  double center_shapley = 0.0;  // center's Shapley value (l_M)
  double beta = 0.0;            // similarity threshold used for this cluster
};

// A total labeling: labels[i] is a cluster id in [0, clusters.size()) or
// kNoiseLabel. Cluster ids are dense and ordered by creation.
struct ClusterState {
  std::vector<int> labels;
  std::vector<ClusterInfo> clusters;

  int point_count() const { return static_cast<int>(labels.size()); }
  int cluster_count() const { return static_cast<int>(clusters.size()); }
  int noise_count() const {
    int c = 0;
    for (const int l : labels) c += l == kNoiseLabel;
    return c;
  }
};

}  // namespace gtclust
