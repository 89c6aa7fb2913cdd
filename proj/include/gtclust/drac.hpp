#pragma once

#include <span>
#include <vector>

#include "gtclust/clustering.hpp"
#include "gtclust/dataset.hpp"

namespace gtclust {

// Tuning knobs for the density-restricted clusterer: `delta` is the
// similarity threshold applied to the globally densest cluster center and
// `gamma` the fraction of the center's Shapley value a member must reach to
// keep growing the cluster. Both live in [0,1].
struct DracParams {
  double delta = 0.5;
  double gamma = 0.5;
};

enum class DracEventKind {
  CenterSelected,  // point = center, value = its Shapley value
  BetaSet,         // value = the cluster's similarity threshold
  Joined,          // point joined cluster, value = similarity to the queue head
  Enqueued,        // point entered the expansion queue, value = its Shapley value
  NoiseMarked,     // point = the lone center of a singleton cluster
};

struct DracEvent {
  DracEventKind kind;
  int point = -1;    // unused for BetaSet
  int cluster = -1;  // creation-order cluster id (pre-compaction)
  double value = 0.0;
};

// Density-restricted agglomerative clustering.
//
// The similarity matrix and per-point Shapley values are computed up front;
// each round picks the unallocated point with the maximum Shapley value
// (lowest index on ties) as a fresh cluster center, derives the cluster's
// similarity threshold beta = delta * sqrt(l_M / g_M), and grows the cluster
// through a FIFO expansion queue: every unallocated point whose similarity
// to the queue head reaches beta joins, and additionally enters the queue
// when its Shapley value reaches gamma * l_M. Candidates are scanned in
// index order. A cluster left with only its center is relabeled noise.
// Total work is O(n^2): each point joins at most once and is dequeued at
// most once, and both steps scan n candidates.
//
// Degenerate inputs: a single point is noise by definition; n >= 2 with all
// points coincident throws DegenerateDataset; an all-zero Shapley vector
// (g_M = 0, e.g. two points or an equilateral set) makes every point a
// noise singleton, since the threshold ratio is undefined and zero density
// justifies no agglomeration.
ClusterState drac_cluster(const Dataset& d, const DracParams& p);

// Same run, but returns the ordered event log. Replaying the log with
// replay_trace reproduces drac_cluster's result exactly.
std::vector<DracEvent> drac_trace(const Dataset& d, const DracParams& p);

ClusterState replay_trace(std::span<const DracEvent> events, int point_count);

}  // namespace gtclust
