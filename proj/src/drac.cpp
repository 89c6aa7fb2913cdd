#include "gtclust/drac.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "gtclust/clustering_game.hpp"
#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

void validate_params(const DracParams& p) {
  if (!(p.delta >= 0.0 && p.delta <= 1.0)) {
    throw Error("delta must lie in [0,1], got " + std::to_string(p.delta));
  }
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) {
    throw Error("gamma must lie in [0,1], got " + std::to_string(p.gamma));
  }
}

struct RawCluster {
  ClusterInfo info;
  int member_count = 0;
  bool noise = false;
};

// Drops noise singletons and renumbers the surviving clusters in creation
// order; noise points keep kNoiseLabel.
ClusterState compact(const std::vector<int>& raw_labels,
                     const std::vector<RawCluster>& raw) {
  std::vector<int> remap(raw.size(), kNoiseLabel);
  ClusterState out;
  for (std::size_t c = 0; c < raw.size(); ++c) {
    if (raw[c].noise) continue;
    remap[c] = out.cluster_count();
    out.clusters.push_back(raw[c].info);
  }
  out.labels.reserve(raw_labels.size());
  for (const int l : raw_labels) {
    out.labels.push_back(l == kNoiseLabel ? kNoiseLabel : remap[static_cast<std::size_t>(l)]);
  }
  return out;
}

ClusterState run(const Dataset& d, const DracParams& p, std::vector<DracEvent>* trace) {
  validate_dataset(d);
  validate_params(p);
  const int n = d.size();

  auto emit = [&](DracEventKind kind, int point, int cluster, double value) {
    if (trace) trace->push_back(DracEvent{kind, point, cluster, value});
  };

  if (n == 1) {
    emit(DracEventKind::CenterSelected, 0, 0, 0.0);
    emit(DracEventKind::BetaSet, -1, 0, 0.0);
    emit(DracEventKind::NoiseMarked, 0, 0, 0.0);
    ClusterState out;
    out.labels.assign(1, kNoiseLabel);
    return out;
  }

  const SimilarityMatrix sim = compute_similarity(compute_distances(d));
  const ClusteringGame game(sim);
  const ShapleyVector shapley = game.shapley();

  std::vector<int> raw_labels(static_cast<std::size_t>(n), kNoiseLabel);
  std::vector<RawCluster> raw;
  std::vector<bool> allocated(static_cast<std::size_t>(n), false);
  int allocated_count = 0;

  // Points in non-increasing Shapley order, lower index first on ties; the
  // next cluster center is the first unallocated entry.
  std::vector<int> by_shapley(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_shapley[static_cast<std::size_t>(i)] = i;
  std::stable_sort(by_shapley.begin(), by_shapley.end(), [&](int a, int b) {
    return shapley.phi[static_cast<std::size_t>(a)] >
           shapley.phi[static_cast<std::size_t>(b)];
  });
  std::size_t cursor = 0;

  const bool all_zero = !(shapley.g_max > 0.0);

  while (allocated_count < n) {
    while (allocated[static_cast<std::size_t>(by_shapley[cursor])]) ++cursor;
    const int center = by_shapley[cursor];
    const double center_value = shapley.phi[static_cast<std::size_t>(center)];
    const int cluster = static_cast<int>(raw.size());

    RawCluster rc;
    rc.info.center = center;
    rc.info.center_shapley = center_value;
    // With g_M = 0 the ratio l_M/g_M is undefined and no point may
    // agglomerate; beta is recorded as 0 and the queue is never grown.
    rc.info.beta =
        all_zero ? 0.0 : p.delta * std::sqrt(center_value / shapley.g_max);
    rc.member_count = 1;

    raw_labels[static_cast<std::size_t>(center)] = cluster;
    allocated[static_cast<std::size_t>(center)] = true;
    ++allocated_count;
    emit(DracEventKind::CenterSelected, center, cluster, center_value);
    emit(DracEventKind::BetaSet, -1, cluster, rc.info.beta);

    std::deque<int> queue;
    queue.push_back(center);
    while (!queue.empty() && !all_zero) {
      const int head = queue.front();
      for (int q = 0; q < n; ++q) {
        if (allocated[static_cast<std::size_t>(q)]) continue;
        const double s = sim(q, head);
        if (s < rc.info.beta) continue;
        raw_labels[static_cast<std::size_t>(q)] = cluster;
        allocated[static_cast<std::size_t>(q)] = true;
        ++allocated_count;
        ++rc.member_count;
        emit(DracEventKind::Joined, q, cluster, s);
        if (shapley.phi[static_cast<std::size_t>(q)] >= p.gamma * center_value) {
          queue.push_back(q);
          emit(DracEventKind::Enqueued, q, cluster,
               shapley.phi[static_cast<std::size_t>(q)]);
        }
      }
      queue.pop_front();
    }

    if (rc.member_count == 1) {
      rc.noise = true;
      raw_labels[static_cast<std::size_t>(center)] = kNoiseLabel;
      emit(DracEventKind::NoiseMarked, center, cluster, 0.0);
    }
    raw.push_back(rc);
  }

  return compact(raw_labels, raw);
}

}  // namespace

ClusterState drac_cluster(const Dataset& d, const DracParams& p) {
  return run(d, p, nullptr);
}

std::vector<DracEvent> drac_trace(const Dataset& d, const DracParams& p) {
  std::vector<DracEvent> events;
  run(d, p, &events);
  return events;
}

ClusterState replay_trace(std::span<const DracEvent> events, int point_count) {
  std::vector<int> labels(static_cast<std::size_t>(point_count), kNoiseLabel);
  struct Rec {
    ClusterInfo info;
    bool noise = false;
  };
  std::vector<Rec> recs;
  for (const DracEvent& e : events) {
    switch (e.kind) {
      case DracEventKind::CenterSelected:
        recs.resize(static_cast<std::size_t>(e.cluster) + 1);
        recs[static_cast<std::size_t>(e.cluster)].info.center = e.point;
        recs[static_cast<std::size_t>(e.cluster)].info.center_shapley = e.value;
        labels[static_cast<std::size_t>(e.point)] = e.cluster;
        break;
      case DracEventKind::BetaSet:
        recs[static_cast<std::size_t>(e.cluster)].info.beta = e.value;
        break;
      case DracEventKind::Joined:
        labels[static_cast<std::size_t>(e.point)] = e.cluster;
        break;
      case DracEventKind::Enqueued:
        break;
      case DracEventKind::NoiseMarked:
        recs[static_cast<std::size_t>(e.cluster)].noise = true;
        labels[static_cast<std::size_t>(e.point)] = kNoiseLabel;
        break;
    }
  }
  ClusterState out;
  std::vector<int> remap(recs.size(), kNoiseLabel);
  for (std::size_t c = 0; c < recs.size(); ++c) {
    if (recs[c].noise) continue;
    remap[c] = out.cluster_count();
    out.clusters.push_back(recs[c].info);
  }
  out.labels.reserve(labels.size());
  for (const int l : labels) {
    out.labels.push_back(l == kNoiseLabel ? kNoiseLabel : remap[static_cast<std::size_t>(l)]);
  }
  return out;
}

}  // namespace gtclust
