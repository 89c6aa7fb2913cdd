#include "gtclust/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

double sq_dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

ClusterState kmeans(const Dataset& d, const KMeansParams& p) {
  validate_dataset(d);
  const int n = d.size();
  if (p.k < 1 || p.k > n) {
    throw Error("kmeans needs 1 <= k <= n, got k = " + std::to_string(p.k) +
                " with n = " + std::to_string(n));
  }

  // Seed centers on k distinct data points.
  std::mt19937_64 rng(p.seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Point> centers;
  centers.reserve(static_cast<std::size_t>(p.k));
  for (int c = 0; c < p.k; ++c) {
    const std::size_t pick =
        static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(pool.size()));
    centers.push_back(d.points[static_cast<std::size_t>(pool[pick])]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }

  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (int iter = 0; iter < p.max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < p.k; ++c) {
        const double dist = sq_dist(d.points[static_cast<std::size_t>(i)],
                                    centers[static_cast<std::size_t>(c)]);
        if (dist < best_d) {
          best_d = dist;
          best = c;
        }
      }
      if (labels[static_cast<std::size_t>(i)] != best) {
        labels[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::vector<Point> sums(static_cast<std::size_t>(p.k), Point{0.0, 0.0});
    std::vector<int> counts(static_cast<std::size_t>(p.k), 0);
    for (int i = 0; i < n; ++i) {
      const int c = labels[static_cast<std::size_t>(i)];
      sums[static_cast<std::size_t>(c)].x += d.points[static_cast<std::size_t>(i)].x;
      sums[static_cast<std::size_t>(c)].y += d.points[static_cast<std::size_t>(i)].y;
      ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < p.k; ++c) {
      if (counts[static_cast<std::size_t>(c)] == 0) continue;  // keep the old center
      centers[static_cast<std::size_t>(c)] = {
          sums[static_cast<std::size_t>(c)].x / counts[static_cast<std::size_t>(c)],
          sums[static_cast<std::size_t>(c)].y / counts[static_cast<std::size_t>(c)]};
    }
  }

  ClusterState out;
  out.labels = std::move(labels);
  out.clusters.resize(static_cast<std::size_t>(p.k));
  return out;
}

ClusterState agglomerative(const Dataset& d, const AgglomerativeParams& p) {
  validate_dataset(d);
  if (!(p.threshold > 0.0)) {
    throw Error("agglomerative threshold must be positive");
  }
  const int n = d.size();
  const double limit = p.threshold * p.threshold;

  // Union-find over the <= threshold graph; identical to iterative
  // single-linkage merging while the minimum inter-cluster gap fits.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sq_dist(d.points[static_cast<std::size_t>(i)],
                  d.points[static_cast<std::size_t>(j)]) <= limit) {
        const int ri = find(i);
        const int rj = find(j);
        if (ri != rj) parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
      }
    }
  }

  ClusterState out;
  out.labels.assign(static_cast<std::size_t>(n), kNoiseLabel);
  std::vector<int> root_label(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_label[static_cast<std::size_t>(r)] < 0) {
      root_label[static_cast<std::size_t>(r)] = out.cluster_count();
      out.clusters.push_back(ClusterInfo{});
    }
    out.labels[static_cast<std::size_t>(i)] = root_label[static_cast<std::size_t>(r)];
  }
  return out;
}

ClusterState dbscan(const Dataset& d, const DbscanParams& p) {
  validate_dataset(d);
  if (!(p.eps > 0.0)) throw Error("dbscan eps must be positive");
  if (p.min_pts < 1) throw Error("dbscan min_pts must be at least 1");
  const int n = d.size();
  const double limit = p.eps * p.eps;

  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    neighbors[static_cast<std::size_t>(i)].push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sq_dist(d.points[static_cast<std::size_t>(i)],
                  d.points[static_cast<std::size_t>(j)]) <= limit) {
        neighbors[static_cast<std::size_t>(i)].push_back(j);
        neighbors[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  auto is_core = [&](int i) {
    return static_cast<int>(neighbors[static_cast<std::size_t>(i)].size()) >= p.min_pts;
  };

  ClusterState out;
  out.labels.assign(static_cast<std::size_t>(n), kNoiseLabel);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)] || !is_core(i)) continue;
    const int cluster = out.cluster_count();
    out.clusters.push_back(ClusterInfo{});
    std::deque<int> frontier{i};
    visited[static_cast<std::size_t>(i)] = true;
    out.labels[static_cast<std::size_t>(i)] = cluster;
    while (!frontier.empty()) {
      const int q = frontier.front();
      frontier.pop_front();
      for (const int nb : neighbors[static_cast<std::size_t>(q)]) {
        if (out.labels[static_cast<std::size_t>(nb)] != kNoiseLabel) continue;
        out.labels[static_cast<std::size_t>(nb)] = cluster;  // border or core
        if (is_core(nb) && !visited[static_cast<std::size_t>(nb)]) {
          visited[static_cast<std::size_t>(nb)] = true;
          frontier.push_back(nb);
        }
      }
    }
  }
  return out;
}

}  // namespace gtclust
