#include "gtclust/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

// mt19937_64 output is fully specified by the standard; the distributions
// below are hand-pinned so generated datasets are bit-identical everywhere
// (std::normal_distribution et al. are implementation-defined).
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; consumes exactly two draws per call.
double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Point gaussian_point(std::mt19937_64& rng, Point center, double sigma) {
  const double gx = gaussian(rng);
  const double gy = gaussian(rng);
  return {center.x + sigma * gx, center.y + sigma * gy};
}

// --- blobs ---
constexpr Point kBlobsCenterA{-1.5, 0.0};
constexpr Point kBlobsCenterB{1.5, 0.0};
constexpr double kBlobsSigma = 0.4;

// --- bridge ---
// Blob centers 4 apart, tight spread. The chain runs along a parabolic arc
// that bows away from the blob axis: a straight chain would pass through the
// dataset's distance median and its points would dominate the Shapley
// ranking, which is exactly what the generator must avoid. Chain points are
// equally spaced in arc length so no chain gap exceeds a blob's internal
// single-linkage gaps.
constexpr Point kBridgeCenterA{0.0, 0.0};
constexpr Point kBridgeCenterB{4.0, 0.0};
constexpr double kBridgeSigma = 0.22;
constexpr double kBridgeArcHeight = 2.2;     // apex of the chain arc
constexpr double kBridgeChainInset = 0.55;   // chain endpoints sit this far from blob centers
constexpr double kBridgeBlobShare = 0.44;    // fraction of n per blob

// --- mixed density ---
constexpr Point kTightCenter{0.0, 0.0};
constexpr double kTightSigma = 0.15;
constexpr Point kDiffuseCenter{4.5, 0.0};
constexpr double kDiffuseSigma = 0.9;
constexpr double kTightShare = 0.60;
constexpr double kOutlierShare = 0.05;
constexpr Point kOutlierRingCenter{2.0, 1.0};
constexpr double kOutlierRingRadius = 6.0;

Point bridge_arc(double t) {
  const double x0 = kBridgeCenterA.x + kBridgeChainInset;
  const double x1 = kBridgeCenterB.x - kBridgeChainInset;
  return {x0 + t * (x1 - x0), kBridgeArcHeight * 4.0 * t * (1.0 - t)};
}

// Equal arc-length parameters for `count` chain points (endpoints excluded).
std::vector<double> arc_length_params(int count) {
  constexpr int kSteps = 4096;
  std::vector<double> cumulative(kSteps + 1, 0.0);
  Point prev = bridge_arc(0.0);
  for (int k = 1; k <= kSteps; ++k) {
    const Point cur = bridge_arc(static_cast<double>(k) / kSteps);
    cumulative[k] =
        cumulative[k - 1] + std::hypot(cur.x - prev.x, cur.y - prev.y);
    prev = cur;
  }
  const double total = cumulative.back();
  std::vector<double> params;
  params.reserve(count);
  int k = 0;
  for (int i = 1; i <= count; ++i) {
    const double target = total * i / (count + 1);
    while (k < kSteps && cumulative[k + 1] < target) ++k;
    const double seg = cumulative[k + 1] - cumulative[k];
    const double frac = seg > 0.0 ? (target - cumulative[k]) / seg : 0.0;
    params.push_back((k + frac) / kSteps);
  }
  return params;
}

Dataset generate_uniform(int n, std::mt19937_64& rng) {
  Dataset d;
  d.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = uniform01(rng);
    const double y = uniform01(rng);
    d.points.push_back({x, y});
  }
  return d;
}

Dataset generate_blobs(int n, std::mt19937_64& rng) {
  Dataset d;
  d.points.reserve(n);
  const int a = n / 2 + n % 2;
  for (int i = 0; i < a; ++i) {
    d.points.push_back(gaussian_point(rng, kBlobsCenterA, kBlobsSigma));
  }
  for (int i = a; i < n; ++i) {
    d.points.push_back(gaussian_point(rng, kBlobsCenterB, kBlobsSigma));
  }
  return d;
}

Dataset generate_bridge(int n, std::mt19937_64& rng) {
  const BridgeLayout layout = bridge_layout(n);
  Dataset d;
  d.points.reserve(n);
  for (int i = 0; i < layout.blob_a_count; ++i) {
    d.points.push_back(gaussian_point(rng, layout.center_a, kBridgeSigma));
  }
  for (int i = 0; i < layout.blob_b_count; ++i) {
    d.points.push_back(gaussian_point(rng, layout.center_b, kBridgeSigma));
  }
  for (const double t : arc_length_params(layout.chain_count)) {
    d.points.push_back(bridge_arc(t));
  }
  return d;
}

Dataset generate_mixed_density(int n, std::mt19937_64& rng) {
  Dataset d;
  d.points.reserve(n);
  int outliers = static_cast<int>(std::floor(kOutlierShare * n));
  int tight = static_cast<int>(std::floor(kTightShare * n));
  if (tight == 0) tight = n - outliers;  // tiny n: favor the tight blob
  const int diffuse = n - tight - outliers;
  for (int i = 0; i < tight; ++i) {
    d.points.push_back(gaussian_point(rng, kTightCenter, kTightSigma));
  }
  for (int i = 0; i < diffuse; ++i) {
    d.points.push_back(gaussian_point(rng, kDiffuseCenter, kDiffuseSigma));
  }
  for (int i = 0; i < outliers; ++i) {
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    d.points.push_back({kOutlierRingCenter.x + kOutlierRingRadius * std::cos(angle),
                        kOutlierRingCenter.y + kOutlierRingRadius * std::sin(angle)});
  }
  return d;
}

}  // namespace

Shape parse_shape(const std::string& name) {
  if (name == "blobs") return Shape::Blobs;
  if (name == "bridge") return Shape::Bridge;
  if (name == "mixed_density") return Shape::MixedDensity;
  if (name == "uniform") return Shape::Uniform;
  throw Error("unknown generator shape: " + name);
}

std::string shape_name(Shape shape) {
  switch (shape) {
    case Shape::Blobs: return "blobs";
    case Shape::Bridge: return "bridge";
    case Shape::MixedDensity: return "mixed_density";
    case Shape::Uniform: return "uniform";
  }
  return "?";
}

BridgeLayout bridge_layout(int n) {
  BridgeLayout layout;
  layout.blob_a_count = static_cast<int>(std::floor(kBridgeBlobShare * n));
  layout.blob_b_count = layout.blob_a_count;
  layout.chain_count = n - layout.blob_a_count - layout.blob_b_count;
  layout.center_a = kBridgeCenterA;
  layout.center_b = kBridgeCenterB;
  return layout;
}

Dataset generate(Shape shape, int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error("generator needs n >= 1");
  }
  std::mt19937_64 rng(seed);
  Dataset d;
  switch (shape) {
    case Shape::Uniform: d = generate_uniform(n, rng); break;
    case Shape::Blobs: d = generate_blobs(n, rng); break;
    case Shape::Bridge: d = generate_bridge(n, rng); break;
    case Shape::MixedDensity: d = generate_mixed_density(n, rng); break;
  }
  validate_dataset(d);
  return d;
}

}  // namespace gtclust
