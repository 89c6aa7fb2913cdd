#pragma once

#include <cstdint>
#include <string>

#include "gtclust/dataset.hpp"

namespace gtclust {

enum class Shape { Blobs, Bridge, MixedDensity, Uniform };

// Accepts "blobs", "bridge", "mixed_density", "uniform"; throws Error otherwise.
Shape parse_shape(const std::string& name);
std::string shape_name(Shape shape);

// Deterministic synthetic datasets: a fixed (shape, n, seed) triple always
// yields the same points, independent of platform or standard library. All
// layout constants live in generators.cpp and are part of the contract.
//
//   uniform        n points uniform in [0,1)^2.
//   blobs          two Gaussian blobs, split n/2 and n - n/2.
//   bridge         two dense Gaussian blobs whose centers sit 4 apart,
//                  joined by a thin single-file chain of points along an
//                  arc between them (see BridgeLayout).
//   mixed_density  one tight blob, one diffuse blob, a few isolated
//                  outliers on a far ring.
Dataset generate(Shape shape, int n, std::uint64_t seed);

// Bridge point order is blob A, then blob B, then the chain, so consumers
// (tests, plots) can recover group membership from index ranges alone.
struct BridgeLayout {
  int blob_a_count = 0;
  int blob_b_count = 0;
  int chain_count = 0;
  Point center_a;
  Point center_b;

  int blob_a_begin() const { return 0; }
  int blob_b_begin() const { return blob_a_count; }
  int chain_begin() const { return blob_a_count + blob_b_count; }
};

BridgeLayout bridge_layout(int n);

}  // namespace gtclust
