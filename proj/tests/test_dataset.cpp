#include <cmath>
#include <random>

#include "doctest.h"

#include "gtclust/clustering_game.hpp"
#include "gtclust/dataset.hpp"
#include "gtclust/errors.hpp"
#include "gtclust/generators.hpp"
#include "test_util.hpp"

using namespace gtclust;
using testutil::TempFile;

TEST_CASE("csv loading") {
  SUBCASE("plain rows in file order") {
    TempFile f("0,0\n1,0\n2,0\n");
    const Dataset d = load_csv(f.path(), false);
    REQUIRE(d.size() == 3);
    CHECK(d.points[1].x == 1.0);
    CHECK(d.points[2].x == 2.0);
  }
  SUBCASE("header is skipped when asked") {
    TempFile f("x,y\n1,2\n");
    const Dataset d = load_csv(f.path(), true);
    REQUIRE(d.size() == 1);
    CHECK(d.points[0].x == 1.0);
    CHECK(d.points[0].y == 2.0);
  }
  SUBCASE("malformed row reports its line") {
    TempFile f("0,abc\n");
    CHECK_THROWS_WITH_AS(load_csv(f.path(), false),
                         doctest::Contains("line 1"), CsvError);
  }
  SUBCASE("malformed row after valid ones") {
    TempFile f("0,0\n1,1\nnope\n");
    CHECK_THROWS_WITH_AS(load_csv(f.path(), false),
                         doctest::Contains("line 3"), CsvError);
  }
  SUBCASE("empty file is an error") {
    TempFile f("");
    CHECK_THROWS_AS(load_csv(f.path(), false), CsvError);
  }
  SUBCASE("missing file is an error") {
    CHECK_THROWS_AS(load_csv("/nonexistent/gtclust.csv", false), CsvError);
  }
  SUBCASE("decimal points and negatives parse") {
    TempFile f("-1.5,2.25\n0.125,-3\n");
    const Dataset d = load_csv(f.path(), false);
    CHECK(d.points[0].x == -1.5);
    CHECK(d.points[1].y == -3.0);
  }
}

TEST_CASE("distance summary") {
  SUBCASE("collinear triple") {
    const DistanceSummary ds = compute_distances(testutil::d3());
    CHECK(ds.d_max == 2.0);
    CHECK(ds.distances(0, 1) == 1.0);
    CHECK(ds.distances(1, 2) == 1.0);
    CHECK(ds.distances(0, 2) == 2.0);
    CHECK(ds.distances(2, 0) == 2.0);
    CHECK(ds.distances(1, 1) == 0.0);
  }
  SUBCASE("single point") {
    const DistanceSummary ds = compute_distances(Dataset{{{3.0, 4.0}}});
    CHECK(ds.distances.size() == 1);
    CHECK(ds.distances(0, 0) == 0.0);
    CHECK(ds.d_max == 0.0);
  }
  SUBCASE("3-4-5 triangle") {
    const DistanceSummary ds = compute_distances(Dataset{{{0.0, 0.0}, {3.0, 4.0}}});
    CHECK(ds.distances(0, 1) == 5.0);
  }
}

TEST_CASE("similarity matrix") {
  SUBCASE("collinear triple values") {
    const SimilarityMatrix s = compute_similarity(compute_distances(testutil::d3()));
    CHECK(s(0, 1) == 0.5);
    CHECK(s(1, 2) == 0.5);
    CHECK(s(0, 2) == 0.0);  // the d_max pair maps to exactly zero
    CHECK(s(1, 1) == 1.0);
  }
  SUBCASE("coincident points are fully similar") {
    const Dataset d{{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}};
    const SimilarityMatrix s = compute_similarity(compute_distances(d));
    CHECK(s(0, 1) == 1.0);
  }
  SUBCASE("degenerate dataset is a hard error") {
    const Dataset coincident{{{1.0, 1.0}, {1.0, 1.0}}};
    CHECK_THROWS_AS(compute_similarity(compute_distances(coincident)),
                    DegenerateDataset);
    CHECK_THROWS_AS(compute_similarity(compute_distances(Dataset{{{0.0, 0.0}}})),
                    DegenerateDataset);
  }
}

TEST_CASE("similarity invariants on random datasets") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const Dataset d = generate(Shape::Uniform, n, rng());
    const SimilarityMatrix s = compute_similarity(compute_distances(d));
    double min_off = 1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(s(i, j) == s(j, i));
        CHECK(s(i, j) >= 0.0);
        CHECK(s(i, j) <= 1.0);
        if (i != j) min_off = std::min(min_off, s(i, j));
      }
    }
    CHECK(min_off == 0.0);
  }
}

namespace {

Dataset transform(const Dataset& d, double angle, double dx, double dy, double scale) {
  Dataset out;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (const Point& p : d.points) {
    out.points.push_back({scale * (c * p.x - s * p.y) + dx,
                          scale * (s * p.x + c * p.y) + dy});
  }
  return out;
}

}  // namespace

TEST_CASE("euclidean and scale invariance") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Dataset base = generate(Shape::Uniform, n, rng());
    const double angle = static_cast<double>(rng() % 360) * 0.01745;
    const double dx = static_cast<double>(rng() % 100) * 0.1 - 5.0;
    const double dy = static_cast<double>(rng() % 100) * 0.1 - 5.0;

    const DistanceSummary base_ds = compute_distances(base);
    const DistanceSummary moved_ds =
        compute_distances(transform(base, angle, dx, dy, 1.0));
    CHECK(std::fabs(base_ds.d_max - moved_ds.d_max) <= 1e-12);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(std::fabs(base_ds.distances(i, j) - moved_ds.distances(i, j)) <= 1e-12);
      }
    }

    const double scale = 0.5 + static_cast<double>(rng() % 40) * 0.25;
    const SimilarityMatrix base_sim = compute_similarity(base_ds);
    const SimilarityMatrix scaled_sim =
        compute_similarity(compute_distances(transform(base, 0.0, 0.0, 0.0, scale)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(std::fabs(base_sim(i, j) - scaled_sim(i, j)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("generators") {
  SUBCASE("fixed seed reproduces the dataset exactly") {
    const Dataset a = generate(Shape::Uniform, 10, 42);
    const Dataset b = generate(Shape::Uniform, 10, 42);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
      CHECK(a.points[i].x == b.points[i].x);
      CHECK(a.points[i].y == b.points[i].y);
    }
  }
  SUBCASE("single-point blobs") {
    const Dataset d = generate(Shape::Blobs, 1, 0);
    CHECK(d.size() == 1);
  }
  SUBCASE("unknown shape name") {
    CHECK_THROWS_AS(parse_shape("spiral"), Error);
  }
  SUBCASE("n must be positive") {
    CHECK_THROWS_AS(generate(Shape::Uniform, 0, 1), Error);
  }
  SUBCASE("every shape produces the requested count") {
    for (const Shape shape :
         {Shape::Blobs, Shape::Bridge, Shape::MixedDensity, Shape::Uniform}) {
      CHECK(generate(shape, 97, 5).size() == 97);
    }
  }
  SUBCASE("shape names round-trip") {
    for (const Shape shape :
         {Shape::Blobs, Shape::Bridge, Shape::MixedDensity, Shape::Uniform}) {
      CHECK(parse_shape(shape_name(shape)) == shape);
    }
  }
}

TEST_CASE("bridge chain points rank strictly below both blob maxima") {
  const int n = 300;
  const Dataset d = generate(Shape::Bridge, n, 7);
  const BridgeLayout layout = bridge_layout(n);
  REQUIRE(layout.blob_a_count + layout.blob_b_count + layout.chain_count == n);

  const ClusteringGame game = testutil::game_for(d);
  const ShapleyVector phi = game.shapley();

  double blob_a_max = 0.0;
  for (int i = layout.blob_a_begin(); i < layout.blob_b_begin(); ++i) {
    blob_a_max = std::max(blob_a_max, phi.phi[static_cast<std::size_t>(i)]);
  }
  double blob_b_max = 0.0;
  for (int i = layout.blob_b_begin(); i < layout.chain_begin(); ++i) {
    blob_b_max = std::max(blob_b_max, phi.phi[static_cast<std::size_t>(i)]);
  }
  for (int i = layout.chain_begin(); i < n; ++i) {
    CHECK(phi.phi[static_cast<std::size_t>(i)] < blob_a_max);
    CHECK(phi.phi[static_cast<std::size_t>(i)] < blob_b_max);
  }
}
