#include "gtclust/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>

#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_real(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError("cannot open " + path.string());
  }

  Dataset d;
  std::string line;
  long line_no = 0;
  bool skipped_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (has_header && !skipped_header) {
      skipped_header = true;
      continue;
    }
    const std::string_view row = trim(line);
    const std::size_t comma = row.find(',');
    Point p;
    if (comma == std::string_view::npos || !parse_real(row.substr(0, comma), p.x) ||
        !parse_real(row.substr(comma + 1), p.y)) {
      throw CsvError("malformed row at line " + std::to_string(line_no) + " in " +
                     path.string() + ": expected `x,y`");
    }
    d.points.push_back(p);
  }
  if (in.bad()) {
    throw CsvError("I/O failure while reading " + path.string());
  }
  if (d.points.empty()) {
    throw CsvError("empty dataset: " + path.string());
  }
  return d;
}

void validate_dataset(const Dataset& d) {
  if (d.points.empty()) {
    throw Error("dataset must contain at least one point");
  }
  for (const Point& p : d.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error("dataset contains a non-finite coordinate");
    }
  }
}

DistanceSummary compute_distances(const Dataset& d) {
  validate_dataset(d);
  const std::size_t n = d.points.size();
  DistanceSummary out;
  out.distances = SquareMatrix(n, 0.0);
  out.d_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = d.points[i].x - d.points[j].x;
      const double dy = d.points[i].y - d.points[j].y;
      const double dist = std::sqrt(dx * dx + dy * dy);
      out.distances(i, j) = dist;
      out.distances(j, i) = dist;
      if (dist > out.d_max) out.d_max = dist;
    }
  }
  return out;
}

SimilarityMatrix compute_similarity(const DistanceSummary& ds) {
  const std::size_t n = ds.distances.size();
  if (ds.d_max <= 0.0) {
    throw DegenerateDataset(
        "similarity undefined: all pairwise distances are zero (d_max = 0)");
  }
  SimilarityMatrix sim;
  sim.values = SquareMatrix(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 1.0 - ds.distances(i, j) / ds.d_max;
      sim.values(i, j) = s;
      sim.values(j, i) = s;
    }
  }
  return sim;
}

}  // namespace gtclust
