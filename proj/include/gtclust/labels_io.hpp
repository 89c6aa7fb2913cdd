#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtclust/clustering.hpp"
#include "gtclust/dataset.hpp"

namespace gtclust {

// The label document a clustering run emits: enough to re-render the plot
// and to diff runs byte for byte. Serialized as JSON with sorted keys, so
// identical runs produce identical files.
struct LabelsDocument {
  std::string algorithm;
  nlohmann::json parameters;  // algorithm-specific knobs
  nlohmann::json source;      // where the points came from (csv / generator)
  std::optional<std::uint64_t> seed;
  std::vector<Point> points;
  ClusterState state;
};

nlohmann::json labels_to_json(const LabelsDocument& doc);
LabelsDocument labels_from_json(const nlohmann::json& j);

void write_labels(const LabelsDocument& doc, const std::filesystem::path& path);
LabelsDocument read_labels(const std::filesystem::path& path);

}  // namespace gtclust
