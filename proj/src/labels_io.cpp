#include "gtclust/labels_io.hpp"

#include <fstream>

#include "gtclust/errors.hpp"

namespace gtclust {

using nlohmann::json;

json labels_to_json(const LabelsDocument& doc) {
  json clusters = json::array();
  for (int id = 0; id < doc.state.cluster_count(); ++id) {
    const ClusterInfo& info = doc.state.clusters[static_cast<std::size_t>(id)];
    json c;
    c["id"] = id;
    if (info.center >= 0) {
      c["center"] = info.center;
      c["center_shapley"] = info.center_shapley;
      c["beta"] = info.beta;
    }
    clusters.push_back(std::move(c));
  }
  json points = json::array();
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    points.push_back({{"index", i},
                      {"x", doc.points[i].x},
                      {"y", doc.points[i].y},
                      {"label", doc.state.labels[i]}});
  }
  json j;
  j["algorithm"] = doc.algorithm;
  j["parameters"] = doc.parameters;
  j["source"] = doc.source;
  if (doc.seed) {
    j["seed"] = *doc.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["clusters"] = std::move(clusters);
  j["points"] = std::move(points);
  return j;
}

LabelsDocument labels_from_json(const json& j) {
  LabelsDocument doc;
  doc.algorithm = j.at("algorithm").get<std::string>();
  doc.parameters = j.at("parameters");
  doc.source = j.value("source", json(nullptr));
  if (j.contains("seed") && !j.at("seed").is_null()) {
    doc.seed = j.at("seed").get<std::uint64_t>();
  }
  for (const json& c : j.at("clusters")) {
    ClusterInfo info;
    if (c.contains("center")) {
      info.center = c.at("center").get<int>();
      info.center_shapley = c.value("center_shapley", 0.0);
      info.beta = c.value("beta", 0.0);
    }
    doc.state.clusters.push_back(info);
  }
  for (const json& p : j.at("points")) {
    doc.points.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
    doc.state.labels.push_back(p.at("label").get<int>());
  }
  return doc;
}

void write_labels(const LabelsDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open labels file for writing: " + path.string());
  }
  out << labels_to_json(doc).dump(2) << '\n';
  if (!out) {
    throw Error("failed writing labels file: " + path.string());
  }
}

LabelsDocument read_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open labels file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("labels file " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    return labels_from_json(j);
  } catch (const json::exception& e) {
    throw Error("labels file " + path.string() + " has unexpected shape: " + e.what());
  }
}

}  // namespace gtclust
