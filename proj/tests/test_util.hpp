#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtclust/clustering_game.hpp"
#include "gtclust/dataset.hpp"

namespace gtclust::testutil {

// Collinear three-point set: similarities 0.5, 0.5, 0 and Shapley vector
// (0.25, 0.5, 0.25).
inline Dataset d3() {
  return Dataset{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}};
}

// Two tight pairs far apart; the hand-worked clustering splits them as
// {0,1} and {2,3}.
inline Dataset two_far_pairs() {
  return Dataset{{{0.0, 0.0}, {0.1, 0.0}, {5.0, 0.0}, {5.1, 0.0}}};
}

inline ClusteringGame game_for(const Dataset& d) {
  return ClusteringGame(compute_similarity(compute_distances(d)));
}

// Writes content to a unique file under the system temp dir; removed on
// destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& tag = "data") {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gtclust_test_" + tag + "_" + std::to_string(++counter) + ".tmp");
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace gtclust::testutil
