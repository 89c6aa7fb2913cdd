#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtclust/baselines.hpp"
#include "gtclust/drac.hpp"
#include "gtclust/errors.hpp"
#include "gtclust/generators.hpp"

namespace gtclust {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

// A usage-level problem (bad flag combination, unknown algorithm); maps to
// exit code 2 rather than 3.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ClusterCommand {
  std::optional<std::string> input_csv;
  bool has_header = false;
  std::optional<std::string> generate_shape;
  int generate_n = 0;
  std::uint64_t seed = 0;
  std::string algorithm;  // drac | kmeans | agglomerative | dbscan
  DracParams drac;
  KMeansParams kmeans;
  AgglomerativeParams agglomerative;
  DbscanParams dbscan;
  std::string labels_path;
  std::optional<std::string> svg_path;
};

struct GenerateCommand {
  std::string shape;
  int n = 0;
  std::uint64_t seed = 0;
  std::string output;
};

struct VerifyCommand {
  int trials = 200;
  int n_min = 3;
  int n_max = 8;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
};

struct BenchCommand {
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  int repeats = 3;
};

struct PlotCommand {
  std::string labels_path;
  std::string svg_path;
};

int cmd_cluster(const ClusterCommand& cfg, std::ostream& out);
int cmd_generate(const GenerateCommand& cfg, std::ostream& out);
int cmd_verify_coincidence(const VerifyCommand& cfg, std::ostream& out);
int cmd_bench(const BenchCommand& cfg, std::ostream& out);
int cmd_plot(const PlotCommand& cfg, std::ostream& out);

// Per-size wall time of a full clustering run (distances, similarities,
// Shapley vector, clustering) on the uniform generator; `repeats` runs,
// best time kept.
struct BenchRow {
  int n = 0;
  double seconds = 0.0;
};
std::vector<BenchRow> bench_drac(const std::vector<int>& sizes, std::uint64_t seed,
                                 int repeats);

// Full argv entry point; never throws.
int run_cli(int argc, const char* const* argv);

}  // namespace gtclust
