#include "gtclust/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtclust/clustering_game.hpp"
#include "gtclust/labels_io.hpp"
#include "gtclust/svg.hpp"
#include "gtclust/verification.hpp"

namespace gtclust {

namespace {

using nlohmann::json;

struct LoadedInput {
  Dataset data;
  json source;
  std::optional<std::uint64_t> seed;
};

LoadedInput load_input(const ClusterCommand& cfg) {
  const bool from_file = cfg.input_csv.has_value();
  const bool from_generator = cfg.generate_shape.has_value();
  if (from_file == from_generator) {
    throw UsageError("provide exactly one input: --input or --generate");
  }
  LoadedInput in;
  if (from_file) {
    in.data = load_csv(*cfg.input_csv, cfg.has_header);
    in.source = {{"type", "csv"}, {"path", *cfg.input_csv}};
  } else {
    const Shape shape = parse_shape(*cfg.generate_shape);
    if (cfg.generate_n < 1) throw UsageError("--n must be at least 1");
    in.data = generate(shape, cfg.generate_n, cfg.seed);
    in.source = {{"type", "generator"},
                 {"shape", shape_name(shape)},
                 {"n", cfg.generate_n}};
    in.seed = cfg.seed;
  }
  return in;
}

struct RunOutcome {
  ClusterState state;
  json parameters;
};

RunOutcome run_algorithm(const ClusterCommand& cfg, const Dataset& data) {
  RunOutcome out;
  if (cfg.algorithm == "drac") {
    out.state = drac_cluster(data, cfg.drac);
    out.parameters = {{"delta", cfg.drac.delta}, {"gamma", cfg.drac.gamma}};
  } else if (cfg.algorithm == "kmeans") {
    KMeansParams p = cfg.kmeans;
    p.seed = cfg.seed;  // all randomness flows through --seed
    out.state = kmeans(data, p);
    out.parameters = {{"k", p.k}, {"max_iters", p.max_iters}};
  } else if (cfg.algorithm == "agglomerative") {
    out.state = agglomerative(data, cfg.agglomerative);
    out.parameters = {{"threshold", cfg.agglomerative.threshold}};
  } else if (cfg.algorithm == "dbscan") {
    out.state = dbscan(data, cfg.dbscan);
    out.parameters = {{"eps", cfg.dbscan.eps}, {"min_pts", cfg.dbscan.min_pts}};
  } else {
    throw UsageError("unknown algorithm: " + cfg.algorithm +
                     " (expected drac, kmeans, agglomerative or dbscan)");
  }
  return out;
}

std::vector<int> center_indices(const ClusterState& state) {
  std::vector<int> centers;
  for (const ClusterInfo& c : state.clusters) {
    if (c.center >= 0) centers.push_back(c.center);
  }
  return centers;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw Error("failed writing: " + path.string());
}

}  // namespace

int cmd_cluster(const ClusterCommand& cfg, std::ostream& out) {
  if (cfg.labels_path.empty()) throw UsageError("--labels is required");
  const LoadedInput in = load_input(cfg);
  const RunOutcome run = run_algorithm(cfg, in.data);

  LabelsDocument doc;
  doc.algorithm = cfg.algorithm;
  doc.parameters = run.parameters;
  doc.source = in.source;
  doc.seed = in.seed.has_value() || cfg.algorithm == "kmeans"
                 ? std::optional<std::uint64_t>(cfg.seed)
                 : std::nullopt;
  doc.points = in.data.points;
  doc.state = run.state;
  write_labels(doc, cfg.labels_path);

  if (cfg.svg_path) {
    write_text_file(*cfg.svg_path,
                    render_scatter_svg(doc.points, doc.state.labels,
                                       center_indices(doc.state)));
  }
  out << "clustered " << in.data.size() << " points with " << cfg.algorithm
      << ": " << run.state.cluster_count() << " cluster(s), "
      << run.state.noise_count() << " noise point(s)\n";
  return kExitOk;
}

int cmd_generate(const GenerateCommand& cfg, std::ostream& out) {
  if (cfg.output.empty()) throw UsageError("--output is required");
  const Dataset data = generate(parse_shape(cfg.shape), cfg.n, cfg.seed);
  std::string text;
  char buf[80];
  for (const Point& p : data.points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
    text += buf;
  }
  write_text_file(cfg.output, text);
  out << "wrote " << data.size() << " points to " << cfg.output << "\n";
  return kExitOk;
}

int cmd_verify_coincidence(const VerifyCommand& cfg, std::ostream& out) {
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (cfg.n_min < 3 || cfg.n_max > 8 || cfg.n_min > cfg.n_max) {
    throw UsageError("need 3 <= --n-min <= --n-max <= 8");
  }
  const CoincidenceReport report =
      run_coincidence(cfg.trials, cfg.n_min, cfg.n_max, cfg.seed);

  char line[160];
  for (const CoincidenceTrial& t : report.trials) {
    if (t.degenerate) {
      std::snprintf(line, sizeof(line),
                    "trial %4d  n=%d seed=%llu  skipped: DegenerateGame (v(N) = 0)",
                    t.index, t.n, static_cast<unsigned long long>(t.seed));
    } else if (!t.error.empty()) {
      std::snprintf(line, sizeof(line), "trial %4d  n=%d seed=%llu  solver failure: %s",
                    t.index, t.n, static_cast<unsigned long long>(t.seed),
                    t.error.c_str());
    } else {
      std::snprintf(line, sizeof(line),
                    "trial %4d  n=%d seed=%llu  max_dev=%.3e  lambda=%.15f",
                    t.index, t.n, static_cast<unsigned long long>(t.seed),
                    t.max_deviation, t.lambda);
    }
    out << line << "\n";
  }
  const bool dev_ok = report.max_deviation <= cfg.tolerance;
  out << "trials: " << report.trials.size() << "  degenerate: " << report.degenerate_count
      << "  solver failures: " << report.failed_count << "\n";
  std::snprintf(line, sizeof(line), "max pairwise deviation: %.3e (tolerance %.3e)",
                report.max_deviation, cfg.tolerance);
  out << line << "\n";
  std::snprintf(line, sizeof(line), "max |lambda - 1/2|: %.3e", report.max_lambda_gap);
  out << line << "\n";
  std::snprintf(line, sizeof(line), "max |propensity - 1|: %.3e",
                report.max_propensity_gap);
  out << line << "\n";
  if (!dev_ok) {
    out << "FAIL: deviation above tolerance\n";
    return kExitVerificationFailed;
  }
  if (report.failed_count > 0) {
    out << "FAIL: solver failures\n";
    return kExitRuntime;
  }
  out << "PASS\n";
  return kExitOk;
}

std::vector<BenchRow> bench_drac(const std::vector<int>& sizes, std::uint64_t seed,
                                 int repeats) {
  std::vector<BenchRow> rows;
  const DracParams params{0.8, 0.8};
  for (const int n : sizes) {
    const Dataset data = generate(Shape::Uniform, n, seed);
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(repeats, 1); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const ClusterState state = drac_cluster(data, params);
      const auto stop = std::chrono::steady_clock::now();
      if (state.point_count() != n) throw Error("bench run produced a bad labeling");
      best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    rows.push_back(BenchRow{n, best});
  }
  return rows;
}

int cmd_bench(const BenchCommand& cfg, std::ostream& out) {
  if (cfg.sizes.empty()) throw UsageError("--sizes is required");
  for (const int n : cfg.sizes) {
    if (n < 1) throw UsageError("bench sizes must be positive");
  }
  const std::vector<BenchRow> rows = bench_drac(cfg.sizes, cfg.seed, cfg.repeats);
  char line[160];
  out << "size      seconds    vs-first   quadratic-predicts\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0 || rows[0].seconds <= 0.0) {
      std::snprintf(line, sizeof(line), "%-8d  %9.4f", rows[i].n, rows[i].seconds);
    } else {
      const double ratio = rows[i].seconds / rows[0].seconds;
      const double predicted = static_cast<double>(rows[i].n) / rows[0].n;
      std::snprintf(line, sizeof(line), "%-8d  %9.4f  %8.2fx  %8.2fx", rows[i].n,
                    rows[i].seconds, ratio, predicted * predicted);
    }
    out << line << "\n";
  }
  return kExitOk;
}

int cmd_plot(const PlotCommand& cfg, std::ostream& out) {
  if (cfg.labels_path.empty() || cfg.svg_path.empty()) {
    throw UsageError("--labels and --svg are required");
  }
  const LabelsDocument doc = read_labels(cfg.labels_path);
  write_text_file(cfg.svg_path,
                  render_scatter_svg(doc.points, doc.state.labels,
                                     center_indices(doc.state)));
  out << "rendered " << doc.points.size() << " points to " << cfg.svg_path << "\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Game-theoretic clustering toolkit"};
  app.require_subcommand(1);

  ClusterCommand cluster_cfg;
  CLI::App* cluster = app.add_subcommand("cluster", "Cluster a dataset and emit labels");
  {
    std::string input, gen_shape;
    auto* input_opt = cluster->add_option("--input", input, "CSV file of x,y points");
    cluster->add_flag("--has-header", cluster_cfg.has_header,
                      "Skip the first CSV line");
    auto* gen_opt = cluster->add_option("--generate", gen_shape,
                                        "Generator shape instead of a file");
    input_opt->excludes(gen_opt);
    cluster->add_option("--n", cluster_cfg.generate_n, "Generator point count");
    cluster->add_option("--seed", cluster_cfg.seed, "Seed for generator and kmeans");
    cluster->add_option("--algorithm", cluster_cfg.algorithm,
                        "drac | kmeans | agglomerative | dbscan")
        ->required();
    cluster->add_option("--delta", cluster_cfg.drac.delta, "drac similarity threshold");
    cluster->add_option("--gamma", cluster_cfg.drac.gamma, "drac Shapley multiplicity");
    cluster->add_option("--k", cluster_cfg.kmeans.k, "kmeans cluster count");
    cluster->add_option("--max-iters", cluster_cfg.kmeans.max_iters, "kmeans iterations");
    cluster->add_option("--threshold", cluster_cfg.agglomerative.threshold,
                        "agglomerative merge threshold");
    cluster->add_option("--eps", cluster_cfg.dbscan.eps, "dbscan radius");
    cluster->add_option("--min-pts", cluster_cfg.dbscan.min_pts, "dbscan core size");
    cluster->add_option("--labels", cluster_cfg.labels_path, "Labels JSON output")
        ->required();
    std::string svg;
    cluster->add_option("--plot", svg, "SVG scatter output");
    cluster->callback([&cluster_cfg, &input, &gen_shape, &svg, input_opt, gen_opt,
                       cluster]() {
      if (input_opt->count() > 0) cluster_cfg.input_csv = input;
      if (gen_opt->count() > 0) cluster_cfg.generate_shape = gen_shape;
      if (cluster->get_option("--plot")->count() > 0) cluster_cfg.svg_path = svg;
    });
  }

  GenerateCommand generate_cfg;
  CLI::App* gen = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
  gen->add_option("--shape", generate_cfg.shape,
                  "blobs | bridge | mixed_density | uniform")
      ->required();
  gen->add_option("--n", generate_cfg.n, "Point count")->required();
  gen->add_option("--seed", generate_cfg.seed, "Generator seed");
  gen->add_option("--output", generate_cfg.output, "CSV output path")->required();

  VerifyCommand verify_cfg;
  CLI::App* verify = app.add_subcommand(
      "verify-coincidence", "Check that the solution concepts coincide");
  verify->add_option("--trials", verify_cfg.trials, "Trial count");
  verify->add_option("--n-min", verify_cfg.n_min, "Smallest game size");
  verify->add_option("--n-max", verify_cfg.n_max, "Largest game size");
  verify->add_option("--seed", verify_cfg.seed, "Base seed");
  verify->add_option("--tolerance", verify_cfg.tolerance, "Max allowed deviation");

  BenchCommand bench_cfg;
  CLI::App* bench = app.add_subcommand("bench", "Time clustering runs per size");
  bench->add_option("--sizes", bench_cfg.sizes, "Point counts to time")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", bench_cfg.seed, "Generator seed");
  bench->add_option("--repeats", bench_cfg.repeats, "Runs per size (best kept)");

  PlotCommand plot_cfg;
  CLI::App* plot = app.add_subcommand("plot", "Render an SVG from a labels file");
  plot->add_option("--labels", plot_cfg.labels_path, "Labels JSON input")->required();
  plot->add_option("--svg", plot_cfg.svg_path, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cluster->parsed()) return cmd_cluster(cluster_cfg, std::cout);
    if (gen->parsed()) return cmd_generate(generate_cfg, std::cout);
    if (verify->parsed()) return cmd_verify_coincidence(verify_cfg, std::cout);
    if (bench->parsed()) return cmd_bench(bench_cfg, std::cout);
    if (plot->parsed()) return cmd_plot(plot_cfg, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace gtclust
