#include "gtclust/verification.hpp"

#include <algorithm>
#include <cmath>

#include "gtclust/clustering_game.hpp"
#include "gtclust/dataset.hpp"
#include "gtclust/errors.hpp"
#include "gtclust/generators.hpp"
#include "gtclust/solution_concepts.hpp"

namespace gtclust {

namespace {

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

CoincidenceReport run_coincidence(int trials, int n_min, int n_max,
                                  std::uint64_t base_seed) {
  if (trials < 1) throw Error("coincidence run needs at least one trial");
  if (n_min < 3 || n_max > 8 || n_min > n_max) {
    throw Error("coincidence run needs 3 <= n_min <= n_max <= 8");
  }
  CoincidenceReport report;
  report.trials.reserve(static_cast<std::size_t>(trials));

  for (int t = 0; t < trials; ++t) {
    CoincidenceTrial trial;
    trial.index = t;
    trial.n = n_min + t % (n_max - n_min + 1);
    trial.seed = base_seed + static_cast<std::uint64_t>(t);
    const Dataset data = generate(Shape::Uniform, trial.n, trial.seed);
    try {
      const ClusteringGame game(compute_similarity(compute_distances(data)));
      if (!(game.grand_value() > 0.0)) {
        trial.degenerate = true;
        ++report.degenerate_count;
        report.trials.push_back(trial);
        continue;
      }
      const ShapleyVector closed_form = game.shapley();
      const auto [exact, trace] = shapley_exact(game);
      const NucleolusResult nuc = nucleolus(game);
      const Imputation gately_point = gately(game);
      const auto [tau, parts] = tau_value(game);

      const std::vector<std::vector<double>> vectors = {
          closed_form.phi, exact.payoffs, nuc.allocation.payoffs,
          gately_point.payoffs, tau.payoffs};
      for (std::size_t a = 0; a < vectors.size(); ++a) {
        for (std::size_t b = a + 1; b < vectors.size(); ++b) {
          trial.max_deviation = std::max(trial.max_deviation, linf(vectors[a], vectors[b]));
        }
      }
      trial.lambda = parts.lambda;

      const PropensityVector prop =
          propensity_to_disrupt(game, Imputation{closed_form.phi});
      for (const auto& entry : prop.d) {
        if (entry) {
          trial.max_propensity_gap =
              std::max(trial.max_propensity_gap, std::fabs(*entry - 1.0));
        }
      }

      report.max_deviation = std::max(report.max_deviation, trial.max_deviation);
      report.max_lambda_gap =
          std::max(report.max_lambda_gap, std::fabs(trial.lambda - 0.5));
      report.max_propensity_gap =
          std::max(report.max_propensity_gap, trial.max_propensity_gap);
    } catch (const DegenerateGame&) {
      trial.degenerate = true;
      ++report.degenerate_count;
    } catch (const Error& e) {
      trial.error = e.what();
      ++report.failed_count;
    }
    report.trials.push_back(trial);
  }
  return report;
}

}  // namespace gtclust
