#include "gtclust/solution_concepts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gtclust/errors.hpp"
#include "gtclust/simplex.hpp"

namespace gtclust {

namespace {

constexpr double kTightTol = 1e-9;  // "tight at optimum" detection
constexpr double kPropensityDenominatorFloor = 1e-12;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Characteristic-function table indexed by coalition mask.
std::vector<double> tabulate_values(const ClusteringGame& g) {
  const int n = g.player_count();
  detail::check_enumeration_size(n);
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::uint64_t mask = 0; mask < v.size(); ++mask) {
    v[mask] = g.coalition_value_mask(mask);
  }
  return v;
}

double mask_payoff(std::uint64_t mask, const std::vector<double>& x) {
  double sum = 0.0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    sum += x[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return sum;
}

}  // namespace

std::pair<Imputation, ExactShapleyTrace> shapley_exact(const ClusteringGame& g) {
  const int n = g.player_count();
  if (n < 1 || n > 10) {
    throw Error("permutation Shapley limited to 1 <= n <= 10, got n = " +
                std::to_string(n));
  }
  ExactShapleyTrace trace;
  trace.permutation_count = factorial(n);
  trace.marginal_sums.assign(static_cast<std::size_t>(n), 0.0);
  const bool keep = n <= kShapleyTraceKeepLimit;
  if (keep) trace.marginals.reserve(trace.permutation_count);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> marginal(static_cast<std::size_t>(n), 0.0);
  do {
    std::uint64_t prefix = 0;
    double prev_value = 0.0;
    for (const int player : order) {
      prefix |= std::uint64_t{1} << player;
      const double value = g.coalition_value_mask(prefix);
      marginal[static_cast<std::size_t>(player)] = value - prev_value;
      prev_value = value;
    }
    for (int i = 0; i < n; ++i) {
      trace.marginal_sums[static_cast<std::size_t>(i)] +=
          marginal[static_cast<std::size_t>(i)];
    }
    if (keep) trace.marginals.push_back(marginal);
  } while (std::next_permutation(order.begin(), order.end()));

  Imputation value;
  value.payoffs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    value.payoffs[static_cast<std::size_t>(i)] =
        trace.marginal_sums[static_cast<std::size_t>(i)] /
        static_cast<double>(trace.permutation_count);
  }
  return {std::move(value), std::move(trace)};
}

namespace {

// Shared scaffolding for the nucleolus stage programs. Variables are the n
// payoffs (lower-bounded by the singleton values) plus, when present, the
// free excess-level variable Z appended last.
struct NucleolusWorkspace {
  int n = 0;
  std::uint64_t full_mask = 0;
  const std::vector<double>* values = nullptr;
  std::vector<std::uint64_t> free_masks;
  std::vector<std::pair<std::uint64_t, double>> fixed;  // mask -> pinned excess

  LpRow excess_row(std::uint64_t mask, bool with_z) const {
    LpRow row;
    row.coeffs.assign(static_cast<std::size_t>(n) + (with_z ? 1 : 0), 0.0);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      row.coeffs[static_cast<std::size_t>(std::countr_zero(rest))] = 1.0;
    }
    return row;
  }

  std::vector<VarBound> payoff_bounds(bool with_z) const {
    std::vector<VarBound> bounds(static_cast<std::size_t>(n) + (with_z ? 1 : 0));
    for (int i = 0; i < n; ++i) {
      bounds[static_cast<std::size_t>(i)].lower =
          (*values)[std::size_t{1} << i];
    }
    if (with_z) {
      bounds.back().lower = -std::numeric_limits<double>::infinity();
    }
    return bounds;
  }

  // min Z subject to: every free coalition's excess <= Z, every fixed
  // coalition's excess pinned, efficiency.
  LinearProgram stage_program() const {
    LinearProgram lp;
    lp.objective.assign(static_cast<std::size_t>(n) + 1, 0.0);
    lp.objective.back() = 1.0;
    lp.bounds = payoff_bounds(/*with_z=*/true);
    for (const std::uint64_t mask : free_masks) {
      LpRow row = excess_row(mask, /*with_z=*/true);
      row.coeffs.back() = 1.0;  // Z + sum x_i >= v(S)
      row.sense = RowSense::GreaterEqual;
      row.rhs = (*values)[mask];
      lp.rows.push_back(std::move(row));
    }
    append_common_rows(lp, /*with_z=*/true);
    return lp;
  }

  // Feasible set with the excess level pinned at `level`; objective filled
  // in by the caller.
  LinearProgram face_program(double level) const {
    LinearProgram lp;
    lp.objective.assign(static_cast<std::size_t>(n), 0.0);
    lp.bounds = payoff_bounds(/*with_z=*/false);
    for (const std::uint64_t mask : free_masks) {
      LpRow row = excess_row(mask, /*with_z=*/false);
      row.sense = RowSense::GreaterEqual;
      row.rhs = (*values)[mask] - level;  // sum x_i >= v(S) - Z*
      lp.rows.push_back(std::move(row));
    }
    append_common_rows(lp, /*with_z=*/false);
    return lp;
  }

  void append_common_rows(LinearProgram& lp, bool with_z) const {
    for (const auto& [mask, level] : fixed) {
      LpRow row = excess_row(mask, with_z);
      row.sense = RowSense::Equal;
      row.rhs = (*values)[mask] - level;
      lp.rows.push_back(std::move(row));
    }
    LpRow eff = excess_row(full_mask, with_z);
    eff.sense = RowSense::Equal;
    eff.rhs = (*values)[full_mask];
    lp.rows.push_back(std::move(eff));
  }
};

LpSolution solve_or_throw(const LinearProgram& lp, const char* what) {
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw LpError(std::string("nucleolus backend: ") + what + " program " +
                  (sol.status == LpStatus::Infeasible ? "infeasible" : "unbounded"));
  }
  return sol;
}

}  // namespace

NucleolusResult nucleolus(const ClusteringGame& g) {
  const int n = g.player_count();
  if (n < 2 || n > 12) {
    throw Error("nucleolus limited to 2 <= n <= 12, got n = " + std::to_string(n));
  }
  const std::vector<double> values = tabulate_values(g);

  NucleolusWorkspace ws;
  ws.n = n;
  ws.full_mask = (std::uint64_t{1} << n) - 1;
  ws.values = &values;
  for (std::uint64_t mask = 1; mask < ws.full_mask; ++mask) {
    ws.free_masks.push_back(mask);
  }

  NucleolusResult result;
  std::vector<double> current;
  double prev_level = std::numeric_limits<double>::infinity();

  while (!ws.free_masks.empty()) {
    LpSolution stage_sol = solve_or_throw(ws.stage_program(), "stage");
    const double level = stage_sol.objective;
    if (level >= prev_level - kTightTol && !result.stages.empty()) {
      throw LpError("nucleolus stages failed to decrease the excess level");
    }
    current.assign(stage_sol.x.begin(), stage_sol.x.begin() + n);

    // A coalition is pinned at this level iff its excess cannot drop below
    // the optimum anywhere on the optimal face.
    NucleolusStage stage;
    stage.excess_level = level;
    std::vector<std::uint64_t> still_free;
    for (const std::uint64_t mask : ws.free_masks) {
      const double at_solution = values[mask] - mask_payoff(mask, current);
      bool pin = false;
      if (at_solution >= level - kTightTol) {
        LinearProgram probe = ws.face_program(level);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          probe.objective[static_cast<std::size_t>(std::countr_zero(rest))] = 1.0;
        }
        probe.maximize = true;  // push the coalition's payoff up = excess down
        const LpSolution probe_sol = solve_or_throw(probe, "probe");
        pin = values[mask] - probe_sol.objective >= level - kTightTol;
      }
      if (pin) {
        stage.fixed.push_back(Coalition::from_mask(mask));
        ws.fixed.emplace_back(mask, level);
      } else {
        still_free.push_back(mask);
      }
    }
    if (stage.fixed.empty()) {
      throw LpError("nucleolus made no progress at level " + std::to_string(level));
    }
    ws.free_masks = std::move(still_free);
    result.stages.push_back(std::move(stage));
    prev_level = level;

    // Stop as soon as the pinned face is a single point.
    bool unique = true;
    for (int i = 0; i < n && unique; ++i) {
      LinearProgram lo = ws.face_program(level);
      lo.objective[static_cast<std::size_t>(i)] = 1.0;
      LinearProgram hi = lo;
      hi.maximize = true;
      const double min_i = solve_or_throw(lo, "uniqueness").objective;
      const double max_i = solve_or_throw(hi, "uniqueness").objective;
      unique = max_i - min_i <= kTightTol;
    }
    if (unique) break;
  }

  result.allocation.payoffs = std::move(current);
  return result;
}

Imputation gately(const ClusteringGame& g) {
  const int n = g.player_count();
  const double grand = g.grand_value();
  if (!(grand > 0.0)) {
    throw DegenerateGame("Gately point undefined: v(N) = 0");
  }
  const Coalition everyone = Coalition::full(n);
  std::vector<double> increment(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest = everyone.members();
    rest.erase(rest.begin() + i);
    increment[static_cast<std::size_t>(i)] =
        grand - g.coalition_value(Coalition(std::move(rest)));
    total += increment[static_cast<std::size_t>(i)];
  }
  Imputation out;
  out.payoffs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.payoffs[static_cast<std::size_t>(i)] =
        increment[static_cast<std::size_t>(i)] / total * grand;
  }
  return out;
}

PropensityVector propensity_to_disrupt(const ClusteringGame& g, const Imputation& x) {
  const int n = g.player_count();
  if (x.size() != n) {
    throw Error("propensity: payoff vector size " + std::to_string(x.size()) +
                " does not match n = " + std::to_string(n));
  }
  const double total = x.total();
  const Coalition everyone = Coalition::full(n);
  PropensityVector out;
  out.d.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest = everyone.members();
    rest.erase(rest.begin() + i);
    const double others = total - x.payoffs[static_cast<std::size_t>(i)];
    const double numerator = others - g.coalition_value(Coalition(std::move(rest)));
    const double denominator =
        x.payoffs[static_cast<std::size_t>(i)] - g.coalition_value(Coalition({i}));
    if (std::fabs(denominator) <= kPropensityDenominatorFloor) {
      out.d[static_cast<std::size_t>(i)] = std::nullopt;
    } else {
      out.d[static_cast<std::size_t>(i)] = numerator / denominator;
    }
  }
  return out;
}

std::pair<Imputation, TauComponents> tau_value(const ClusteringGame& g) {
  const int n = g.player_count();
  const double grand = g.grand_value();
  const Coalition everyone = Coalition::full(n);
  TauComponents parts;
  parts.utopia.resize(static_cast<std::size_t>(n));
  parts.minimal_rights.resize(static_cast<std::size_t>(n));
  double utopia_total = 0.0;
  double rights_total = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest = everyone.members();
    rest.erase(rest.begin() + i);
    parts.utopia[static_cast<std::size_t>(i)] =
        grand - g.coalition_value(Coalition(std::move(rest)));
    parts.minimal_rights[static_cast<std::size_t>(i)] =
        g.coalition_value(Coalition({i}));
    utopia_total += parts.utopia[static_cast<std::size_t>(i)];
    rights_total += parts.minimal_rights[static_cast<std::size_t>(i)];
  }
  if (!(utopia_total > 0.0)) {
    throw DegenerateGame("tau value undefined: utopia increments sum to 0");
  }
  parts.lambda = (grand - rights_total) / (utopia_total - rights_total);

  Imputation out;
  out.payoffs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.payoffs[static_cast<std::size_t>(i)] =
        parts.lambda * parts.utopia[static_cast<std::size_t>(i)] +
        (1.0 - parts.lambda) * parts.minimal_rights[static_cast<std::size_t>(i)];
  }
  return {std::move(out), std::move(parts)};
}

CoreCheck core_membership(const ClusteringGame& g, const Imputation& x, double tol) {
  const int n = g.player_count();
  if (x.size() != n) {
    throw Error("core check: payoff vector size does not match the game");
  }
  detail::check_enumeration_size(n);
  const std::vector<double> values = tabulate_values(g);

  CoreCheck out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const bool efficient = std::fabs(x.total() - values[full]) <= tol;
  out.worst_excess = -std::numeric_limits<double>::infinity();
  std::uint64_t worst_mask = 0;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const double e = values[mask] - mask_payoff(mask, x.payoffs);
    if (e > out.worst_excess) {
      out.worst_excess = e;
      worst_mask = mask;
    }
  }
  if (n == 1) out.worst_excess = 0.0;  // no proper coalitions to complain
  out.in_core = efficient && out.worst_excess <= tol;
  if (out.worst_excess > tol) {
    out.worst_coalition = Coalition::from_mask(worst_mask);
  }
  return out;
}

bool is_efficient(const ClusteringGame& g, const Imputation& x, double tol) {
  return x.size() == g.player_count() &&
         std::fabs(x.total() - g.grand_value()) <= tol;
}

bool is_imputation(const ClusteringGame& g, const Imputation& x, double tol) {
  if (!is_efficient(g, x, tol)) return false;
  for (int i = 0; i < g.player_count(); ++i) {
    if (x.payoffs[static_cast<std::size_t>(i)] <
        g.coalition_value(Coalition({i})) - tol) {
      return false;
    }
  }
  return true;
}

}  // namespace gtclust
