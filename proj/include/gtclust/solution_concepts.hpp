#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gtclust/clustering_game.hpp"
#include "gtclust/coalition.hpp"
#include "gtclust/imputation.hpp"

namespace gtclust {

// Permutation-enumeration record backing the exact Shapley computation.
// `marginal_sums[i]` accumulates player i's marginal contribution over all
// n! orderings, in enumeration order; dividing by `permutation_count`
// reproduces the returned payoff exactly. The per-permutation vectors are
// retained up to kShapleyTraceKeepLimit players (beyond that they would
// dwarf the computation itself) while the sums are always present.
inline constexpr int kShapleyTraceKeepLimit = 8;

struct ExactShapleyTrace {
  std::uint64_t permutation_count = 0;
  std::vector<double> marginal_sums;
  std::vector<std::vector<double>> marginals;  // one vector per permutation
};

// Average marginal contribution over every ordering of the players taken
// through the characteristic function itself; this is the oracle the
// closed-form computation is checked against. Requires n <= 10.
std::pair<Imputation, ExactShapleyTrace> shapley_exact(const ClusteringGame& g);

struct NucleolusStage {
  double excess_level = 0.0;
  std::vector<Coalition> fixed;  // coalitions pinned at this level
};

struct NucleolusResult {
  Imputation allocation;
  std::vector<NucleolusStage> stages;  // excess levels strictly decrease
};

// Lexicographic excess minimization over proper nonempty coalitions:
// repeatedly minimize the worst excess, pin the coalitions whose excess
// cannot drop below that optimum, and continue until the allocation is
// unique. Requires 2 <= n <= 12 (2^n constraint rows).
NucleolusResult nucleolus(const ClusteringGame& g);

// Allocation proportional to grand-coalition increments, scaled to v(N).
// Throws DegenerateGame when v(N) = 0.
Imputation gately(const ClusteringGame& g);

// Per-player propensity to disrupt the grand coalition at payoff x. Entries
// whose denominator x_i - v({i}) vanishes are left unset instead of turning
// into infinities.
struct PropensityVector {
  std::vector<std::optional<double>> d;
};

PropensityVector propensity_to_disrupt(const ClusteringGame& g, const Imputation& x);

struct TauComponents {
  std::vector<double> utopia;          // v(N) - v(N minus i), per player
  std::vector<double> minimal_rights;  // v({i}), identically zero here
  double lambda = 0.0;                 // mixing weight solving efficiency
};

// Efficient point on the segment between the minimal-rights and utopia
// vectors. Throws DegenerateGame when the utopia entries sum to zero.
std::pair<Imputation, TauComponents> tau_value(const ClusteringGame& g);

struct CoreCheck {
  bool in_core = false;
  double worst_excess = 0.0;
  std::optional<Coalition> worst_coalition;  // maximum positive excess, if any
};

// Exhaustive individual/collective/coalitional rationality check.
// Requires n <= kMaxEnumerationPlayers.
CoreCheck core_membership(const ClusteringGame& g, const Imputation& x,
                          double tol = 1e-9);

bool is_efficient(const ClusteringGame& g, const Imputation& x, double tol = 1e-9);
bool is_imputation(const ClusteringGame& g, const Imputation& x, double tol = 1e-9);

}  // namespace gtclust
