#include "gtclust/clustering_game.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "gtclust/errors.hpp"

namespace gtclust {

ClusteringGame::ClusteringGame(SimilarityMatrix similarity)
    : similarity_(std::move(similarity)) {
  const int n = similarity_.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) total += similarity_(i, j);
  }
  grand_value_ = total;
}

double ClusteringGame::coalition_value(const Coalition& s) const {
  const int n = player_count();
  const std::vector<int>& members = s.members();
  if (!members.empty() && (members.front() < 0 || members.back() >= n)) {
    throw std::out_of_range("coalition member outside 0.." + std::to_string(n - 1));
  }
  double total = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      total += similarity_(members[a], members[b]);
    }
  }
  return total;
}

double ClusteringGame::coalition_value_mask(std::uint64_t mask) const {
  double total = 0.0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    for (std::uint64_t inner = rest & (rest - 1); inner != 0; inner &= inner - 1) {
      total += similarity_(i, std::countr_zero(inner));
    }
  }
  return total;
}

ShapleyVector ClusteringGame::shapley() const {
  const int n = player_count();
  ShapleyVector out;
  out.phi.resize(static_cast<std::size_t>(n));
  out.g_max = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) row += similarity_(i, j);
    }
    const double phi = 0.5 * row;
    out.phi[static_cast<std::size_t>(i)] = phi;
    if (phi > out.g_max) out.g_max = phi;
  }
  return out;
}

double verify_pair_decomposition(const ClusteringGame& g, const Coalition& s) {
  const double whole = g.coalition_value(s);
  const std::vector<int>& members = s.members();
  double pair_sum = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      pair_sum += g.coalition_value(Coalition({members[a], members[b]}));
    }
  }
  const double dev = whole - pair_sum;
  return dev < 0 ? -dev : dev;
}

ExcessReport excess(const ClusteringGame& g, const Imputation& x, const Coalition& s) {
  if (x.size() != g.player_count()) {
    throw Error("payoff vector has " + std::to_string(x.size()) +
                " entries, game has " + std::to_string(g.player_count()) +
                " players");
  }
  double received = 0.0;
  for (const int i : s.members()) received += x.payoffs[static_cast<std::size_t>(i)];
  return ExcessReport{s, g.coalition_value(s) - received};
}

}  // namespace gtclust
