#include "gtclust/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Dictionary-form simplex for: maximize c.x subject to A.x <= b, x >= 0.
// The tableau keeps one column per structural variable plus an auxiliary
// column used to restore feasibility (classic two-phase scheme). Bland's
// ordering decides both the entering and the leaving variable, so the
// iteration cannot cycle; the auxiliary variable sorts after everything
// else.
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
             const std::vector<double>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(static_cast<std::size_t>(n_) + 1),
        basic_(static_cast<std::size_t>(m_)),
        tab_(static_cast<std::size_t>(m_) + 2,
             std::vector<double>(static_cast<std::size_t>(n_) + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) tab_[i][j] = a[i][j];
      basic_[i] = n_ + i;
      tab_[i][n_] = -1.0;
      tab_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      tab_[m_][j] = -c[j];
    }
    nonbasic_[n_] = kAuxId;
    tab_[m_ + 1][n_] = 1.0;
  }

  // Returns Optimal/Infeasible/Unbounded; on Optimal fills x (size n).
  LpStatus run(std::vector<double>& x) {
    int worst = 0;
    for (int i = 1; i < m_; ++i) {
      if (tab_[i][n_ + 1] < tab_[worst][n_ + 1]) worst = i;
    }
    if (m_ > 0 && tab_[worst][n_ + 1] < -kEps) {
      pivot(worst, n_);  // auxiliary enters, all rhs become non-negative
      if (!optimize(m_ + 1) || tab_[m_ + 1][n_ + 1] < -kEps) {
        return LpStatus::Infeasible;
      }
      expel_auxiliary();
    }
    if (!optimize(m_)) {
      return LpStatus::Unbounded;
    }
    x.assign(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) {
        x[static_cast<std::size_t>(basic_[i])] = tab_[i][n_ + 1];
      }
    }
    return LpStatus::Optimal;
  }

  double objective() const { return tab_[m_][n_ + 1]; }

 private:
  static constexpr int kAuxId = -1;

  // Bland order: variable ids ascending, auxiliary last.
  long order_key(int id) const { return id == kAuxId ? long{n_} + m_ + 1 : id; }

  void pivot(int r, int s) {
    std::vector<double>& prow = tab_[static_cast<std::size_t>(r)];
    const double inv = 1.0 / prow[static_cast<std::size_t>(s)];
    if (!std::isfinite(inv)) {
      throw LpError("simplex pivot on a vanishing element");
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::fabs(tab_[i][s]) <= kEps) continue;
      std::vector<double>& row = tab_[static_cast<std::size_t>(i)];
      const double factor = row[static_cast<std::size_t>(s)] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[j] -= prow[j] * factor;
      row[static_cast<std::size_t>(s)] = prow[static_cast<std::size_t>(s)] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) prow[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) tab_[i][s] *= -inv;
    }
    prow[static_cast<std::size_t>(s)] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Pivots on objective row `obj` until no reduced cost is negative.
  // Returns false when the ratio test finds no leaving row (unbounded).
  bool optimize(int obj) {
    const bool aux_phase = obj == m_ + 1;
    for (;;) {
      int enter = -1;
      for (int j = 0; j <= n_; ++j) {
        if (!aux_phase && nonbasic_[j] == kAuxId) continue;
        if (tab_[obj][j] < -kEps &&
            (enter < 0 || order_key(nonbasic_[j]) < order_key(nonbasic_[enter]))) {
          enter = j;
        }
      }
      if (enter < 0) return true;
      double min_ratio = kInf;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= kEps) continue;
        min_ratio = std::min(min_ratio, tab_[i][n_ + 1] / tab_[i][enter]);
      }
      if (min_ratio == kInf) return false;
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= kEps) continue;
        if (tab_[i][n_ + 1] / tab_[i][enter] > min_ratio + kEps) continue;
        if (leave < 0 || order_key(basic_[i]) < order_key(basic_[leave])) {
          leave = i;
        }
      }
      pivot(leave, enter);
    }
  }

  // After a successful feasibility phase the auxiliary sits at zero; pivot
  // it out of any row it still occupies so later pivots cannot move it.
  void expel_auxiliary() {
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] != kAuxId) continue;
      int enter = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == kAuxId || std::fabs(tab_[i][j]) <= kEps) continue;
        if (enter < 0 || order_key(nonbasic_[j]) < order_key(nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter >= 0) pivot(i, enter);
      // else: the row is numerically all-zero (redundant); leave it be.
    }
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> tab_;
};

void validate(const LinearProgram& lp) {
  const std::size_t nvars = lp.objective.size();
  if (nvars == 0) throw Error("linear program has no variables");
  if (lp.rows.empty()) throw Error("linear program has no constraints");
  if (!lp.bounds.empty() && lp.bounds.size() != nvars) {
    throw Error("linear program bounds do not match the variable count");
  }
  for (const double v : lp.objective) {
    if (!std::isfinite(v)) throw Error("non-finite objective coefficient");
  }
  for (const LpRow& row : lp.rows) {
    if (row.coeffs.size() != nvars) {
      throw Error("constraint row width does not match the variable count");
    }
    if (!std::isfinite(row.rhs)) throw Error("non-finite constraint rhs");
    for (const double v : row.coeffs) {
      if (!std::isfinite(v)) throw Error("non-finite constraint coefficient");
    }
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  validate(lp);
  const int nvars = static_cast<int>(lp.objective.size());

  // Map every caller variable onto non-negative internal variables:
  // shifted when it has a finite lower bound, split into a difference of
  // two when free. Finite upper bounds become extra <= rows.
  struct VarMap {
    double shift = 0.0;
    int pos = -1;  // internal index of the positive part
    int neg = -1;  // internal index of the negative part (free vars only)
  };
  std::vector<VarMap> vmap(static_cast<std::size_t>(nvars));
  int internal_vars = 0;
  for (int k = 0; k < nvars; ++k) {
    const VarBound bound = lp.bounds.empty() ? VarBound{} : lp.bounds[k];
    if (bound.lower == -kInf) {
      vmap[k].pos = internal_vars++;
      vmap[k].neg = internal_vars++;
    } else {
      if (!std::isfinite(bound.lower)) throw Error("invalid lower bound");
      vmap[k].shift = bound.lower;
      vmap[k].pos = internal_vars++;
    }
  }

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  auto add_le_row = [&](const std::vector<double>& coeffs, double rhs) {
    std::vector<double> row(static_cast<std::size_t>(internal_vars), 0.0);
    double adjusted = rhs;
    for (int k = 0; k < nvars; ++k) {
      const double c = coeffs[static_cast<std::size_t>(k)];
      if (c == 0.0) continue;
      row[static_cast<std::size_t>(vmap[k].pos)] += c;
      if (vmap[k].neg >= 0) row[static_cast<std::size_t>(vmap[k].neg)] -= c;
      adjusted -= c * vmap[k].shift;
    }
    a.push_back(std::move(row));
    b.push_back(adjusted);
  };
  auto negated = [&](const std::vector<double>& coeffs) {
    std::vector<double> out(coeffs);
    for (double& v : out) v = -v;
    return out;
  };

  for (const LpRow& row : lp.rows) {
    switch (row.sense) {
      case RowSense::LessEqual:
        add_le_row(row.coeffs, row.rhs);
        break;
      case RowSense::GreaterEqual:
        add_le_row(negated(row.coeffs), -row.rhs);
        break;
      case RowSense::Equal:
        add_le_row(row.coeffs, row.rhs);
        add_le_row(negated(row.coeffs), -row.rhs);
        break;
    }
  }
  if (!lp.bounds.empty()) {
    for (int k = 0; k < nvars; ++k) {
      if (lp.bounds[k].upper == kInf) continue;
      if (!std::isfinite(lp.bounds[k].upper)) throw Error("invalid upper bound");
      std::vector<double> unit(static_cast<std::size_t>(nvars), 0.0);
      unit[static_cast<std::size_t>(k)] = 1.0;
      add_le_row(unit, lp.bounds[k].upper);
    }
  }

  std::vector<double> c(static_cast<std::size_t>(internal_vars), 0.0);
  for (int k = 0; k < nvars; ++k) {
    const double ck = lp.maximize ? lp.objective[k] : -lp.objective[k];
    c[static_cast<std::size_t>(vmap[k].pos)] += ck;
    if (vmap[k].neg >= 0) c[static_cast<std::size_t>(vmap[k].neg)] -= ck;
  }

  Dictionary dict(a, b, c);
  std::vector<double> internal_x;
  LpSolution out;
  out.status = dict.run(internal_x);
  if (out.status != LpStatus::Optimal) return out;

  out.x.assign(static_cast<std::size_t>(nvars), 0.0);
  for (int k = 0; k < nvars; ++k) {
    double v = vmap[k].shift + internal_x[static_cast<std::size_t>(vmap[k].pos)];
    if (vmap[k].neg >= 0) v -= internal_x[static_cast<std::size_t>(vmap[k].neg)];
    out.x[static_cast<std::size_t>(k)] = v;
  }
  double obj = 0.0;
  for (int k = 0; k < nvars; ++k) obj += lp.objective[k] * out.x[k];
  out.objective = obj;
  return out;
}

}  // namespace gtclust
