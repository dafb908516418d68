#include "inspectra/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "inspectra/errors.hpp"

namespace inspectra {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kDegenerateStep = 1e-12;
constexpr double kFeasTol = 1e-7;
constexpr int kRefactorEvery = 50;
constexpr int kBlandAfterDegenerate = 1000;

// Dense LU with partial pivoting of the basis matrix.
struct LuFactors {
  int m = 0;
  std::vector<double> lu;    // row-major, L below diagonal (unit), U on/above
  std::vector<int> perm;     // row permutation
  bool ok = false;

  bool factor(const std::vector<double>& b_cols, int m_in) {
    m = m_in;
    lu = b_cols;
    perm.resize(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int k = 0; k < m; ++k) {
      int piv = k;
      double best = std::abs(lu[k * m + k]);
      for (int i = k + 1; i < m; ++i) {
        double v = std::abs(lu[i * m + k]);
        if (v > best) { best = v; piv = i; }
      }
      if (best < 1e-12) return ok = false;
      if (piv != k) {
        for (int j = 0; j < m; ++j) std::swap(lu[k * m + j], lu[piv * m + j]);
        std::swap(perm[k], perm[piv]);
      }
      const double d = lu[k * m + k];
      for (int i = k + 1; i < m; ++i) {
        const double f = lu[i * m + k] / d;
        lu[i * m + k] = f;
        if (f != 0.0) {
          for (int j = k + 1; j < m; ++j) lu[i * m + j] -= f * lu[k * m + j];
        }
      }
    }
    return ok = true;
  }

  // x := B0^{-1} v
  void solve(std::vector<double>& x, const std::vector<double>& v) const {
    x.resize(m);
    for (int i = 0; i < m; ++i) x[i] = v[perm[i]];
    for (int i = 1; i < m; ++i) {
      double s = x[i];
      for (int j = 0; j < i; ++j) s -= lu[i * m + j] * x[j];
      x[i] = s;
    }
    for (int i = m - 1; i >= 0; --i) {
      double s = x[i];
      for (int j = i + 1; j < m; ++j) s -= lu[i * m + j] * x[j];
      x[i] = s / lu[i * m + i];
    }
  }

  // y := B0^{-T} v
  void solve_transposed(std::vector<double>& y, const std::vector<double>& v) const {
    std::vector<double> z(v);
    for (int i = 0; i < m; ++i) {       // U^T z = v (forward)
      double s = z[i];
      for (int j = 0; j < i; ++j) s -= lu[j * m + i] * z[j];
      z[i] = s / lu[i * m + i];
    }
    for (int i = m - 1; i >= 0; --i) {  // L^T w = z (backward)
      double s = z[i];
      for (int j = i + 1; j < m; ++j) s -= lu[j * m + i] * z[j];
      z[i] = s;
    }
    y.assign(m, 0.0);
    for (int i = 0; i < m; ++i) y[perm[i]] = z[i];
  }
};

struct Eta {
  int row;
  std::vector<double> col;  // pivot column w = B^{-1} A_q at time of pivot
};

// Standard-form solver: min c.x  s.t.  A x = b (b >= 0), x >= 0.
class StandardSimplex {
 public:
  int m = 0, n = 0;
  std::vector<std::vector<double>> cols;  // column-major A
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<int> basis;                 // size m
  std::vector<char> in_basis;             // size n
  int iterations = 0;
  int degenerate_pivots = 0;
  bool use_bland = false;

  LuFactors lu;
  std::vector<Eta> etas;

  bool refactor() {
    std::vector<double> bmat(static_cast<std::size_t>(m) * m, 0.0);
    for (int j = 0; j < m; ++j) {
      const auto& c = cols[basis[j]];
      for (int i = 0; i < m; ++i) bmat[i * m + j] = c[i];
    }
    etas.clear();
    return lu.factor(bmat, m);
  }

  void ftran(std::vector<double>& x, const std::vector<double>& v) const {
    lu.solve(x, v);
    for (const auto& e : etas) {
      const double xr = x[e.row] / e.col[e.row];
      for (int i = 0; i < m; ++i) x[i] -= e.col[i] * xr;
      x[e.row] = xr;
    }
  }

  void btran(std::vector<double>& y, const std::vector<double>& v) const {
    std::vector<double> z(v);
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      double s = z[it->row];
      for (int i = 0; i < m; ++i) {
        if (i != it->row) s -= it->col[i] * z[i];
      }
      z[it->row] = s / it->col[it->row];
    }
    lu.solve_transposed(y, z);
  }

  // Runs simplex iterations on the current cost vector. Returns status.
  LpStatus iterate(int max_iters) {
    if (m == 0) {
      // No constraints: optimal iff no negative cost, else unbounded.
      for (int j = 0; j < n; ++j) {
        if (cost[j] < -kPivotTol) return LpStatus::kUnbounded;
      }
      return LpStatus::kOptimal;
    }
    if (!refactor()) return LpStatus::kNumericalFailure;

    std::vector<double> xb, y, w, cb(m);
    while (iterations < max_iters) {
      ftran(xb, rhs);
      for (int i = 0; i < m; ++i) cb[i] = cost[basis[i]];
      btran(y, cb);

      // Pricing.
      int enter = -1;
      double best = -kPivotTol;
      for (int j = 0; j < n; ++j) {
        if (in_basis[j]) continue;
        const auto& a = cols[j];
        double d = cost[j];
        for (int i = 0; i < m; ++i) d -= y[i] * a[i];
        if (use_bland) {
          if (d < -kPivotTol) { enter = j; break; }
        } else if (d < best) {
          best = d;
          enter = j;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      ftran(w, cols[enter]);

      // Ratio test; ties broken toward the smallest basis variable index.
      int leave = -1;
      double min_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        if (w[i] > kPivotTol) {
          const double r = std::max(xb[i], 0.0) / w[i];
          if (leave < 0 || r < min_ratio - kDegenerateStep ||
              (r < min_ratio + kDegenerateStep && basis[i] < basis[leave])) {
            leave = i;
            min_ratio = r;
          }
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      if (min_ratio < kDegenerateStep) {
        if (++degenerate_pivots >= kBlandAfterDegenerate) use_bland = true;
      }

      in_basis[basis[leave]] = 0;
      in_basis[enter] = 1;
      basis[leave] = enter;
      etas.push_back({leave, w});
      ++iterations;
      if (static_cast<int>(etas.size()) >= kRefactorEvery) {
        if (!refactor()) return LpStatus::kNumericalFailure;
      }
    }
    return LpStatus::kNumericalFailure;
  }

  std::vector<double> basic_solution() const {
    std::vector<double> x(n, 0.0);
    if (m == 0) return x;
    std::vector<double> xb;
    ftran(xb, rhs);
    for (int i = 0; i < m; ++i) x[basis[i]] = xb[i];
    return x;
  }

  std::vector<double> duals() const {
    std::vector<double> y;
    if (m == 0) return y;
    std::vector<double> cb(m);
    for (int i = 0; i < m; ++i) cb[i] = cost[basis[i]];
    btran(y, cb);
    return y;
  }
};

struct ColumnMap {
  int primary = -1;   // internal column carrying +x (shifted by lower bound)
  int negative = -1;  // internal column carrying -x for free variables
  double shift = 0.0;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const int next = problem.num_vars();
  const int mext = problem.num_rows();
  if (static_cast<int>(problem.rhs.size()) != mext ||
      static_cast<int>(problem.row_sense.size()) != mext) {
    throw ValidationError("lp: row sense/rhs size mismatch");
  }
  for (const auto& row : problem.rows) {
    if (static_cast<int>(row.size()) != next) {
      throw ValidationError("lp: row width does not match objective size");
    }
  }
  std::vector<double> lower = problem.lower.empty() ? std::vector<double>(next, 0.0) : problem.lower;
  std::vector<double> upper = problem.upper.empty() ? std::vector<double>(next, kLpInf) : problem.upper;
  if (static_cast<int>(lower.size()) != next || static_cast<int>(upper.size()) != next) {
    throw ValidationError("lp: bound vector size mismatch");
  }
  for (int j = 0; j < next; ++j) {
    if (!std::isfinite(problem.objective[j])) throw ValidationError("lp: nonfinite objective");
    if (upper[j] < lower[j]) throw ValidationError("lp: crossed bounds");
  }
  for (int i = 0; i < mext; ++i) {
    if (!std::isfinite(problem.rhs[i])) throw ValidationError("lp: nonfinite rhs");
    for (double v : problem.rows[i]) {
      if (!std::isfinite(v)) throw ValidationError("lp: nonfinite coefficient");
    }
  }

  const double sense_factor = problem.sense == LpSense::kMaximize ? -1.0 : 1.0;

  // Map external variables to standard-form columns.
  std::vector<ColumnMap> vmap(next);
  int n_int = 0;
  for (int j = 0; j < next; ++j) {
    vmap[j].primary = n_int++;
    if (lower[j] == -kLpInf) {
      vmap[j].negative = n_int++;
      if (upper[j] != kLpInf) {
        throw ValidationError("lp: free variable with finite upper bound unsupported");
      }
    } else {
      vmap[j].shift = lower[j];
    }
  }

  // Internal rows: external rows first, then finite-upper-bound rows.
  struct IntRow {
    std::vector<double> a;
    double b = 0.0;
    RowSense sense = RowSense::kEqual;
    int ext = -1;         // originating external row, -1 for bound rows
    double flip = 1.0;
  };
  std::vector<IntRow> irows;
  irows.reserve(mext + next);
  for (int i = 0; i < mext; ++i) {
    IntRow r;
    r.a.assign(n_int, 0.0);
    r.b = problem.rhs[i];
    r.sense = problem.row_sense[i];
    r.ext = i;
    for (int j = 0; j < next; ++j) {
      const double aij = problem.rows[i][j];
      if (aij == 0.0) continue;
      r.a[vmap[j].primary] += aij;
      if (vmap[j].negative >= 0) r.a[vmap[j].negative] -= aij;
      r.b -= aij * vmap[j].shift;
    }
    irows.push_back(std::move(r));
  }
  for (int j = 0; j < next; ++j) {
    if (upper[j] == kLpInf) continue;
    IntRow r;
    r.a.assign(n_int, 0.0);
    r.a[vmap[j].primary] = 1.0;
    r.b = upper[j] - vmap[j].shift;
    r.sense = RowSense::kLessEqual;
    irows.push_back(std::move(r));
  }

  StandardSimplex sx;
  sx.m = static_cast<int>(irows.size());

  // Structural columns.
  std::vector<double> c_int(n_int, 0.0);
  for (int j = 0; j < next; ++j) {
    const double cj = sense_factor * problem.objective[j];
    c_int[vmap[j].primary] += cj;
    if (vmap[j].negative >= 0) c_int[vmap[j].negative] -= cj;
  }
  sx.cols.assign(n_int, std::vector<double>(sx.m, 0.0));
  for (int i = 0; i < sx.m; ++i) {
    for (int j = 0; j < n_int; ++j) sx.cols[j][i] = irows[i].a[j];
  }
  sx.cost = c_int;
  sx.rhs.resize(sx.m);

  // Slack/surplus columns, then sign-normalize rhs.
  std::vector<int> slack_col(sx.m, -1);
  for (int i = 0; i < sx.m; ++i) {
    if (irows[i].sense == RowSense::kEqual) continue;
    const double coef = irows[i].sense == RowSense::kLessEqual ? 1.0 : -1.0;
    std::vector<double> col(sx.m, 0.0);
    col[i] = coef;
    slack_col[i] = static_cast<int>(sx.cols.size());
    sx.cols.push_back(std::move(col));
    sx.cost.push_back(0.0);
  }
  for (int i = 0; i < sx.m; ++i) {
    if (irows[i].b < 0.0) {
      irows[i].flip = -1.0;
      irows[i].b = -irows[i].b;
      for (auto& col : sx.cols) col[i] = -col[i];
    }
    sx.rhs[i] = irows[i].b;
  }
  sx.n = static_cast<int>(sx.cols.size());

  // Phase 1: basis from usable slacks, artificials elsewhere. A surplus with
  // coefficient -1 can start basic when the row's rhs is zero (it sits at 0).
  const int n_struct = sx.n;
  sx.basis.assign(sx.m, -1);
  std::vector<int> artificial_of_row(sx.m, -1);
  for (int i = 0; i < sx.m; ++i) {
    const bool plus_slack = slack_col[i] >= 0 && sx.cols[slack_col[i]][i] > 0.5;
    const bool zero_rhs_surplus = slack_col[i] >= 0 && sx.rhs[i] == 0.0;
    if (plus_slack || zero_rhs_surplus) {
      sx.basis[i] = slack_col[i];
    } else {
      std::vector<double> col(sx.m, 0.0);
      col[i] = 1.0;
      artificial_of_row[i] = static_cast<int>(sx.cols.size());
      sx.basis[i] = artificial_of_row[i];
      sx.cols.push_back(std::move(col));
      sx.cost.push_back(0.0);
    }
  }
  sx.n = static_cast<int>(sx.cols.size());
  sx.in_basis.assign(sx.n, 0);
  for (int b : sx.basis) sx.in_basis[b] = 1;

  LpSolution out;
  const int max_iters = 20000 + 400 * (sx.m + sx.n);

  const bool needs_phase1 = sx.n > n_struct;
  if (needs_phase1) {
    std::vector<double> phase1_cost(sx.n, 0.0);
    for (int j = n_struct; j < sx.n; ++j) phase1_cost[j] = 1.0;
    std::swap(sx.cost, phase1_cost);
    const LpStatus st = sx.iterate(max_iters);
    if (st == LpStatus::kNumericalFailure) {
      out.status = LpStatus::kNumericalFailure;
      out.iterations = sx.iterations;
      return out;
    }
    double art_sum = 0.0;
    {
      auto x = sx.basic_solution();
      for (int j = n_struct; j < sx.n; ++j) art_sum += std::max(x[j], 0.0);
    }
    if (art_sum > kFeasTol) {
      out.status = LpStatus::kInfeasible;
      out.iterations = sx.iterations;
      return out;
    }
    std::swap(sx.cost, phase1_cost);

    // Drive remaining artificials out of the basis; rows where no structural
    // pivot exists are redundant and get dropped. One BTRAN per artificial
    // row gives its whole tableau row at once.
    std::vector<char> drop_row(sx.m, 0);
    for (int i = 0; i < sx.m; ++i) {
      if (sx.basis[i] < n_struct) continue;
      if (!sx.refactor()) {
        out.status = LpStatus::kNumericalFailure;
        out.iterations = sx.iterations;
        return out;
      }
      std::vector<double> unit(sx.m, 0.0), row_i;
      unit[i] = 1.0;
      sx.btran(row_i, unit);  // tableau row i entry for column j is row_i . A_j
      int pivot_col = -1;
      for (int j = 0; j < n_struct; ++j) {
        if (sx.in_basis[j]) continue;
        double entry = 0.0;
        for (int r = 0; r < sx.m; ++r) entry += row_i[r] * sx.cols[j][r];
        if (std::abs(entry) > 1e-7) { pivot_col = j; break; }
      }
      if (pivot_col >= 0) {
        std::vector<double> w;
        sx.ftran(w, sx.cols[pivot_col]);
        sx.in_basis[sx.basis[i]] = 0;
        sx.in_basis[pivot_col] = 1;
        sx.basis[i] = pivot_col;
        sx.etas.push_back({i, w});
      } else {
        drop_row[i] = 1;
      }
    }
    if (std::find(drop_row.begin(), drop_row.end(), 1) != drop_row.end()) {
      std::vector<int> keep;
      for (int i = 0; i < sx.m; ++i) {
        if (!drop_row[i]) keep.push_back(i);
      }
      const int new_m = static_cast<int>(keep.size());
      for (auto& col : sx.cols) {
        for (int k = 0; k < new_m; ++k) col[k] = col[keep[k]];
        col.resize(new_m);
      }
      std::vector<double> new_rhs(new_m);
      std::vector<int> new_basis(new_m);
      std::vector<IntRow> new_rows;
      new_rows.reserve(new_m);
      for (int k = 0; k < new_m; ++k) {
        new_rhs[k] = sx.rhs[keep[k]];
        new_basis[k] = sx.basis[keep[k]];
        new_rows.push_back(std::move(irows[keep[k]]));
      }
      for (int i = 0; i < sx.m; ++i) {
        if (drop_row[i]) sx.in_basis[sx.basis[i]] = 0;
      }
      sx.rhs = std::move(new_rhs);
      sx.basis = std::move(new_basis);
      irows = std::move(new_rows);
      sx.m = new_m;
    }
    // Purge artificial columns from pricing by marking them basic-forbidden.
    for (int j = n_struct; j < sx.n; ++j) {
      if (!sx.in_basis[j]) sx.in_basis[j] = 1;  // never price an artificial again
      sx.cost[j] = 0.0;
    }
  }

  const LpStatus st2 = sx.iterate(max_iters);
  out.iterations = sx.iterations;
  if (st2 != LpStatus::kOptimal) {
    out.status = st2;
    return out;
  }

  // Reconstruct external primal and objective.
  const auto x_int = sx.basic_solution();
  out.primal.assign(next, 0.0);
  for (int j = 0; j < next; ++j) {
    double v = x_int[vmap[j].primary] + vmap[j].shift;
    if (vmap[j].negative >= 0) v -= x_int[vmap[j].negative];
    out.primal[j] = v;
  }
  out.objective = 0.0;
  for (int j = 0; j < next; ++j) out.objective += problem.objective[j] * out.primal[j];

  // Duals: undo row flips and the sense negation; bound rows are internal.
  const auto y = sx.duals();
  out.dual.assign(mext, 0.0);
  for (int i = 0; i < sx.m; ++i) {
    if (irows[i].ext >= 0) {
      out.dual[irows[i].ext] = sense_factor * irows[i].flip * y[i];
    }
  }
  out.status = LpStatus::kOptimal;
  return out;
}

}  // namespace inspectra
