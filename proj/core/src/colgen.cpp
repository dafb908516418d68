#include "inspectra/colgen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/lp.hpp"
#include "inspectra/rational.hpp"

namespace inspectra {
namespace {

MixedStrategy pure_strategy(Side side, int budget, std::vector<int> action) {
  std::vector<MixedStrategy::Entry> support;
  support.push_back({std::move(action), 1.0});
  return MixedStrategy(side, budget, std::move(support));
}

// Solve the restricted master over the given columns; fills sigma, z, duals.
void solve_master(const DetectionModel& model, MasterState& ms) {
  const int ncols = static_cast<int>(ms.columns.size());
  const int m = model.component_count();

  LpProblem lp;
  lp.sense = LpSense::kMaximize;
  const int zvar = ncols;
  lp.objective.assign(ncols + 1, 0.0);
  lp.objective[zvar] = 1.0;
  lp.lower.assign(ncols + 1, 0.0);
  lp.lower[zvar] = -kLpInf;
  lp.upper.assign(ncols + 1, kLpInf);

  for (int e = 0; e < m; ++e) {
    std::vector<double> row(ncols + 1, 0.0);
    for (int j = 0; j < ncols; ++j) {
      int covered = 0;
      for (int i : ms.columns[j]) {
        if (model.node_monitors(i, e)) { covered = 1; break; }
      }
      row[j] = static_cast<double>(covered);
    }
    row[zvar] = -1.0;
    lp.rows.push_back(std::move(row));
    lp.row_sense.push_back(RowSense::kGreaterEqual);
    lp.rhs.push_back(0.0);
  }
  {
    std::vector<double> row(ncols + 1, 0.0);
    for (int j = 0; j < ncols; ++j) row[j] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.row_sense.push_back(RowSense::kEqual);
    lp.rhs.push_back(1.0);
  }

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError("column-generation master did not solve");
  }
  ms.z = sol.objective;
  ms.sigma.assign(ncols, 0.0);
  for (int j = 0; j < ncols; ++j) ms.sigma[j] = std::max(sol.primal[j], 0.0);
  ms.rho.assign(m, 0.0);
  for (int e = 0; e < m; ++e) ms.rho[e] = std::max(-sol.dual[e], 0.0);
  ms.z_prime = sol.dual[m];
}

MixedStrategy master_strategy(int b1, const MasterState& ms) {
  std::vector<MixedStrategy::Entry> support;
  double total = 0.0;
  for (std::size_t j = 0; j < ms.columns.size(); ++j) {
    if (ms.sigma[j] > 1e-12) {
      support.push_back({ms.columns[j], ms.sigma[j]});
      total += ms.sigma[j];
    }
  }
  for (auto& e : support) e.prob /= total;
  return MixedStrategy(Side::kDefender, b1, std::move(support));
}

}  // namespace

PricedColumn price_column(const DetectionModel& model, const std::vector<double>& duals,
                          double z_prime, int b1) {
  for (double d : duals) {
    if (d < -1e-9) throw ValidationError("pricing duals must be nonnegative");
  }
  std::vector<double> w(duals);
  for (double& x : w) x = std::max(x, 0.0);
  const auto res = max_weight_cover(model, w, b1);
  PricedColumn out;
  out.nodes = res.nodes;
  out.weight = res.weight;
  out.reduced_cost = res.weight - z_prime;
  return out;
}

std::pair<double, double> interim_guarantees(double r_prime, int b1, int b2, int m_star) {
  if (r_prime < -1e-12 || r_prime > 1.0 + 1e-12) {
    throw ValidationError("interim rate must lie in [0,1]");
  }
  if (m_star <= 0) throw ValidationError("nonpositive packing size");
  if (b1 <= 0) {
    return {0.0, r_prime >= 1.0 ? 0.0 : 1.0};
  }
  const double cap = static_cast<double>(std::max(b1, m_star));
  const double eps = b1 * static_cast<double>(b2) * (1.0 / cap - r_prime / b1);
  const double loss = 1.0 - (cap / b1) * r_prime;
  return {std::max(eps, 0.0), std::max(loss, 0.0)};
}

ColgenResult solve_colgen(const DetectionModel& model, int b1, double tol,
                          int max_iterations) {
  model.require_valid();
  if (b1 < 0 || b1 > model.node_count()) throw ValidationError("defender budget out of range");

  const CoverResult msc = solve_msc(model, SolveMode::kExact);
  const PackingResult msp = solve_msp(model, SolveMode::kExact);
  const int n_star = msc.size;
  const int m_star = msp.size;

  ColgenResult out;
  if (b1 == 0) {
    out.rate = 0.0;
    out.sigma1 = pure_strategy(Side::kDefender, 0, {});
    return out;
  }
  if (b1 >= n_star) {
    out.rate = 1.0;
    out.sigma1 = pure_strategy(Side::kDefender, b1, msc.cover.v);
    return out;
  }

  if (max_iterations < 0) max_iterations = 10 * model.node_count() * b1;

  MasterState& ms = out.state;
  ms.columns = cyclic_windows(msc.cover.v, b1);
  for (auto& c : ms.columns) std::sort(c.begin(), c.end());
  std::set<std::vector<int>> column_keys(ms.columns.begin(), ms.columns.end());

  while (true) {
    solve_master(model, ms);
    ++ms.iterations;
    {
      const auto [eps, loss] = interim_guarantees(std::clamp(ms.z, 0.0, 1.0), b1, 1, m_star);
      int sup = 0;
      for (double p : ms.sigma) sup += p > 1e-12;
      out.trace.push_back({ms.z, eps, loss, sup});
    }

    const PricedColumn priced = price_column(model, ms.rho, ms.z_prime, b1);
    if (priced.reduced_cost <= tol) break;
    if (column_keys.count(priced.nodes.v)) {
      // Dual noise re-priced an existing column; the master is optimal.
      break;
    }
    if (ms.iterations >= max_iterations) {
      out.converged = false;
      out.diagnostic = "iteration cap reached at z = " + std::to_string(ms.z) +
                       ", relative-loss bound " +
                       std::to_string(out.trace.back().loss_prime);
      break;
    }
    column_keys.insert(priced.nodes.v);
    ms.columns.push_back(priced.nodes.v);
  }

  out.rate = ms.z;
  out.sigma1 = master_strategy(b1, ms);
  return out;
}

RefinementOutcome refine(const DetectionModel& model, double alpha, int b2, double tol,
                         int max_iterations) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0,1]");
  model.require_valid();

  const CoverResult msc = solve_msc(model, SolveMode::kExact);
  const PackingResult msp = solve_msp(model, SolveMode::kExact);

  RefinementOutcome out;
  out.n_star = msc.size;
  out.m_star = msp.size;

  const long b1_start = ceil_scale(alpha, msc.size);
  bool have_selected = false;
  for (long b1 = b1_start; b1 >= 0; --b1) {
    ColgenResult res = solve_colgen(model, static_cast<int>(b1), tol, max_iterations);
    const auto [eps, loss] =
        interim_guarantees(std::clamp(res.rate, 0.0, 1.0), static_cast<int>(b1), b2, msp.size);
    RefinementRecord rec;
    rec.b1 = static_cast<int>(b1);
    rec.rate = res.rate;
    rec.sigma1 = res.sigma1;
    rec.iterations = res.state.iterations;
    rec.epsilon_prime = eps;
    rec.loss_prime = loss;
    out.records.push_back(rec);
    for (ColgenIteration it : res.trace) {
      it.epsilon_prime *= b2;  // solve_colgen traces are for one attack resource
      out.trace.emplace_back(static_cast<int>(b1), it);
    }

    if (res.rate >= alpha - 1e-9) {
      out.selected_b1 = rec.b1;
      out.selected_rate = rec.rate;
      out.sigma1 = rec.sigma1;
      have_selected = true;
    } else {
      break;  // rates only fall further as b1 shrinks
    }
  }
  if (!have_selected) {
    // ceil(alpha n*) always meets alpha through the cover lower bound.
    throw SolverError("refinement failed to certify the warm-start rate");
  }
  return out;
}

}  // namespace inspectra
