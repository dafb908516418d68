#include "inspectra/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/lp.hpp"

namespace inspectra {

void MarginalTarget::validate() const {
  if (b2 < 1 || b2 > static_cast<int>(rho.size())) {
    throw ValidationError("marginal target budget out of range");
  }
  double sum = 0.0;
  for (double p : rho) {
    if (p < -1e-12 || p > 1.0 + 1e-9) {
      throw ValidationError("marginal target entry outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - b2) > 1e-9) {
    throw ValidationError("marginal target must sum to the attacker budget");
  }
}

std::vector<double> cap_marginals(const DetectionModel& model, int b1,
                                  const std::vector<double>& rho, int m_star) {
  model.require_valid();
  if (m_star <= 0) throw ValidationError("nonpositive packing size");
  if (static_cast<int>(rho.size()) != model.component_count()) {
    throw ValidationError("marginal vector size mismatch");
  }
  double sum = 0.0;
  for (double p : rho) {
    if (p < -1e-9) throw ValidationError("negative marginal");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("marginals must sum to 1");

  const double cap = 1.0 / m_star;
  if (sum > m_star * cap + 1e-9) {
    throw SolverError("cap infeasible: total mass exceeds m* times the cap");
  }

  std::vector<double> out(rho);
  const int m = model.component_count();
  auto first_over = [&]() {
    for (int e = 0; e < m; ++e) {
      if (out[e] > cap + 1e-12) return e;
    }
    return -1;
  };

  int over = first_over();
  while (over >= 0) {
    double excess = out[over] - cap;
    out[over] = cap;

    const auto br = max_weight_cover(model, out, std::min(b1, model.node_count()));
    std::vector<char> monitored(m, 0);
    for (int i : br.nodes.v) {
      for (int e : model.monitored_by(i)) monitored[e] = 1;
    }
    // Receivers of the displaced mass: under-cap components of the best
    // response's monitored set, ascending index; spill past it if needed.
    for (int pass = 0; pass < 2 && excess > 1e-15; ++pass) {
      for (int e = 0; e < m && excess > 1e-15; ++e) {
        if (e == over) continue;
        if (pass == 0 && !monitored[e]) continue;
        if (pass == 1 && monitored[e]) continue;
        const double room = cap - out[e];
        if (room <= 1e-15) continue;
        const double moved = std::min(room, excess);
        out[e] += moved;
        excess -= moved;
      }
    }
    if (excess > 1e-12) {
      throw SolverError("cap reallocation could not place all excess mass");
    }
    over = first_over();
  }
  return out;
}

MixedStrategy decompose(const MarginalTarget& target, double tol) {
  target.validate();
  const int m = static_cast<int>(target.rho.size());
  const int b2 = target.b2;

  std::vector<double> goal(m);
  for (int e = 0; e < m; ++e) goal[e] = std::clamp(target.rho[e], 0.0, 1.0);

  std::vector<std::vector<int>> columns;
  std::set<std::vector<int>> column_keys;
  std::vector<double> weights;  // master primal for columns
  double slack_total = b2;

  const int max_rounds = 100 + 20 * m;
  for (int round = 0; round < max_rounds; ++round) {
    const int ncols = static_cast<int>(columns.size());

    LpProblem lp;  // min sum of slacks: vars = [sigma | s]
    lp.sense = LpSense::kMinimize;
    lp.objective.assign(ncols + m, 0.0);
    for (int e = 0; e < m; ++e) lp.objective[ncols + e] = 1.0;
    for (int e = 0; e < m; ++e) {
      std::vector<double> row(ncols + m, 0.0);
      for (int j = 0; j < ncols; ++j) {
        if (std::binary_search(columns[j].begin(), columns[j].end(), e)) row[j] = 1.0;
      }
      row[ncols + e] = 1.0;
      lp.rows.push_back(std::move(row));
      lp.row_sense.push_back(RowSense::kEqual);
      lp.rhs.push_back(goal[e]);
    }
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) {
      throw SolverError("marginal decomposition master did not solve");
    }
    weights.assign(ncols, 0.0);
    for (int j = 0; j < ncols; ++j) weights[j] = std::max(sol.primal[j], 0.0);
    slack_total = sol.objective;
    if (slack_total <= tol) break;

    // Price: plan of exactly b2 components with the largest dual weights.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sol.dual[a] > sol.dual[b]; });
    std::vector<int> plan(order.begin(), order.begin() + b2);
    std::sort(plan.begin(), plan.end());
    double gain = 0.0;
    for (int e : plan) gain += sol.dual[e];
    if (gain <= tol || column_keys.count(plan)) {
      break;  // no improving plan remains
    }
    column_keys.insert(plan);
    columns.push_back(std::move(plan));
  }

  if (slack_total > 1e-7) {
    throw SolverError("marginal decomposition left nonzero slack");
  }

  std::vector<MixedStrategy::Entry> support;
  double total = 0.0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (weights[j] > 1e-12) {
      support.push_back({columns[j], weights[j]});
      total += weights[j];
    }
  }
  if (support.empty()) throw SolverError("marginal decomposition produced an empty strategy");
  for (auto& e : support) e.prob /= total;
  return MixedStrategy(Side::kAttacker, b2, std::move(support));
}

}  // namespace inspectra
