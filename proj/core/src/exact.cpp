#include "inspectra/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/lp.hpp"

namespace inspectra {
namespace {

constexpr long long kEnumGuard = 50000;

// Lexicographic size-k subsets of {0..n-1}.
std::vector<std::vector<int>> enumerate_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int j = pos + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

MixedStrategy pure_strategy(Side side, int budget, std::vector<int> action) {
  std::vector<MixedStrategy::Entry> support;
  support.push_back({std::move(action), 1.0});
  return MixedStrategy(side, budget, std::move(support));
}

// Zero-sum matrix game on a dense payoff matrix: maximizing player mixes
// over columns, minimizing player over rows. Solved in whichever orientation
// has fewer LP rows; the other side's strategy comes from the duals.
struct GameSolution {
  double value = 0.0;
  std::vector<double> col_mix;
  std::vector<double> row_mix;
};

GameSolution solve_matrix_game(const std::vector<std::vector<double>>& payoff) {
  const int nrows = static_cast<int>(payoff.size());
  const int ncols = static_cast<int>(payoff[0].size());
  GameSolution out;

  const bool transpose = nrows > ncols;
  const int rows = transpose ? ncols : nrows;
  const int cols = transpose ? nrows : ncols;
  auto at = [&](int r, int c) { return transpose ? payoff[c][r] : payoff[r][c]; };

  // Primal orientation: max z s.t. per row, payoff . mix >= z (or the
  // transposed min w with <= rows).
  LpProblem lp;
  lp.sense = transpose ? LpSense::kMinimize : LpSense::kMaximize;
  const int zvar = cols;
  lp.objective.assign(cols + 1, 0.0);
  lp.objective[zvar] = 1.0;
  lp.lower.assign(cols + 1, 0.0);
  lp.lower[zvar] = -kLpInf;
  lp.upper.assign(cols + 1, kLpInf);
  for (int r = 0; r < rows; ++r) {
    std::vector<double> row(cols + 1, 0.0);
    for (int c = 0; c < cols; ++c) row[c] = at(r, c);
    row[zvar] = -1.0;
    lp.rows.push_back(std::move(row));
    lp.row_sense.push_back(transpose ? RowSense::kLessEqual : RowSense::kGreaterEqual);
    lp.rhs.push_back(0.0);
  }
  {
    std::vector<double> row(cols + 1, 0.0);
    for (int c = 0; c < cols; ++c) row[c] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.row_sense.push_back(RowSense::kEqual);
    lp.rhs.push_back(1.0);
  }

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw SolverError("equilibrium LP did not reach optimality");
  }
  out.value = sol.objective;

  std::vector<double> primal(cols), dual(rows);
  for (int c = 0; c < cols; ++c) primal[c] = std::max(sol.primal[c], 0.0);
  // Row duals carry the opponent's weights with a uniform sign, summing to
  // +-1; mixed signs or a bad total mean the solve cannot be trusted.
  double signed_total = 0.0;
  for (int r = 0; r < rows; ++r) {
    dual[r] = std::abs(sol.dual[r]);
    signed_total += sol.dual[r];
  }
  double dual_total = 0.0;
  for (double d : dual) dual_total += d;
  if (std::abs(dual_total - 1.0) > 1e-6 || std::abs(std::abs(signed_total) - 1.0) > 1e-6) {
    throw SolverError("equilibrium LP duals do not form a mixed strategy");
  }
  for (double& d : dual) d /= dual_total;

  out.col_mix = transpose ? dual : primal;
  out.row_mix = transpose ? primal : dual;
  return out;
}

// Builds the payoff matrix U1(S,T) and assembles both equilibrium
// strategies. Plans index rows, positionings columns.
ExactNE solve_restricted(const DetectionModel& model, int b1, int b2,
                         const std::vector<std::vector<int>>& positionings,
                         const std::vector<std::vector<int>>& plans) {
  const int ncols = static_cast<int>(positionings.size());
  const int nrows = static_cast<int>(plans.size());

  std::vector<std::vector<std::uint64_t>> masks(ncols,
      std::vector<std::uint64_t>(model.mask_words(), 0));
  for (int j = 0; j < ncols; ++j) {
    for (int i : positionings[j]) {
      const auto& m = model.monitor_mask(i);
      for (int w = 0; w < model.mask_words(); ++w) masks[j][w] |= m[w];
    }
  }
  std::vector<std::vector<double>> payoff(nrows, std::vector<double>(ncols, 0.0));
  for (int r = 0; r < nrows; ++r) {
    for (int j = 0; j < ncols; ++j) {
      int detected = 0;
      for (int e : plans[r]) {
        detected += static_cast<int>((masks[j][e >> 6] >> (e & 63)) & 1);
      }
      payoff[r][j] = static_cast<double>(detected);
    }
  }

  const GameSolution game = solve_matrix_game(payoff);

  ExactNE out;
  out.value = game.value;
  out.rate = b2 > 0 ? out.value / b2 : 0.0;

  std::vector<MixedStrategy::Entry> def;
  double def_total = 0.0;
  for (int j = 0; j < ncols; ++j) {
    if (game.col_mix[j] > 1e-12) {
      def.push_back({positionings[j], game.col_mix[j]});
      def_total += game.col_mix[j];
    }
  }
  for (auto& e : def) e.prob /= def_total;
  out.sigma1 = MixedStrategy(Side::kDefender, b1, std::move(def));

  std::vector<MixedStrategy::Entry> att;
  double att_total = 0.0;
  for (int r = 0; r < nrows; ++r) {
    if (game.row_mix[r] > 1e-12) {
      att.push_back({plans[r], game.row_mix[r]});
      att_total += game.row_mix[r];
    }
  }
  if (att.empty()) throw SolverError("equilibrium attack strategy is empty");
  for (auto& e : att) e.prob /= att_total;
  out.sigma2 = MixedStrategy(Side::kAttacker, b2, std::move(att));
  return out;
}

}  // namespace

long long subset_count(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int j = 1; j <= k; ++j) {
    c = c * (n - k + j) / j;
    if (c > cap) return cap + 1;
  }
  return c;
}

ExactNE solve_exact_ne(const DetectionModel& model, const GameParams& params) {
  model.require_valid();
  if (params.b2 < 1 || params.b2 > model.component_count()) {
    throw ValidationError("attacker budget out of range");
  }
  if (params.b1 < 0 || params.b1 > model.node_count()) {
    throw ValidationError("defender budget out of range");
  }

  const CoverResult msc = solve_msc(model, SolveMode::kExact);
  if (params.b1 >= msc.size) {
    ExactNE out;
    out.sigma1 = pure_strategy(Side::kDefender, params.b1, msc.cover.v);
    auto br = best_response_attacker(model, out.sigma1, params.b2);
    out.sigma2 = pure_strategy(Side::kAttacker, params.b2, br.first.v);
    out.value = params.b2;
    out.rate = 1.0;
    return out;
  }

  if (subset_count(model.node_count(), params.b1, kEnumGuard) > kEnumGuard ||
      subset_count(model.component_count(), params.b2, kEnumGuard) > kEnumGuard) {
    throw SolverError(
        "instance too large for full enumeration; use the column-generation refinement");
  }
  const auto positionings = enumerate_subsets(model.node_count(), params.b1);
  const auto plans = enumerate_subsets(model.component_count(), params.b2);
  return solve_restricted(model, params.b1, params.b2, positionings, plans);
}

ExactNE solve_exact_ne_b2_one(const DetectionModel& model, int b1) {
  model.require_valid();
  if (b1 < 0 || b1 > model.node_count()) throw ValidationError("defender budget out of range");
  if (b1 == 0) {
    ExactNE out;
    out.sigma1 = pure_strategy(Side::kDefender, 0, {});
    out.sigma2 = pure_strategy(Side::kAttacker, 1, {0});
    out.value = 0.0;
    out.rate = 0.0;
    return out;
  }
  const CoverResult msc = solve_msc(model, SolveMode::kExact);
  if (b1 >= msc.size) {
    GameParams p;
    p.b1 = b1;
    p.b2 = 1;
    return solve_exact_ne(model, p);
  }
  if (subset_count(model.node_count(), b1, kEnumGuard) > kEnumGuard) {
    throw SolverError(
        "instance too large for full enumeration; use the column-generation refinement");
  }
  const auto positionings = enumerate_subsets(model.node_count(), b1);
  std::vector<std::vector<int>> plans(model.component_count());
  for (int e = 0; e < model.component_count(); ++e) plans[e] = {e};
  return solve_restricted(model, b1, 1, positionings, plans);
}

}  // namespace inspectra
