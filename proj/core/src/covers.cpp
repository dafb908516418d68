#include "inspectra/covers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inspectra/errors.hpp"
#include "inspectra/lp.hpp"

namespace inspectra {
namespace {

constexpr double kIntTol = 1e-6;

enum : char { kUndecided = 0, kIn = 1, kOut = 2 };

// ----- minimum set cover -------------------------------------------------

NodeSet greedy_cover(const DetectionModel& model) {
  const int n = model.node_count();
  const int m = model.component_count();
  std::vector<char> covered(m, 0);
  int remaining = m;
  NodeSet chosen;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int i = 0; i < n; ++i) {
      if (chosen.contains(i)) continue;
      int gain = 0;
      for (int e : model.monitored_by(i)) gain += !covered[e];
      if (gain > best_gain) { best_gain = gain; best = i; }
    }
    if (best < 0) throw ValidationError("set cover infeasible: uncoverable component");
    chosen.v.insert(std::lower_bound(chosen.v.begin(), chosen.v.end(), best), best);
    for (int e : model.monitored_by(best)) {
      if (!covered[e]) { covered[e] = 1; --remaining; }
    }
  }
  return chosen;
}

struct CoverSearch {
  const DetectionModel& model;
  std::vector<char> state;       // per node
  std::vector<int> cover_count;  // per component, # chosen monitors
  int chosen = 0;
  int uncovered;
  std::vector<int> best;
  long explored = 0;

  explicit CoverSearch(const DetectionModel& m)
      : model(m),
        state(m.node_count(), kUndecided),
        cover_count(m.component_count(), 0),
        uncovered(m.component_count()) {}

  // LP bound over undecided nodes for uncovered components; returns the
  // relaxation solution for branching.
  bool lp_bound(double& value, std::vector<int>& vars, std::vector<double>& x) {
    vars.clear();
    std::vector<int> var_of(model.node_count(), -1);
    for (int i = 0; i < model.node_count(); ++i) {
      if (state[i] == kUndecided) {
        var_of[i] = static_cast<int>(vars.size());
        vars.push_back(i);
      }
    }
    LpProblem lp;
    lp.sense = LpSense::kMinimize;
    lp.objective.assign(vars.size(), 1.0);
    for (int e = 0; e < model.component_count(); ++e) {
      if (cover_count[e] > 0) continue;
      std::vector<double> row(vars.size(), 0.0);
      bool any = false;
      for (int i : model.monitors_of(e)) {
        if (var_of[i] >= 0) { row[var_of[i]] = 1.0; any = true; }
      }
      if (!any) return false;  // component lost in this branch
      lp.rows.push_back(std::move(row));
      lp.row_sense.push_back(RowSense::kGreaterEqual);
      lp.rhs.push_back(1.0);
    }
    if (lp.rows.empty()) { value = 0.0; x.assign(vars.size(), 0.0); return true; }
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) {
      throw SolverError("set cover relaxation did not solve");
    }
    value = sol.objective;
    x = sol.primal;
    return true;
  }

  void dfs() {
    ++explored;
    if (uncovered == 0) {
      if (best.empty() || chosen < static_cast<int>(best.size())) {
        best.clear();
        for (int i = 0; i < model.node_count(); ++i) {
          if (state[i] == kIn) best.push_back(i);
        }
      }
      return;
    }
    double bound;
    std::vector<int> vars;
    std::vector<double> x;
    if (!lp_bound(bound, vars, x)) return;
    const long lb = chosen + static_cast<long>(std::ceil(bound - kIntTol));
    if (!best.empty() && lb >= static_cast<long>(best.size())) return;

    // Integral relaxation closes the node.
    bool integral = true;
    for (double v : x) {
      if (v > kIntTol && v < 1.0 - kIntTol) { integral = false; break; }
    }
    if (integral) {
      std::vector<int> sol;
      for (int i = 0; i < model.node_count(); ++i) {
        if (state[i] == kIn) sol.push_back(i);
      }
      for (std::size_t j = 0; j < vars.size(); ++j) {
        if (x[j] >= 1.0 - kIntTol) sol.push_back(vars[j]);
      }
      std::sort(sol.begin(), sol.end());
      if (best.empty() || sol.size() < best.size()) best = sol;
      return;
    }

    int branch = -1;
    double frac_dist = 2.0;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const double d = std::abs(x[j] - 0.5);
      if (d < frac_dist - 1e-12) { frac_dist = d; branch = vars[j]; }
    }

    take(branch);
    dfs();
    untake(branch);

    state[branch] = kOut;
    // A component whose last potential monitor just left is lost; prune fast.
    bool feasible = true;
    for (int e : model.monitored_by(branch)) {
      if (cover_count[e] > 0) continue;
      bool can = false;
      for (int i : model.monitors_of(e)) {
        if (state[i] != kOut) { can = true; break; }
      }
      if (!can) { feasible = false; break; }
    }
    if (feasible) dfs();
    state[branch] = kUndecided;
  }

  void take(int i) {
    state[i] = kIn;
    ++chosen;
    for (int e : model.monitored_by(i)) {
      if (cover_count[e]++ == 0) --uncovered;
    }
  }
  void untake(int i) {
    state[i] = kUndecided;
    --chosen;
    for (int e : model.monitored_by(i)) {
      if (--cover_count[e] == 0) ++uncovered;
    }
  }
};

// ----- maximum set packing -----------------------------------------------

ComponentSet greedy_packing(const DetectionModel& model) {
  const int m = model.component_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return model.monitors_of(a).size() < model.monitors_of(b).size();
  });
  std::vector<char> node_used(model.node_count(), 0);
  ComponentSet chosen;
  for (int e : order) {
    bool conflict = false;
    for (int i : model.monitors_of(e)) {
      if (node_used[i]) { conflict = true; break; }
    }
    if (conflict) continue;
    for (int i : model.monitors_of(e)) node_used[i] = 1;
    chosen.v.push_back(e);
  }
  std::sort(chosen.v.begin(), chosen.v.end());
  return chosen;
}

struct PackingSearch {
  const DetectionModel& model;
  std::vector<char> state;      // per component
  std::vector<int> node_load;   // per node, # chosen components it monitors
  int chosen = 0;
  std::vector<int> best;
  long explored = 0;

  explicit PackingSearch(const DetectionModel& m)
      : model(m), state(m.component_count(), kUndecided), node_load(m.node_count(), 0) {}

  bool addable(int e) const {
    for (int i : model.monitors_of(e)) {
      if (node_load[i] > 0) return false;
    }
    return true;
  }

  double lp_bound(std::vector<int>& vars, std::vector<double>& x) {
    vars.clear();
    std::vector<int> var_of(model.component_count(), -1);
    for (int e = 0; e < model.component_count(); ++e) {
      if (state[e] == kUndecided && addable(e)) {
        var_of[e] = static_cast<int>(vars.size());
        vars.push_back(e);
      }
    }
    if (vars.empty()) { x.clear(); return 0.0; }
    LpProblem lp;
    lp.sense = LpSense::kMaximize;
    lp.objective.assign(vars.size(), 1.0);
    lp.upper.assign(vars.size(), 1.0);
    lp.lower.assign(vars.size(), 0.0);
    for (int i = 0; i < model.node_count(); ++i) {
      if (node_load[i] > 0) continue;
      std::vector<double> row(vars.size(), 0.0);
      int nz = 0;
      for (int e : model.monitored_by(i)) {
        if (var_of[e] >= 0) { row[var_of[e]] = 1.0; ++nz; }
      }
      if (nz >= 2) {
        lp.rows.push_back(std::move(row));
        lp.row_sense.push_back(RowSense::kLessEqual);
        lp.rhs.push_back(1.0);
      }
    }
    if (lp.rows.empty()) { x.assign(vars.size(), 1.0); return static_cast<double>(vars.size()); }
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) {
      throw SolverError("set packing relaxation did not solve");
    }
    x = sol.primal;
    return sol.objective;
  }

  void dfs() {
    ++explored;
    if (chosen > static_cast<int>(best.size())) {
      best.clear();
      for (int e = 0; e < model.component_count(); ++e) {
        if (state[e] == kIn) best.push_back(e);
      }
    }
    std::vector<int> vars;
    std::vector<double> x;
    const double bound = lp_bound(vars, x);
    const long ub = chosen + static_cast<long>(std::floor(bound + kIntTol));
    if (ub <= static_cast<long>(best.size())) return;

    bool integral = true;
    for (double v : x) {
      if (v > kIntTol && v < 1.0 - kIntTol) { integral = false; break; }
    }
    if (integral) {
      // Rounded-up candidate must still be a packing; conflicts between two
      // x=1 components can slip through only via shared nodes, so verify.
      std::vector<int> cand;
      for (int e = 0; e < model.component_count(); ++e) {
        if (state[e] == kIn) cand.push_back(e);
      }
      std::vector<int> load(model.node_count(), 0);
      bool ok = true;
      std::vector<int> add;
      for (std::size_t j = 0; j < vars.size() && ok; ++j) {
        if (x[j] >= 1.0 - kIntTol) {
          add.push_back(vars[j]);
          for (int i : model.monitors_of(vars[j])) {
            if (++load[i] > 1) { ok = false; }
          }
        }
      }
      if (ok) {
        cand.insert(cand.end(), add.begin(), add.end());
        std::sort(cand.begin(), cand.end());
        if (cand.size() > best.size()) best = cand;
        return;
      }
    }

    int branch = -1;
    double frac_dist = 2.0;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const double d = std::abs(x[j] - 0.5);
      if (d < frac_dist - 1e-12) { frac_dist = d; branch = vars[j]; }
    }
    if (branch < 0) return;

    state[branch] = kIn;
    ++chosen;
    for (int i : model.monitors_of(branch)) ++node_load[i];
    dfs();
    for (int i : model.monitors_of(branch)) --node_load[i];
    --chosen;
    state[branch] = kOut;
    dfs();
    state[branch] = kUndecided;
  }
};

}  // namespace

CoverResult solve_msc(const DetectionModel& model, SolveMode mode) {
  model.require_valid();
  CoverResult out;
  if (model.component_count() == 0) {
    out.status = mode;
    return out;
  }
  if (mode == SolveMode::kGreedy) {
    out.cover = greedy_cover(model);
    out.size = static_cast<int>(out.cover.size());
    out.status = SolveMode::kGreedy;
    return out;
  }
  CoverSearch search(model);
  search.best = greedy_cover(model).v;  // warm incumbent
  search.dfs();
  out.cover = NodeSet(search.best);
  out.size = static_cast<int>(out.cover.size());
  out.status = SolveMode::kExact;
  out.node_count_explored = search.explored;
  return out;
}

PackingResult solve_msp(const DetectionModel& model, SolveMode mode) {
  model.require_valid();
  PackingResult out;
  if (model.component_count() == 0) {
    out.status = mode;
    return out;
  }
  if (mode == SolveMode::kGreedy) {
    out.packing = greedy_packing(model);
    out.size = static_cast<int>(out.packing.size());
    out.status = SolveMode::kGreedy;
    return out;
  }
  PackingSearch search(model);
  search.best = greedy_packing(model).v;  // warm incumbent
  search.dfs();
  out.packing = ComponentSet(search.best);
  out.size = static_cast<int>(out.packing.size());
  out.status = SolveMode::kExact;
  out.node_count_explored = search.explored;
  return out;
}

bool is_set_cover(const DetectionModel& model, const NodeSet& s) {
  return model.monitored_set(s).size() == static_cast<std::size_t>(model.component_count());
}

bool is_set_packing(const DetectionModel& model, const ComponentSet& t) {
  std::vector<int> load(model.node_count(), 0);
  for (int e : t.v) {
    for (int i : model.monitors_of(e)) {
      if (++load[i] > 1) return false;
    }
  }
  return true;
}

NodeSet minimalize_cover(const DetectionModel& model, const NodeSet& cover) {
  model.check_node_set(cover);
  if (!is_set_cover(model, cover)) throw ValidationError("minimalize_cover: input is not a set cover");
  std::vector<int> kept = cover.v;
  for (auto it = cover.v.rbegin(); it != cover.v.rend(); ++it) {
    std::vector<int> trial;
    trial.reserve(kept.size());
    for (int i : kept) {
      if (i != *it) trial.push_back(i);
    }
    if (trial.size() < kept.size() && is_set_cover(model, NodeSet(trial))) kept = trial;
  }
  return NodeSet(kept);
}

WeightedCoverResult max_weight_cover(const DetectionModel& model,
                                     const std::vector<double>& weights, int k) {
  model.require_valid();
  if (static_cast<int>(weights.size()) != model.component_count()) {
    throw ValidationError("max_weight_cover: weight vector size mismatch");
  }
  for (double w : weights) {
    if (w < -1e-12) throw ValidationError("max_weight_cover: negative weight");
  }
  const int n = model.node_count();
  if (k < 0 || k > n) throw ValidationError("max_weight_cover: budget out of range");

  WeightedCoverResult out;
  if (k == 0) return out;

  struct Search {
    const DetectionModel& model;
    const std::vector<double>& w;
    int k;
    std::vector<int> current;
    std::vector<int> cover_count;
    double current_weight = 0.0;
    std::vector<int> best;
    double best_weight = -1.0;
    long explored = 0;

    double gain(int i) const {
      double g = 0.0;
      for (int e : model.monitored_by(i)) {
        if (cover_count[e] == 0) g += w[e];
      }
      return g;
    }

    void dfs(int next_node) {
      ++explored;
      if (static_cast<int>(current.size()) == k) {
        if (current_weight > best_weight + 1e-12) {
          best_weight = current_weight;
          best = current;
        }
        return;
      }
      const int need = k - static_cast<int>(current.size());
      if (model.node_count() - next_node < need) return;

      // Optimistic bound: top `need` independent gains.
      std::vector<double> gains;
      gains.reserve(model.node_count() - next_node);
      for (int i = next_node; i < model.node_count(); ++i) gains.push_back(gain(i));
      std::partial_sort(gains.begin(), gains.begin() + need, gains.end(),
                        std::greater<double>());
      double ub = current_weight;
      for (int j = 0; j < need; ++j) ub += gains[j];
      if (ub <= best_weight + 1e-12) return;

      // Include branch first keeps the first-found optimum lexicographic.
      const double delta = gain(next_node);
      current.push_back(next_node);
      for (int e : model.monitored_by(next_node)) ++cover_count[e];
      current_weight += delta;
      dfs(next_node + 1);
      current_weight -= delta;
      for (int e : model.monitored_by(next_node)) --cover_count[e];
      current.pop_back();

      dfs(next_node + 1);
    }
  };

  Search s{model, weights, k, {}, {}, 0.0, {}, -1.0, 0};
  s.cover_count.assign(model.component_count(), 0);
  s.dfs(0);
  out.nodes = NodeSet(s.best);
  out.weight = std::max(s.best_weight, 0.0);
  out.node_count_explored = s.explored;
  return out;
}

}  // namespace inspectra
