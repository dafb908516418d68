#pragma once

#include <string>
#include <vector>

#include "inspectra/model.hpp"

namespace inspectra {

enum class SolveMode { kExact, kGreedy };

struct CoverResult {
  NodeSet cover;
  int size = 0;
  SolveMode status = SolveMode::kExact;
  long node_count_explored = 0;
};

struct PackingResult {
  ComponentSet packing;
  int size = 0;
  SolveMode status = SolveMode::kExact;
  long node_count_explored = 0;
};

// Minimum set cover. Exact mode is depth-first branch and bound with an LP
// relaxation bound, branching on the most fractional variable (ties by
// index); greedy mode takes max marginal coverage with lowest-index ties.
CoverResult solve_msc(const DetectionModel& model, SolveMode mode);

// Maximum set packing, same machinery on the component side. Greedy picks
// components with the fewest monitoring nodes first, skipping conflicts.
PackingResult solve_msp(const DetectionModel& model, SolveMode mode);

// Inclusion-minimal subcover: drops nodes in reverse declared order while
// coverage holds. Throws if the input is not a cover.
NodeSet minimalize_cover(const DetectionModel& model, const NodeSet& cover);

bool is_set_cover(const DetectionModel& model, const NodeSet& s);
bool is_set_packing(const DetectionModel& model, const ComponentSet& t);

// Max-weight coverage with exactly k nodes: branch and bound over nodes in
// index order (include branch first), so among optima the lexicographically
// smallest is returned. Weights must be nonnegative.
struct WeightedCoverResult {
  NodeSet nodes;
  double weight = 0.0;
  long node_count_explored = 0;
};
WeightedCoverResult max_weight_cover(const DetectionModel& model,
                                     const std::vector<double>& weights, int k);

}  // namespace inspectra
