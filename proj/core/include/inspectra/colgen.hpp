#pragma once

#include <string>
#include <vector>

#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

// Master problem state for the single-attack-resource equilibrium LP:
// max z s.t. z <= sum_S F(S,e) sigma_S per component, sigma in the simplex,
// restricted to the generated column set.
struct MasterState {
  std::vector<std::vector<int>> columns;  // size-b1 positionings
  std::vector<double> sigma;              // master primal over columns
  double z = 0.0;                         // master objective
  std::vector<double> rho;                // dual per component, >= 0, sums to 1
  double z_prime = 0.0;                   // dual of the convexity row
  int iterations = 0;
};

struct ColgenIteration {
  double z = 0.0;
  double epsilon_prime = 0.0;
  double loss_prime = 0.0;
  int support_size = 0;
};

struct ColgenResult {
  double rate = 0.0;  // r*_{b1} at convergence
  MixedStrategy sigma1;
  MasterState state;
  std::vector<ColgenIteration> trace;  // one row per master solve
  bool converged = true;
  std::string diagnostic;
};

// Exact pricing: max-weight coverage of the dual weights with exactly b1
// nodes. reduced_cost = covered weight - z_prime.
struct PricedColumn {
  NodeSet nodes;
  double weight = 0.0;
  double reduced_cost = 0.0;
};
PricedColumn price_column(const DetectionModel& model, const std::vector<double>& duals,
                          double z_prime, int b1);

// Column generation on the b2 = 1 equilibrium LP, warm-started from the
// cyclic minimum-cover strategy. The first master value is b1/n*; the final
// value matches the enumeration oracle. b1 >= n* short-circuits to rate 1.
ColgenResult solve_colgen(const DetectionModel& model, int b1, double tol = 1e-9,
                          int max_iterations = -1);

// Interim guarantees for a master value r': epsilon' such that the current
// strategy paired with a cyclic packing attack is an epsilon'-NE, and the
// relative detection-loss bound l'. Both clamp at zero.
std::pair<double, double> interim_guarantees(double r_prime, int b1, int b2, int m_star);

struct RefinementRecord {
  int b1 = 0;
  double rate = 0.0;
  MixedStrategy sigma1;
  int iterations = 0;
  double epsilon_prime = 0.0;
  double loss_prime = 0.0;
};

struct RefinementOutcome {
  int selected_b1 = 0;
  double selected_rate = 0.0;
  MixedStrategy sigma1;
  std::vector<RefinementRecord> records;        // in solve order (decreasing b1)
  std::vector<std::pair<int, ColgenIteration>> trace;  // (b1, per-iteration row)
  int n_star = 0;
  int m_star = 0;
};

// Walks b1 down from ceil(alpha n*), solving the column-generation LP each
// time; returns the smallest b1 whose equilibrium rate still meets alpha.
RefinementOutcome refine(const DetectionModel& model, double alpha, int b2,
                         double tol = 1e-9, int max_iterations = -1);

}  // namespace inspectra
