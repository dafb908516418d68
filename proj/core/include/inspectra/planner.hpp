#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inspectra/colgen.hpp"
#include "inspectra/covers.hpp"
#include "inspectra/game.hpp"
#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

// Answer to the inspection planning question: how many detectors, positioned
// how, to hold the equilibrium detection rate at or above alpha.
struct PlanReport {
  double alpha = 0.0;
  int b2 = 1;
  int n_star = 0;             // |S'| when covers are heuristic
  int m_star = 0;             // |T'| when covers are heuristic
  SolveMode cover_mode = SolveMode::kExact;
  int b1 = 0;                 // ceil(alpha |S'|)
  int optimality_gap = 0;     // ceil(alpha |S'|) - ceil(alpha |T'|)
  double epsilon = 0.0;       // certificate of the constructed profile
  double relative_loss_bound = 0.0;
  bool certificates_valid = true;  // false once b2 >= m* voids the eps-NE claim
  double guaranteed_rate = 0.0;    // worst-case rate floor b1/|S'|
  MixedStrategy sigma1;
  std::optional<MixedStrategy> sigma2;
  struct Refined {
    int b1 = 0;
    double rate = 0.0;
    MixedStrategy sigma1;
  };
  std::optional<Refined> refined;
  std::vector<std::string> warnings;
};

// Certificate arithmetic shared by both planner entry points; pure in the
// cover/packing sizes so certificate values can be reproduced without
// instance data.
struct PlanCertificates {
  int b1 = 0;
  int optimality_gap = 0;
  double epsilon = 0.0;
  double relative_loss_bound = 0.0;
  double guaranteed_rate = 0.0;
};
PlanCertificates plan_certificates(int cover_size, int packing_size, double alpha, int b2);

// Cover/packing based approximate plan with the cyclic strategy profile and
// its guarantees. Greedy covers are minimalized before use.
PlanReport plan_approx(const DetectionModel& model, double alpha, int b2, SolveMode cover_mode);

// Approximate plan plus the column-generation refinement to the optimal b1.
PlanReport plan_exact(const DetectionModel& model, double alpha, int b2);

std::vector<std::string> regime_diagnostics(const GameParams& params, int n_star, int m_star);

}  // namespace inspectra
