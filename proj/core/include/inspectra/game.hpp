#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

struct GameParams {
  int b1 = 0;  // defender budget, >= 0
  int b2 = 1;  // attacker budget, >= 1
};

enum class Regime { kInterior, kB1CoversAll, kB2AtPacking, kB2OverPacking };

struct RateBounds {
  double lower = 0.0;
  double upper = 1.0;
  Regime regime = Regime::kInterior;
};

struct PayoffBounds {
  double u1_lower = 0.0, u1_upper = 0.0;
  double u2_lower = 0.0, u2_upper = 0.0;
  Regime regime = Regime::kInterior;
};

// Per-component monitoring probability under sigma1: eta(e) = E[F(S,{e})].
std::vector<double> monitoring_probabilities(const DetectionModel& model,
                                             const MixedStrategy& sigma1);

// u1 = E[F(S,T)], u2 = E[|T|] - u1; evaluated through component marginals.
std::pair<double, double> expected_payoffs(const DetectionModel& model,
                                           const MixedStrategy& sigma1,
                                           const MixedStrategy& sigma2);

// E[F(S,T)/|T|]. Rejects attacker support containing the empty plan.
double detection_rate(const DetectionModel& model, const MixedStrategy& sigma1,
                      const MixedStrategy& sigma2);

// Attacker's exact best response: the b2 components with the smallest
// monitoring probability (ties toward lower index), payoff b2 - sum(eta).
std::pair<ComponentSet, double> best_response_attacker(const DetectionModel& model,
                                                       const MixedStrategy& sigma1, int b2);

// Defender's exact best response: max-weight coverage of the attack
// marginals with exactly b1 nodes; payoff is the covered weight.
std::pair<NodeSet, double> best_response_defender(const DetectionModel& model,
                                                  const MixedStrategy& sigma2, int b1);

// Certified epsilon: the larger of the two players' exact deviation gains.
double verify_epsilon_ne(const DetectionModel& model, const GameParams& params,
                         const MixedStrategy& sigma1, const MixedStrategy& sigma2);

Regime classify_regime(const GameParams& params, int n_star, int m_star);

// Equilibrium detection-rate interval of the induced game (b1/n* lower,
// min(b1/m*, 1) upper in the interior regime; degenerate elsewhere).
RateBounds rate_bounds(int n_star, int m_star, const GameParams& params);
PayoffBounds payoff_bounds(int n_star, int m_star, const GameParams& params);

struct EquilibriumReport {
  double u1 = 0.0;
  double u2 = 0.0;
  double rate = 0.0;
  double epsilon = 0.0;
  RateBounds bounds;
};

EquilibriumReport evaluate_profile(const DetectionModel& model, const GameParams& params,
                                   int n_star, int m_star, const MixedStrategy& sigma1,
                                   const MixedStrategy& sigma2);

}  // namespace inspectra
