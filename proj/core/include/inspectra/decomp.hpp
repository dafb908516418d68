#pragma once

#include <vector>

#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

// Per-component target attack probabilities for one attacker budget; entries
// lie in [0,1] and sum to b2.
struct MarginalTarget {
  std::vector<double> rho;
  int b2 = 1;

  void validate() const;  // throws ValidationError on a broken target
};

// Reallocates excess mass so no component is targeted with probability above
// 1/m*, preserving the total and the optimal-attack value. Mass leaving an
// over-cap component flows to under-cap components monitored by the current
// defender best response, in ascending index order.
std::vector<double> cap_marginals(const DetectionModel& model, int b1,
                                  const std::vector<double>& rho, int m_star);

// Builds an attack strategy over plans of size exactly b2 whose marginals hit
// the target, via column generation on min 1's + slack with pricing by the
// top-b2 dual components. Feasibility is guaranteed for any valid target.
MixedStrategy decompose(const MarginalTarget& target, double tol = 1e-9);

}  // namespace inspectra
