#pragma once

#include "inspectra/game.hpp"
#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

struct ExactNE {
  MixedStrategy sigma1;
  MixedStrategy sigma2;
  double value = 0.0;  // defender's max-min expected detections
  double rate = 0.0;   // value / b2
};

// Number of size-k subsets, capped; used for the enumeration guard.
long long subset_count(int n, int k, long long cap);

// Full-enumeration equilibrium oracle: defender columns are all size-b1
// positionings, attacker rows all size-b2 plans. Requires both counts to be
// at most 50,000; larger instances are refused and belong to colgen.
// b1 >= n* collapses to the pure minimum-cover positioning with rate 1.
ExactNE solve_exact_ne(const DetectionModel& model, const GameParams& params);

// Same LP with a single-component attacker; the returned positioning is an
// equilibrium inspection strategy for every b2 below the packing number and
// its value is the budget-independent equilibrium rate.
ExactNE solve_exact_ne_b2_one(const DetectionModel& model, int b1);

}  // namespace inspectra
