#include "inspectra/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"

namespace inspectra {
namespace {

void check_sides(const MixedStrategy& sigma1, const MixedStrategy& sigma2) {
  if (sigma1.side() != Side::kDefender || sigma2.side() != Side::kAttacker) {
    throw ValidationError("strategy side mismatch");
  }
}

void check_indices(const DetectionModel& model, const MixedStrategy& s, int dimension) {
  for (const auto& e : s.support()) {
    for (int x : e.action) {
      if (x < 0 || x >= dimension) throw ValidationError("strategy references unknown id");
    }
  }
  (void)model;
}

}  // namespace

std::vector<double> monitoring_probabilities(const DetectionModel& model,
                                             const MixedStrategy& sigma1) {
  check_indices(model, sigma1, model.node_count());
  std::vector<double> eta(model.component_count(), 0.0);
  std::vector<std::uint64_t> acc(model.mask_words());
  for (const auto& entry : sigma1.support()) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int i : entry.action) {
      const auto& m = model.monitor_mask(i);
      for (int w = 0; w < model.mask_words(); ++w) acc[w] |= m[w];
    }
    for (int e = 0; e < model.component_count(); ++e) {
      if ((acc[e >> 6] >> (e & 63)) & 1) eta[e] += entry.prob;
    }
  }
  return eta;
}

std::pair<double, double> expected_payoffs(const DetectionModel& model,
                                           const MixedStrategy& sigma1,
                                           const MixedStrategy& sigma2) {
  check_sides(sigma1, sigma2);
  check_indices(model, sigma2, model.component_count());
  const auto eta = monitoring_probabilities(model, sigma1);
  double u1 = 0.0, expected_attacks = 0.0;
  for (const auto& entry : sigma2.support()) {
    double detected = 0.0;
    for (int e : entry.action) detected += eta[e];
    u1 += entry.prob * detected;
    expected_attacks += entry.prob * static_cast<double>(entry.action.size());
  }
  return {u1, expected_attacks - u1};
}

double detection_rate(const DetectionModel& model, const MixedStrategy& sigma1,
                      const MixedStrategy& sigma2) {
  check_sides(sigma1, sigma2);
  check_indices(model, sigma2, model.component_count());
  const auto eta = monitoring_probabilities(model, sigma1);
  double rate = 0.0;
  for (const auto& entry : sigma2.support()) {
    if (entry.action.empty()) throw ValidationError("empty attack plan in attacker support");
    double detected = 0.0;
    for (int e : entry.action) detected += eta[e];
    rate += entry.prob * detected / static_cast<double>(entry.action.size());
  }
  return rate;
}

std::pair<ComponentSet, double> best_response_attacker(const DetectionModel& model,
                                                       const MixedStrategy& sigma1, int b2) {
  if (b2 < 0 || b2 > model.component_count()) {
    throw ValidationError("attacker budget out of range");
  }
  const auto eta = monitoring_probabilities(model, sigma1);
  std::vector<int> order(model.component_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eta[a] < eta[b]; });
  ComponentSet t;
  double payoff = 0.0;
  for (int k = 0; k < b2; ++k) {
    t.v.push_back(order[k]);
    payoff += 1.0 - eta[order[k]];
  }
  std::sort(t.v.begin(), t.v.end());
  return {t, payoff};
}

std::pair<NodeSet, double> best_response_defender(const DetectionModel& model,
                                                  const MixedStrategy& sigma2, int b1) {
  if (b1 < 0 || b1 > model.node_count()) throw ValidationError("defender budget out of range");
  check_indices(model, sigma2, model.component_count());
  const auto rho = sigma2.marginals(model.component_count());
  const auto res = max_weight_cover(model, rho, b1);
  return {res.nodes, res.weight};
}

double verify_epsilon_ne(const DetectionModel& model, const GameParams& params,
                         const MixedStrategy& sigma1, const MixedStrategy& sigma2) {
  const auto [u1, u2] = expected_payoffs(model, sigma1, sigma2);
  const double defender_best = best_response_defender(model, sigma2, params.b1).second;
  const double attacker_best = best_response_attacker(model, sigma1, params.b2).second;
  return std::max({defender_best - u1, attacker_best - u2, 0.0});
}

Regime classify_regime(const GameParams& params, int n_star, int m_star) {
  if (n_star <= 0 || m_star <= 0) throw ValidationError("nonpositive cover/packing size");
  if (params.b1 >= n_star) return Regime::kB1CoversAll;
  if (params.b2 > m_star) return Regime::kB2OverPacking;
  if (params.b2 == m_star) return Regime::kB2AtPacking;
  return Regime::kInterior;
}

RateBounds rate_bounds(int n_star, int m_star, const GameParams& params) {
  RateBounds out;
  out.regime = classify_regime(params, n_star, m_star);
  if (out.regime == Regime::kB1CoversAll) {
    out.lower = out.upper = 1.0;
    return out;
  }
  out.lower = static_cast<double>(params.b1) / n_star;
  if (out.regime == Regime::kB2OverPacking) {
    out.upper = 1.0;  // only the floor guarantee survives past m*
    return out;
  }
  out.upper = std::min(static_cast<double>(params.b1) / m_star, 1.0);
  return out;
}

PayoffBounds payoff_bounds(int n_star, int m_star, const GameParams& params) {
  PayoffBounds out;
  out.regime = classify_regime(params, n_star, m_star);
  const double b1 = params.b1, b2 = params.b2;
  if (out.regime == Regime::kB1CoversAll) {
    out.u1_lower = out.u1_upper = b2;
    out.u2_lower = out.u2_upper = 0.0;
    return out;
  }
  out.u1_lower = b1 * b2 / n_star;
  out.u2_upper = b2 * (1.0 - b1 / n_star);
  if (out.regime == Regime::kB2OverPacking) {
    out.u1_upper = b2;
    out.u2_lower = 0.0;
    return out;
  }
  out.u1_upper = std::min(b1 * b2 / m_star, b2);
  out.u2_lower = std::max(0.0, b2 * (1.0 - b1 / m_star));
  return out;
}

EquilibriumReport evaluate_profile(const DetectionModel& model, const GameParams& params,
                                   int n_star, int m_star, const MixedStrategy& sigma1,
                                   const MixedStrategy& sigma2) {
  EquilibriumReport report;
  const auto [u1, u2] = expected_payoffs(model, sigma1, sigma2);
  report.u1 = u1;
  report.u2 = u2;
  report.rate = detection_rate(model, sigma1, sigma2);
  report.epsilon = verify_epsilon_ne(model, params, sigma1, sigma2);
  report.bounds = rate_bounds(n_star, m_star, params);
  return report;
}

}  // namespace inspectra
