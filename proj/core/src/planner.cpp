#include "inspectra/planner.hpp"

#include <algorithm>
#include <cmath>

#include "inspectra/errors.hpp"
#include "inspectra/rational.hpp"

namespace inspectra {
namespace {

MixedStrategy empty_defender() {
  std::vector<MixedStrategy::Entry> support;
  support.push_back({{}, 1.0});
  return MixedStrategy(Side::kDefender, 0, std::move(support));
}

}  // namespace

PlanCertificates plan_certificates(int cover_size, int packing_size, double alpha, int b2) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0,1]");
  if (cover_size <= 0 || packing_size <= 0 || packing_size > cover_size) {
    throw ValidationError("cover/packing sizes must satisfy 0 < |T'| <= |S'|");
  }
  if (b2 < 1) throw ValidationError("attacker budget must be at least 1");

  PlanCertificates c;
  c.b1 = static_cast<int>(ceil_scale(alpha, cover_size));
  c.optimality_gap = c.b1 - static_cast<int>(ceil_scale(alpha, packing_size));
  c.guaranteed_rate = Rational(c.b1, cover_size).to_double();
  if (c.b1 == 0) {
    c.epsilon = 0.0;
    c.relative_loss_bound = alpha > 0.0 ? 1.0 : 0.0;
    return c;
  }
  // Exact rational evaluation so certificate values like 1/2 and 25%
  // come out bit-exact in the report.
  const std::int64_t cap = std::max(c.b1, packing_size);
  const Rational eps =
      Rational(c.b1) * Rational(b2) * (Rational(1, cap) - Rational(1, cover_size));
  const Rational loss = Rational(1) - Rational(cap, cover_size);
  c.epsilon = std::max(0.0, eps.to_double());
  c.relative_loss_bound = std::clamp(loss.to_double(), 0.0, 1.0);
  return c;
}

std::vector<std::string> regime_diagnostics(const GameParams& params, int n_star, int m_star) {
  std::vector<std::string> out;
  if (n_star <= 0 || m_star <= 0) throw ValidationError("nonpositive cover/packing size");
  if (params.b1 >= n_star) {
    out.push_back("b1 >= n*: complete monitoring (trivial game)");
  }
  if (params.b2 > m_star) {
    out.push_back(
        "b2 > m*: equilibrium structure guarantees void; the b1/n* rate floor still holds");
  } else if (params.b2 == m_star) {
    out.push_back("b2 = m*: boundary regime; guarantees hold except the basis-cover property");
  }
  return out;
}

PlanReport plan_approx(const DetectionModel& model, double alpha, int b2, SolveMode cover_mode) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0,1]");
  if (b2 < 1) throw ValidationError("attacker budget must be at least 1");
  model.require_valid();

  const CoverResult cover = solve_msc(model, cover_mode);
  const PackingResult packing = solve_msp(model, cover_mode);
  // Heuristic covers must be inclusion-minimal before the cyclic value
  // guarantee applies.
  NodeSet base = cover.cover;
  if (cover_mode == SolveMode::kGreedy) base = minimalize_cover(model, base);

  PlanReport report;
  report.alpha = alpha;
  report.b2 = b2;
  report.cover_mode = cover_mode;
  report.n_star = static_cast<int>(base.size());
  report.m_star = packing.size;

  const PlanCertificates cert =
      plan_certificates(report.n_star, report.m_star, alpha, b2);
  report.b1 = cert.b1;
  report.optimality_gap = cert.optimality_gap;
  report.epsilon = cert.epsilon;
  report.relative_loss_bound = cert.relative_loss_bound;
  report.guaranteed_rate = cert.guaranteed_rate;

  report.sigma1 = report.b1 > 0 ? cyclic_strategy(Side::kDefender, base.v, report.b1)
                                : empty_defender();
  if (b2 <= packing.size && packing.size > 0) {
    report.sigma2 = cyclic_strategy(Side::kAttacker, packing.packing.v, b2);
  }

  GameParams params;
  params.b1 = report.b1;
  params.b2 = b2;
  report.warnings = regime_diagnostics(params, report.n_star, report.m_star);
  if (b2 >= report.m_star) {
    report.certificates_valid = false;
    report.warnings.push_back(
        "b2 >= m*: epsilon-NE and optimality-gap certificates suppressed; "
        "the rate floor b1/|S'| remains valid");
  }
  return report;
}

PlanReport plan_exact(const DetectionModel& model, double alpha, int b2) {
  PlanReport report = plan_approx(model, alpha, b2, SolveMode::kExact);
  if (b2 >= report.m_star) {
    report.warnings.push_back(
        "b2 >= m*: refined b1 is exact for the b2 < m* equilibrium rate only");
  }
  const RefinementOutcome outcome = refine(model, alpha, b2);
  PlanReport::Refined refined;
  refined.b1 = outcome.selected_b1;
  refined.rate = outcome.selected_rate;
  refined.sigma1 = outcome.sigma1;
  report.refined = std::move(refined);
  return report;
}

}  // namespace inspectra
