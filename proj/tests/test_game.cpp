#include <doctest.h>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/game.hpp"
#include "test_util.hpp"

using namespace inspectra;

namespace {

MixedStrategy pure(Side side, int budget, std::vector<int> action) {
  std::vector<MixedStrategy::Entry> support;
  support.push_back({std::move(action), 1.0});
  return MixedStrategy(side, budget, std::move(support));
}

}  // namespace

TEST_SUITE_BEGIN("game");

TEST_CASE("expected payoffs on pure profiles") {
  const auto m = testutil::path3();
  SUBCASE("covered attack") {
    const auto [u1, u2] =
        expected_payoffs(m, pure(Side::kDefender, 2, {0, 2}), pure(Side::kAttacker, 1, {1}));
    CHECK(u1 == doctest::Approx(1.0));
    CHECK(u2 == doctest::Approx(0.0));
  }
  SUBCASE("undefended attack") {
    const auto [u1, u2] =
        expected_payoffs(m, pure(Side::kDefender, 0, {}), pure(Side::kAttacker, 1, {0}));
    CHECK(u1 == doctest::Approx(0.0));
    CHECK(u2 == doctest::Approx(1.0));
  }
  SUBCASE("side mismatch raises") {
    CHECK_THROWS_AS(expected_payoffs(m, pure(Side::kAttacker, 1, {0}),
                                     pure(Side::kAttacker, 1, {0})),
                    ValidationError);
  }
}

TEST_CASE("cyclic cover/packing profile hits b1 b2 / n* when n* = m*") {
  const auto m = testutil::path3();
  const auto cover = solve_msc(m, SolveMode::kExact);
  const auto packing = solve_msp(m, SolveMode::kExact);
  const auto s1 = cyclic_strategy(Side::kDefender, cover.cover.v, 1);
  const auto s2 = cyclic_strategy(Side::kAttacker, packing.packing.v, 1);
  const auto [u1, u2] = expected_payoffs(m, s1, s2);
  CHECK(u1 == doctest::Approx(1.0 / 2.0).epsilon(1e-12));  // b1 b2 / n*
  CHECK(u1 + u2 == doctest::Approx(1.0).epsilon(1e-12));   // full budgets
}

TEST_CASE("detection rate") {
  const auto m = testutil::path3();
  SUBCASE("full coverage detects everything") {
    const auto defender = pure(Side::kDefender, 2, {0, 2});
    const auto attacker = pure(Side::kAttacker, 2, {0, 3});
    CHECK(detection_rate(m, defender, attacker) == doctest::Approx(1.0));
  }
  SUBCASE("empty attack plan is rejected") {
    CHECK_THROWS_AS(
        detection_rate(m, pure(Side::kDefender, 1, {0}), pure(Side::kAttacker, 1, {})),
        ValidationError);
  }
  SUBCASE("exact NE of the unit game has rate 1/2") {
    std::vector<MixedStrategy::Entry> d;
    d.push_back({{0}, 0.5});
    d.push_back({{2}, 0.5});
    std::vector<MixedStrategy::Entry> a;
    a.push_back({{0}, 0.5});
    a.push_back({{3}, 0.5});
    CHECK(detection_rate(m, MixedStrategy(Side::kDefender, 1, d),
                         MixedStrategy(Side::kAttacker, 1, a)) == doctest::Approx(0.5));
  }
}

TEST_CASE("attacker best response targets the least monitored components") {
  const auto m = testutil::path3();
  const auto cover = solve_msc(m, SolveMode::kExact);
  const auto s1 = cyclic_strategy(Side::kDefender, cover.cover.v, 1);
  // eta is 1/2 on every component for this strategy; ties resolve by index.
  const auto eta = monitoring_probabilities(m, s1);
  for (double v : eta) CHECK(v == doctest::Approx(0.5));
  const auto [plan, payoff] = best_response_attacker(m, s1, 1);
  CHECK(m.component_ids(plan) == std::vector<std::string>{"e1"});
  CHECK(payoff == doctest::Approx(0.5));

  SUBCASE("all-covering defender leaves nothing") {
    const auto full = pure(Side::kDefender, 2, {0, 2});
    CHECK(best_response_attacker(m, full, 2).second == doctest::Approx(0.0));
  }
  SUBCASE("budget covering every component is forced") {
    const auto [t, p] = best_response_attacker(m, s1, 4);
    CHECK(t.size() == 4);
    CHECK(p == doctest::Approx(4 * 0.5));
  }
  SUBCASE("budget beyond the component count raises") {
    CHECK_THROWS_AS(best_response_attacker(m, s1, 5), ValidationError);
  }
}

TEST_CASE("defender best response is a max-weight coverage") {
  const auto m = testutil::path3();
  SUBCASE("split attack, one detector, deterministic tie") {
    std::vector<MixedStrategy::Entry> a;
    a.push_back({{0}, 0.5});
    a.push_back({{3}, 0.5});
    const auto [nodes, payoff] =
        best_response_defender(m, MixedStrategy(Side::kAttacker, 1, a), 1);
    CHECK(payoff == doctest::Approx(0.5));
    CHECK(m.node_ids(nodes) == std::vector<std::string>{"v1"});
  }
  SUBCASE("pure two-component attack met by the middle node") {
    const auto [nodes, payoff] =
        best_response_defender(m, pure(Side::kAttacker, 2, {1, 2}), 1);
    CHECK(payoff == doctest::Approx(2.0));
    CHECK(m.node_ids(nodes) == std::vector<std::string>{"v2"});
  }
  SUBCASE("full budget recovers the whole expected attack size") {
    const auto [nodes, payoff] =
        best_response_defender(m, pure(Side::kAttacker, 2, {0, 3}), 2);
    CHECK(payoff == doctest::Approx(2.0));
  }
}

TEST_CASE("epsilon certification") {
  const auto m = testutil::path3();
  GameParams params;
  params.b1 = 1;
  params.b2 = 1;
  std::vector<MixedStrategy::Entry> d;
  d.push_back({{0}, 0.5});
  d.push_back({{2}, 0.5});
  std::vector<MixedStrategy::Entry> a;
  a.push_back({{0}, 0.5});
  a.push_back({{3}, 0.5});
  const MixedStrategy s1(Side::kDefender, 1, d);
  const MixedStrategy s2(Side::kAttacker, 1, a);
  CHECK(verify_epsilon_ne(m, params, s1, s2) <= 1e-9);

  // Shifting a tenth of the defender's mass opens a profitable deviation.
  std::vector<MixedStrategy::Entry> skew;
  skew.push_back({{0}, 0.6});
  skew.push_back({{2}, 0.4});
  const double eps = verify_epsilon_ne(m, params, MixedStrategy(Side::kDefender, 1, skew), s2);
  CHECK(eps > 0.05);
}

TEST_CASE("restricted-game values of cyclic strategies over covers/packings") {
  // Against the cyclic strategy on a minimal cover S', the attacker's best
  // payoff is b2 (1 - b1/|S'|); against the cyclic attack on a packing T',
  // the defender leaves the attacker at least max{0, b2 (1 - b1/|T'|)}.
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testutil::random_model(12000 + trial, 6, 8);
    const auto minimal = minimalize_cover(m, solve_msc(m, SolveMode::kGreedy).cover);
    const auto packing = solve_msp(m, SolveMode::kExact);
    const int s = static_cast<int>(minimal.size());
    for (int b1 = 1; b1 <= s; ++b1) {
      const auto s1 = cyclic_strategy(Side::kDefender, minimal.v, b1);
      for (int b2 = 1; b2 <= std::min(2, m.component_count()); ++b2) {
        const double att_best = best_response_attacker(m, s1, b2).second;
        CHECK(att_best ==
              doctest::Approx(b2 * (1.0 - static_cast<double>(b1) / s)).epsilon(1e-9));
      }
    }
    for (int b2 = 1; b2 <= packing.size; ++b2) {
      const auto s2 = cyclic_strategy(Side::kAttacker, packing.packing.v, b2);
      for (int b1 = 1; b1 <= m.node_count(); ++b1) {
        const double def_best = best_response_defender(m, s2, b1).second;
        const double attacker_value = b2 - def_best;  // min over defender replies
        const double expect =
            std::max(0.0, b2 * (1.0 - static_cast<double>(b1) / packing.size));
        CHECK(attacker_value == doctest::Approx(expect).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("parametric rate and payoff bounds") {
  GameParams p;
  p.b1 = 3;
  p.b2 = 2;
  SUBCASE("reference configuration numbers") {
    const auto rb = rate_bounds(4, 3, p);
    CHECK(rb.lower == doctest::Approx(0.75));
    CHECK(rb.upper == doctest::Approx(1.0));
    CHECK(rb.regime == Regime::kInterior);
    const auto pb = payoff_bounds(4, 3, p);
    CHECK(pb.u1_lower == doctest::Approx(1.5));
    CHECK(pb.u1_upper == doctest::Approx(2.0));
    CHECK(pb.u2_lower == doctest::Approx(0.0));
    CHECK(pb.u2_upper == doctest::Approx(0.5));
  }
  SUBCASE("equal cover and packing pins the rate") {
    GameParams q;
    q.b1 = 2;
    q.b2 = 1;
    const auto rb = rate_bounds(4, 4, q);
    CHECK(rb.lower == doctest::Approx(rb.upper));
    CHECK(rb.lower == doctest::Approx(0.5));
  }
  SUBCASE("covering budget collapses the interval at one") {
    GameParams q;
    q.b1 = 4;
    q.b2 = 1;
    const auto rb = rate_bounds(4, 3, q);
    CHECK(rb.lower == doctest::Approx(1.0));
    CHECK(rb.upper == doctest::Approx(1.0));
    CHECK(rb.regime == Regime::kB1CoversAll);
  }
  SUBCASE("nonpositive sizes raise") {
    CHECK_THROWS_AS(rate_bounds(0, 1, p), ValidationError);
  }
}

TEST_SUITE_END();
