#include <doctest.h>

#include <cstdint>
#include <random>

#include "inspectra/errors.hpp"
#include "inspectra/json_io.hpp"
#include "inspectra/strategies.hpp"
#include "test_util.hpp"

using namespace inspectra;

TEST_SUITE_BEGIN("strategies");

TEST_CASE("cyclic construction over three elements with budget two") {
  const auto s = cyclic_strategy(Side::kDefender, {0, 1, 2}, 2);
  REQUIRE(s.support().size() == 3);
  for (const auto& entry : s.support()) {
    CHECK(entry.action.size() == 2);
    CHECK(entry.prob == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  const auto rho = s.marginals(3);
  for (double r : rho) CHECK(r == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("cyclic edge shapes") {
  SUBCASE("singleton base") {
    const auto s = cyclic_strategy(Side::kAttacker, {5}, 1);
    REQUIRE(s.support().size() == 1);
    CHECK(s.support()[0].action == std::vector<int>{5});
    CHECK(s.support()[0].prob == doctest::Approx(1.0));
  }
  SUBCASE("budget equal to base size collapses to a pure action") {
    const auto s = cyclic_strategy(Side::kDefender, {0, 1, 2}, 3);
    REQUIRE(s.support().size() == 1);
    CHECK(s.support()[0].prob == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("four elements, budget three: marginals 3/4") {
    const auto s = cyclic_strategy(Side::kDefender, {0, 1, 2, 3}, 3);
    const auto rho = s.marginals(4);
    for (double r : rho) CHECK(r == doctest::Approx(0.75).epsilon(1e-15));
  }
  SUBCASE("bad budgets") {
    CHECK_THROWS_AS(cyclic_strategy(Side::kDefender, {0, 1}, 0), ValidationError);
    CHECK_THROWS_AS(cyclic_strategy(Side::kDefender, {0, 1}, 3), ValidationError);
    CHECK_THROWS_AS(cyclic_strategy(Side::kDefender, {0, 0}, 1), ValidationError);
  }
}

TEST_CASE("window multiplicity: each element lies in exactly b of n windows") {
  for (int n = 1; n <= 8; ++n) {
    for (int b = 1; b <= n; ++b) {
      std::vector<int> base(n);
      for (int i = 0; i < n; ++i) base[i] = i;
      const auto windows = cyclic_windows(base, b);
      REQUIRE(static_cast<int>(windows.size()) == n);
      std::vector<int> count(n, 0);
      for (const auto& w : windows) {
        CHECK(static_cast<int>(w.size()) == b);
        for (int x : w) ++count[x];
      }
      for (int c : count) CHECK(c == b);
    }
  }
}

TEST_CASE("marginals, support sizes, basis") {
  std::vector<MixedStrategy::Entry> support;
  support.push_back({{0}, 0.5});
  support.push_back({{0, 1}, 0.5});
  const MixedStrategy s(Side::kDefender, 2, support);
  CHECK(s.support_sizes() == std::set<int>{1, 2});
  CHECK(s.basis() == std::vector<int>{0, 1});
  const auto rho = s.marginals(3);
  CHECK(rho[0] == doctest::Approx(1.0));
  CHECK(rho[1] == doctest::Approx(0.5));
  CHECK(rho[2] == doctest::Approx(0.0));

  CHECK_THROWS_AS(MixedStrategy().basis(), ValidationError);
}

TEST_CASE("pure and mixture marginal shapes") {
  std::vector<MixedStrategy::Entry> pure;
  pure.push_back({{0, 1}, 1.0});
  const MixedStrategy p(Side::kAttacker, 2, pure);
  const auto rho = p.marginals(3);
  CHECK(rho[0] == doctest::Approx(1.0));
  CHECK(rho[1] == doctest::Approx(1.0));

  std::vector<MixedStrategy::Entry> mix;
  mix.push_back({{0}, 0.5});
  mix.push_back({{1}, 0.5});
  const auto rho2 = MixedStrategy(Side::kAttacker, 1, mix).marginals(2);
  CHECK(rho2[0] == doctest::Approx(0.5));
  CHECK(rho2[1] == doctest::Approx(0.5));
}

TEST_CASE("strategy validation") {
  std::vector<MixedStrategy::Entry> bad_sum;
  bad_sum.push_back({{0}, 0.7});
  CHECK_THROWS_AS(MixedStrategy(Side::kDefender, 1, bad_sum), ValidationError);

  std::vector<MixedStrategy::Entry> over_budget;
  over_budget.push_back({{0, 1}, 1.0});
  CHECK_THROWS_AS(MixedStrategy(Side::kDefender, 1, over_budget), ValidationError);

  std::vector<MixedStrategy::Entry> dup;
  dup.push_back({{1, 0}, 0.5});
  dup.push_back({{0, 1}, 0.5});
  const MixedStrategy merged(Side::kDefender, 2, dup);
  REQUIRE(merged.support().size() == 1);
  CHECK(merged.support()[0].prob == doctest::Approx(1.0));
}

// Sorted-prefix inequality checked in exact integer arithmetic: strategies
// carry probabilities w_S / W, so n * sum_{k<=b} rho_k and b * E[|S|] scale
// to integers.
TEST_CASE("sorted-prefix marginal bound holds on random strategies") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int universe = 3 + static_cast<int>(rng() % 6);  // elements 0..universe-1
    const int budget = 1 + static_cast<int>(rng() % universe);
    const int actions = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> supp(actions);
    std::vector<long long> weight(actions);
    long long total_weight = 0;
    for (int a = 0; a < actions; ++a) {
      const int size = 1 + static_cast<int>(rng() % budget);
      std::vector<char> used(universe, 0);
      while (static_cast<int>(supp[a].size()) < size) {
        const int x = static_cast<int>(rng() % universe);
        if (!used[x]) { used[x] = 1; supp[a].push_back(x); }
      }
      weight[a] = 1 + static_cast<long long>(rng() % 9);
      total_weight += weight[a];
    }
    // integer marginal numerators over denominator total_weight
    std::vector<long long> rho_num(universe, 0);
    long long expected_size_num = 0;  // E[|S|] * total_weight
    for (int a = 0; a < actions; ++a) {
      for (int x : supp[a]) rho_num[x] += weight[a];
      expected_size_num += weight[a] * static_cast<long long>(supp[a].size());
    }
    // ascending prefix bound over the full universe (a superset of the basis)
    std::vector<long long> asc(rho_num);
    std::sort(asc.begin(), asc.end());
    long long prefix = 0;
    for (int b = 1; b <= universe; ++b) {
      prefix += asc[b - 1];
      // n * prefix <= b * E[|S|]  (all times total_weight)
      CHECK(static_cast<__int128>(universe) * prefix <=
            static_cast<__int128>(b) * expected_size_num);
    }
    // descending analog for the attacker side
    std::sort(asc.rbegin(), asc.rend());
    prefix = 0;
    for (int b = 1; b <= universe; ++b) {
      prefix += asc[b - 1];
      CHECK(static_cast<__int128>(universe) * prefix >=
            static_cast<__int128>(b) * expected_size_num);
    }
  }
}

TEST_CASE("strategy json round-trip") {
  const auto m = testutil::path3();
  const auto s = cyclic_strategy(Side::kDefender, {0, 2}, 1);
  const std::string text = write_strategy_json(m, s);
  const auto back = read_strategy_json(m, text);
  CHECK(back == s);
}

TEST_SUITE_END();
