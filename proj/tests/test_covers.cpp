#include <doctest.h>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "test_util.hpp"

using namespace inspectra;

TEST_SUITE_BEGIN("covers");

TEST_CASE("path3 cover and packing") {
  const auto m = testutil::path3();
  const auto cover = solve_msc(m, SolveMode::kExact);
  CHECK(cover.size == 2);
  CHECK(m.node_ids(cover.cover) == std::vector<std::string>{"v1", "v3"});
  CHECK(is_set_cover(m, cover.cover));

  const auto packing = solve_msp(m, SolveMode::kExact);
  CHECK(packing.size == 2);
  CHECK(is_set_packing(m, packing.packing));
}

TEST_CASE("single-node full cover and single-component packing") {
  const DetectionModel m({"hub", "spare"}, {"e1", "e2", "e3"},
                         {{"hub", {"e1", "e2", "e3"}}, {"spare", {"e2"}}});
  CHECK(solve_msc(m, SolveMode::kExact).size == 1);

  const DetectionModel single({"v1"}, {"e1"}, {{"v1", {"e1"}}});
  CHECK(solve_msp(single, SolveMode::kExact).size == 1);
}

TEST_CASE("cover-4 packing-3 instance") {
  const auto m = testutil::cover4_pack3();
  CHECK(solve_msc(m, SolveMode::kExact).size == 4);
  CHECK(solve_msp(m, SolveMode::kExact).size == 3);
}

TEST_CASE("invalid model is rejected") {
  const DetectionModel broken({"v1"}, {"e1", "e2"}, {{"v1", {"e1"}}});
  CHECK_THROWS_AS(solve_msc(broken, SolveMode::kExact), ValidationError);
}

TEST_CASE("exact matches exhaustive enumeration; weak duality m* <= n*") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = testutil::random_model(3000 + trial, 4 + trial % 5, 4 + trial % 7);
    const auto cover = solve_msc(m, SolveMode::kExact);
    const auto packing = solve_msp(m, SolveMode::kExact);
    CHECK(cover.size == testutil::oracle_min_cover_size(m));
    CHECK(packing.size == testutil::oracle_max_packing_size(m));
    CHECK(is_set_cover(m, cover.cover));
    CHECK(is_set_packing(m, packing.packing));
    CHECK(packing.size <= cover.size);
  }
}

TEST_CASE("greedy results are feasible and bracket the optimum") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = testutil::random_model(4000 + trial, 5 + trial % 4, 5 + trial % 6);
    const auto exact_cover = solve_msc(m, SolveMode::kExact);
    const auto exact_packing = solve_msp(m, SolveMode::kExact);
    const auto greedy = solve_msc(m, SolveMode::kGreedy);
    const auto greedy_packing = solve_msp(m, SolveMode::kGreedy);
    CHECK(is_set_cover(m, greedy.cover));
    CHECK(is_set_packing(m, greedy_packing.packing));
    CHECK(greedy.size >= exact_cover.size);
    CHECK(greedy_packing.size <= exact_packing.size);
    CHECK(greedy.status == SolveMode::kGreedy);
  }
}

TEST_CASE("minimalize_cover drops redundant nodes in reverse declared order") {
  const auto m = testutil::path3();
  const auto all = m.node_set_from_ids({"v1", "v2", "v3"});
  CHECK(m.node_ids(minimalize_cover(m, all)) == std::vector<std::string>{"v1", "v3"});

  const auto tight = m.node_set_from_ids({"v1", "v3"});
  CHECK(minimalize_cover(m, tight) == tight);

  CHECK_THROWS_AS(minimalize_cover(m, m.node_set_from_ids({"v2"})), ValidationError);
}

TEST_CASE("minimalized sets stay covers and are inclusion-minimal") {
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = testutil::random_model(5000 + trial, 6, 8);
    const auto greedy = solve_msc(m, SolveMode::kGreedy);
    const auto minimal = minimalize_cover(m, greedy.cover);
    CHECK(is_set_cover(m, minimal));
    for (int drop : minimal.v) {
      std::vector<int> rest;
      for (int i : minimal.v) {
        if (i != drop) rest.push_back(i);
      }
      CHECK(!is_set_cover(m, NodeSet(rest)));
    }
  }
}

TEST_CASE("max_weight_cover solves tiny instances to hand-checked optima") {
  const auto m = testutil::path3();
  SUBCASE("unit weights with one node") {
    const auto res = max_weight_cover(m, {1.0, 0.0, 0.0, 1.0}, 1);
    CHECK(res.weight == doctest::Approx(1.0));
    CHECK(m.node_ids(res.nodes) == std::vector<std::string>{"v1"});  // lexicographic tie
  }
  SUBCASE("middle node covers both targeted components") {
    const auto res = max_weight_cover(m, {0.0, 1.0, 1.0, 0.0}, 1);
    CHECK(res.weight == doctest::Approx(2.0));
    CHECK(m.node_ids(res.nodes) == std::vector<std::string>{"v2"});
  }
  SUBCASE("exhaustive check on random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      const auto model = testutil::random_model(6000 + trial, 6, 7);
      std::vector<double> w(model.component_count());
      for (auto& x : w) x = static_cast<double>(rng() % 100) / 25.0;
      const int k = 1 + static_cast<int>(rng() % 3);
      const auto res = max_weight_cover(model, w, k);
      // brute force over all k-subsets
      double best = -1.0;
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      const int n = model.node_count();
      while (true) {
        std::vector<char> covered(model.component_count(), 0);
        for (int i : idx) {
          for (int e : model.monitored_by(i)) covered[e] = 1;
        }
        double val = 0.0;
        for (int e = 0; e < model.component_count(); ++e) {
          if (covered[e]) val += w[e];
        }
        best = std::max(best, val);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
      CHECK(res.weight == doctest::Approx(best).epsilon(1e-12));
      CHECK(static_cast<int>(res.nodes.size()) == k);
    }
  }
}

TEST_SUITE_END();
