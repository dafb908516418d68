#include <doctest.h>

#include "inspectra/covers.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/generator.hpp"
#include "inspectra/json_io.hpp"

using namespace inspectra;

TEST_SUITE_BEGIN("generator");

TEST_CASE("all families produce valid instances") {
  for (auto family : {InstanceFamily::kRandomBipartite, InstanceFamily::kInterval,
                      InstanceFamily::kGridHideAndSeek}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GenConfig cfg;
      cfg.family = family;
      cfg.node_count = 6;
      cfg.component_count = 9;
      cfg.seed = seed;
      const auto m = generate(cfg);
      CHECK(m.validate().empty());
      CHECK(m.node_count() == 6);
      CHECK(m.component_count() >= 1);
    }
  }
}

TEST_CASE("fixed seed reproduces the instance byte for byte") {
  GenConfig cfg;
  cfg.family = InstanceFamily::kRandomBipartite;
  cfg.node_count = 8;
  cfg.component_count = 12;
  cfg.seed = 99;
  const std::string a = write_instance_json(generate(cfg));
  const std::string b = write_instance_json(generate(cfg));
  CHECK(a == b);

  cfg.seed = 100;
  CHECK(write_instance_json(generate(cfg)) != a);
}

TEST_CASE("grid family has equal cover and packing numbers") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenConfig cfg;
    cfg.family = InstanceFamily::kGridHideAndSeek;
    cfg.node_count = 6;
    cfg.component_count = 9;
    cfg.seed = seed;
    const auto m = generate(cfg);
    const int n_star = solve_msc(m, SolveMode::kExact).size;
    const int m_star = solve_msp(m, SolveMode::kExact).size;
    CHECK(n_star == m_star);
  }
  // the full 3x3 grid pins them at 3
  GenConfig full;
  full.family = InstanceFamily::kGridHideAndSeek;
  full.node_count = 6;
  full.component_count = 9;
  full.seed = 1;
  const auto m = generate(full);
  CHECK(solve_msc(m, SolveMode::kExact).size == 3);
}

TEST_CASE("single-component instance collapses to cover = packing = 1") {
  GenConfig cfg;
  cfg.node_count = 3;
  cfg.component_count = 1;
  cfg.seed = 4;
  const auto m = generate(cfg);
  CHECK(solve_msc(m, SolveMode::kExact).size == 1);
  CHECK(solve_msp(m, SolveMode::kExact).size == 1);
}

TEST_CASE("degenerate configurations are rejected") {
  GenConfig cfg;
  cfg.component_count = 0;
  CHECK_THROWS_AS(generate(cfg), ValidationError);
  cfg.component_count = 3;
  cfg.node_count = 0;
  CHECK_THROWS_AS(generate(cfg), ValidationError);
}

TEST_CASE("family names round-trip") {
  for (auto family : {InstanceFamily::kRandomBipartite, InstanceFamily::kInterval,
                      InstanceFamily::kGridHideAndSeek}) {
    CHECK(family_from_name(family_name(family)) == family);
  }
  CHECK_THROWS_AS(family_from_name("noise"), ValidationError);
}

TEST_SUITE_END();
