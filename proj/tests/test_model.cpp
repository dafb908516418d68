#include <doctest.h>

#include "inspectra/errors.hpp"
#include "inspectra/json_io.hpp"
#include "inspectra/model.hpp"
#include "test_util.hpp"

using namespace inspectra;

TEST_SUITE_BEGIN("model");

TEST_CASE("detect counts monitored components of the attack plan") {
  const auto m = testutil::path3();
  CHECK(m.detect(NodeSet{}, m.component_set_from_ids({"e1", "e2"})) == 0);
  CHECK(m.detect(m.node_set_from_ids({"v1"}), m.component_set_from_ids({"e1", "e4"})) == 1);
  CHECK(m.detect(m.node_set_from_ids({"v1", "v3"}),
                 m.component_set_from_ids({"e1", "e2", "e3", "e4"})) == 4);
}

TEST_CASE("monitored_set unions monitoring sets") {
  const auto m = testutil::path3();
  CHECK(m.monitored_set(NodeSet{}).empty());
  CHECK(m.component_ids(m.monitored_set(m.node_set_from_ids({"v2"}))) ==
        std::vector<std::string>{"e2", "e3"});
  CHECK(m.monitored_set(m.node_set_from_ids({"v1", "v3"})).size() == 4);
}

TEST_CASE("unknown ids in operations raise") {
  const auto m = testutil::path3();
  CHECK_THROWS_AS(m.node_set_from_ids({"bogus"}), ValidationError);
  CHECK_THROWS_AS(m.component_set_from_ids({"e9"}), ValidationError);
}

TEST_CASE("validate flags bad instances as data") {
  CHECK(testutil::path3().validate().empty());

  const DetectionModel uncoverable({"v1"}, {"e1", "e5"}, {{"v1", {"e1"}}});
  REQUIRE(uncoverable.validate().size() == 1);
  CHECK(uncoverable.validate()[0] == "uncoverable component e5");

  const DetectionModel ghost_node({"v1"}, {"e1"}, {{"v1", {"e1"}}, {"vX", {"e1"}}});
  REQUIRE(ghost_node.validate().size() == 1);
  CHECK(ghost_node.validate()[0].find("unknown node vX") == 0);

  const DetectionModel dup({"v1", "v1"}, {"e1"}, {{"v1", {"e1"}}});
  CHECK(!dup.validate().empty());
}

TEST_CASE("nodes with empty monitoring sets are valid input") {
  const DetectionModel m({"v1", "v2"}, {"e1"}, {{"v1", {"e1"}}});
  CHECK(m.validate().empty());
  CHECK(m.monitored_by(1).empty());
}

TEST_CASE("detection function is submodular, monotone, additive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testutil::random_model(1000 + trial, 6, 7);
    auto random_subset = [&](int universe) {
      std::vector<int> out;
      for (int x = 0; x < universe; ++x) {
        if (rng() & 1) out.push_back(x);
      }
      return out;
    };
    const NodeSet s(random_subset(m.node_count()));
    const NodeSet sp(random_subset(m.node_count()));
    const ComponentSet t(random_subset(m.component_count()));

    std::vector<int> uni, inter;
    std::set_union(s.v.begin(), s.v.end(), sp.v.begin(), sp.v.end(), std::back_inserter(uni));
    std::set_intersection(s.v.begin(), s.v.end(), sp.v.begin(), sp.v.end(),
                          std::back_inserter(inter));
    // submodularity
    CHECK(m.detect(NodeSet(uni), t) + m.detect(NodeSet(inter), t) <=
          m.detect(s, t) + m.detect(sp, t));
    // monotonicity
    CHECK(m.detect(s, t) <= m.detect(NodeSet(uni), t));
    // additivity over a disjoint split of t
    std::vector<int> t1, t2;
    for (std::size_t k = 0; k < t.v.size(); ++k) (k % 2 ? t1 : t2).push_back(t.v[k]);
    CHECK(m.detect(s, t) == m.detect(s, ComponentSet(t1)) + m.detect(s, ComponentSet(t2)));
    // per-component decomposition and subadditivity over nodes
    int per_component = 0, per_node = 0;
    for (int e : t.v) per_component += m.detect(s, ComponentSet({e}));
    for (int i : s.v) per_node += m.detect(NodeSet({i}), t);
    CHECK(m.detect(s, t) == per_component);
    CHECK(m.detect(s, t) <= per_node);
  }
}

TEST_CASE("instance json round-trips byte-identically for canonical files") {
  const auto m = testutil::path3();
  const std::string once = write_instance_json(m);
  const auto reread = read_instance_json(once);
  CHECK(write_instance_json(reread) == once);
  CHECK(reread.nodes() == m.nodes());
  CHECK(reread.components() == m.components());
}

TEST_CASE("malformed instance json raises") {
  CHECK_THROWS_AS(read_instance_json("{not json"), ValidationError);
  CHECK_THROWS_AS(read_instance_json(R"({"nodes":[]})"), ValidationError);
}

TEST_SUITE_END();
