#include "helpers.hpp"
#include "oracles.hpp"

#include "clusteralg/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("explorer") {

TEST_CASE("A2 pentagon") {
  const auto g = explore(root("A2"));
  CHECK_FALSE(g.truncated());
  CHECK(g.nodes().size() == 5);
  std::vector<int> degree(5, 0);
  std::set<std::pair<std::size_t, std::size_t>> undirected;
  for (const auto& e : g.edges()) undirected.insert(std::minmax(e.from, e.to));
  CHECK(undirected.size() == 5);
  for (auto [a, b] : undirected) ++degree[a], ++degree[b];
  for (int d : degree) CHECK(d == 2);
  const auto vars = cluster_variables(g), named = a2_named();
  CHECK(std::set<LaurentPoly>(vars.begin(), vars.end()) == std::set<LaurentPoly>(named.begin(), named.end()));
}

TEST_CASE("corpus counts agree with the oracle") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"A2", {5, 5}}, {"A3", {14, 9}}, {"A3alt", {14, 9}}, {"B2", {6, 6}}, {"C2T", {6, 6}}, {"G2", {8, 8}}};
  for (const auto& e : finite_corpus()) {
    const auto ref = oracle::explore(e.bmat);
    for (auto mode : {CoefficientMode::trivial, CoefficientMode::principal}) {
      const auto g = explore(Seed::initial(e.bmat, mode));
      CHECK_FALSE(g.truncated());
      CHECK(g.nodes().size() == ref.clusters.size());
      CHECK(cluster_variables(g).size() == ref.variables.size());
      CHECK(g.nodes().size() == expected.at(e.name).first);
      CHECK(cluster_variables(g).size() == expected.at(e.name).second);
    }
  }
}

TEST_CASE("affine rank 2 is truncated") {
  const auto g = explore(root("K2"), 100);
  CHECK(g.truncated());
  CHECK(g.nodes().size() == 100);
  CHECK(oracle::explore(corpus_b("K2"), 100).truncated);
  CHECK_THROWS_AS(cluster_variables(g), TruncatedGraph);
  CHECK_THROWS_AS(Compatibility{g}, TruncatedGraph);
}

TEST_CASE("seeds containing") {
  const auto g = explore(root("A2"));
  const auto x = a2_named();
  const auto sub = seeds_containing(g, std::vector<LaurentPoly>{x[2]});
  CHECK(sub.nodes.size() == 2);
  CHECK(sub.edges.size() >= 1);
  CHECK(sub.connected());
  for (std::size_t v : sub.nodes) CHECK(g.nodes()[v].seed.slot_of(x[2]));
  CHECK(seeds_containing(g, std::vector<LaurentPoly>{}).nodes.size() == 5);
  CHECK(seeds_containing(g, std::vector<LaurentPoly>{x[0], x[3]}).nodes.empty());
}

TEST_CASE("restricted exploration") {
  CHECK(restricted_explore(root("A2"), std::vector<std::size_t>{}).nodes().size() == 1);
  CHECK(restricted_explore(root("A2"), std::vector<std::size_t>{0}).nodes().size() == 2);
  const auto g = restricted_explore(root("A3"), std::vector<std::size_t>{0, 1});
  CHECK(g.labeled());
  CHECK(g.nodes().size() == 10);
  for (const auto& node : g.nodes())
    for (std::size_t k : node.seed.path()) CHECK(k < 2);
  CHECK_THROWS_AS(restricted_explore(root("A2"), std::vector<std::size_t>{0, 0}), InvalidArgument);
  CHECK_THROWS_AS(restricted_explore(root("A2"), std::vector<std::size_t>{2}), IndexOutOfRange);
}

TEST_CASE("witness paths reproduce nodes") {
  const auto g = explore(root("G2"));
  for (const auto& node : g.nodes()) {
    const Seed t = mutate_along(root("G2"), node.seed.path());
    CHECK(canonical_key(t) == node.key);
    CHECK(g.locate(t));
  }
}

TEST_CASE("limit semantics") {
  CHECK_THROWS_AS(explore(root("A2"), 0), InvalidArgument);
  const auto g = explore(root("A3"), 5);
  CHECK(g.truncated());
  CHECK(g.nodes().size() == 5);
  CHECK_FALSE(explore(root("A2"), 5).truncated());
}

}
