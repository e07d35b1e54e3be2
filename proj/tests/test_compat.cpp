#include "helpers.hpp"

#include "clusteralg/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("compat") {

TEST_CASE("A2 degrees") {
  const auto g = explore(root("A2"));
  const Compatibility c(g);
  const auto x = a2_named();
  CHECK(c.degree(x[0], x[0]) == -1);
  CHECK(c.degree(x[0], x[3]) == 1);
  CHECK(c.degree(x[1], x[2]) == 0);
  CHECK_THROWS_AS(c.index_of(P("x1 + x2")), UnknownVariable);
}

TEST_CASE("A2 degree table in classical naming") {
  const auto g = explore(root("A2"));
  const Compatibility c(g);
  const auto x = a2_named();
  const std::vector<std::vector<std::int64_t>> expected{
      {-1, 0, 1, 1, 0}, {0, -1, 0, 1, 1}, {1, 0, -1, 0, 1}, {1, 1, 0, -1, 0}, {0, 1, 1, 0, -1}};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(c.degree(x[i], x[j]) == expected[i][j]);
  const auto m = c.degree_matrix();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == c.degree(i, j));
}

TEST_CASE("compatible sets") {
  const auto g = explore(root("A2"));
  const Compatibility c(g);
  const auto x = a2_named();
  auto idx = [&](std::initializer_list<int> ids) {
    std::vector<std::size_t> out;
    for (int i : ids) out.push_back(c.index_of(x[static_cast<std::size_t>(i)]));
    return out;
  };
  CHECK(c.is_compatible_set(idx({2, 3})));
  CHECK_FALSE(c.is_compatible_set(idx({0, 3})));
  CHECK(c.is_compatible_set(idx({4})));
  CHECK(c.is_compatible_set(idx({})));
  const std::size_t n3 = c.complete_to_cluster(idx({2}));
  CHECK(g.nodes()[n3].seed.slot_of(x[2]));
  const std::size_t n51 = c.complete_to_cluster(idx({4, 0}));
  CHECK(g.nodes()[n51].seed.slot_of(x[4]));
  CHECK(g.nodes()[n51].seed.slot_of(x[0]));
  CHECK(c.complete_to_cluster(idx({})) == 0);
  CHECK_THROWS_AS(c.complete_to_cluster(idx({0, 3})), NotFound);
}

TEST_CASE("maximal compatible sets are clusters") {
  const std::map<std::string, std::size_t> count{{"A2", 5}, {"A3", 14}, {"B2", 6}, {"G2", 8}};
  for (const auto& [name, expected] : count) {
    const auto g = explore(root(name));
    const Compatibility c(g);
    const auto sets = c.maximal_compatible_sets();
    CHECK(sets.size() == expected);
    std::set<std::vector<std::size_t>> clusters;
    for (std::size_t v = 0; v < g.nodes().size(); ++v) clusters.insert(sorted(c.node_variables(v)));
    CHECK(std::set<std::vector<std::size_t>>(sets.begin(), sets.end()) == clusters);
  }
}

TEST_CASE("audit and sign symmetry on B2") {
  const auto g = explore(root("B2"));
  const Compatibility c(g);
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) {
      for (const auto& r : c.audit(a, b)) CHECK(r.degree == c.degree(a, b));
      CHECK((c.degree(a, b) <= 0) == (c.degree(b, a) <= 0));
      CHECK((c.degree(a, b) == -1) == (a == b));
    }
}

}
