#include "helpers.hpp"
#include "oracles.hpp"

#include "clusteralg/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("seed") {

TEST_CASE("skew-symmetrizer") {
  CHECK(find_skew_symmetrizer(corpus_b("A2")).diag == std::vector<std::int64_t>{1, 1});
  CHECK(find_skew_symmetrizer(IntMatrix{{0, 1}, {-2, 0}}).diag == std::vector<std::int64_t>{2, 1});
  CHECK_THROWS_AS(find_skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  CHECK_THROWS_AS(find_skew_symmetrizer(IntMatrix{{1, 1}, {-1, 0}}), NotSkewSymmetrizable);
  for (const auto& e : all_corpus())
    CHECK(find_skew_symmetrizer(e.bmat).diag == *oracle::symmetrizer(e.bmat));
  const IntMatrix b3{{0, 1, 0}, {-2, 0, 3}, {0, -1, 0}};
  CHECK(find_skew_symmetrizer(b3).diag == *oracle::symmetrizer(b3));
}

TEST_CASE("matrix mutation") {
  CHECK(mutate_matrix(corpus_b("A2"), 0) == IntMatrix{{0, -1}, {1, 0}});
  const IntMatrix b{{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}};
  CHECK(mutate_matrix(b, 1) == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}});
  for (const auto& e : all_corpus())
    for (std::size_t k = 0; k < e.bmat.rows(); ++k) {
      CHECK(mutate_matrix(e.bmat, k) == oracle::mutate(e.bmat, k));
      CHECK(mutate_matrix(mutate_matrix(e.bmat, k), k) == e.bmat);
    }
}

TEST_CASE("seed mutation, trivial") {
  const Seed t = mutate_seed(root("A2"), 0);
  CHECK(t.cluster()[0] == P("x1^-1*x2 + x1^-1"));
  CHECK(t.cluster()[1] == P("x2"));
  CHECK(t.path() == Path{0});
}

TEST_CASE("seed mutation, principal") {
  const Seed t = mutate_seed(root("A2", CoefficientMode::principal), 0);
  CHECK(t.cluster()[0] == P("x1^-1*x2 + y1*x1^-1"));
  CHECK(t.coeffs()[0] == TropicalMonomial({-1, 0}));
  CHECK(t.coeffs()[1] == TropicalMonomial({1, 1}));
  CHECK(t.bmat() == IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("mutation is an involution") {
  for (const auto& e : finite_corpus()) {
    const Seed s = mutate_along(Seed::initial(e.bmat, CoefficientMode::principal), Path{0, 1, 0});
    for (std::size_t k = 0; k < s.rank(); ++k) CHECK(mutate_seed(mutate_seed(s, k), k) == s);
  }
}

TEST_CASE("pentagon") {
  const Seed s = root("A2");
  const Seed t = mutate_along(s, Path{0, 1, 0, 1, 0});
  CHECK(t.cluster()[0] == P("x2"));
  CHECK(t.cluster()[1] == P("x1"));
  const auto sigma = seeds_equivalent(s, t);
  REQUIRE(sigma);
  CHECK(*sigma == std::vector<std::size_t>{1, 0});
  CHECK(seeds_equivalent(s, s) == std::vector<std::size_t>{0, 1});
  CHECK(canonical_key(s) == canonical_key(t));
  CHECK(labeled_key(s) != labeled_key(t));
  CHECK_FALSE(seeds_equivalent(s, mutate_seed(s, 0)));
}

TEST_CASE("equal clusters, different matrices") {
  const Seed a = Seed::initial(IntMatrix{{0, 1}, {-1, 0}}, CoefficientMode::trivial);
  const Seed b = Seed::initial(IntMatrix{{0, -1}, {1, 0}}, CoefficientMode::trivial);
  CHECK_FALSE(seeds_equivalent(a, b));
  CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("five distinct A2 keys") {
  std::set<std::string> keys;
  Seed s = root("A2");
  for (std::size_t i = 0; i < 5; ++i) {
    keys.insert(canonical_key(s));
    s = mutate_seed(s, i % 2);
  }
  CHECK(keys.size() == 5);
}

TEST_CASE("relabel") {
  const Seed s = root("A3", CoefficientMode::principal);
  const std::vector<std::size_t> sigma{2, 0, 1};
  const Seed r = relabel(s, sigma);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.cluster()[i] == s.cluster()[sigma[i]]);
    for (std::size_t j = 0; j < 3; ++j) CHECK(r.bmat()(i, j) == s.bmat()(sigma[i], sigma[j]));
  }
  CHECK(canonical_key(r) == canonical_key(s));
  CHECK_THROWS_AS(relabel(s, std::vector<std::size_t>{0, 0, 1}), InvalidArgument);
}

TEST_CASE("expansions relative to another seed") {
  const Seed s = root("A2");
  const Seed t = mutate_along(s, Path{0, 1});
  const auto e = expand_in(s, t);
  CHECK(mutate_along(Seed::initial(t.bmat(), CoefficientMode::trivial), Path{1, 0}).cluster() == e);
  std::vector<const Seed*> of{&s, &t};
  const auto many = expand_many(of, t);
  CHECK(many[0] == e);
  CHECK(many[1] == std::vector<LaurentPoly>{P("x1"), P("x2")});
}

TEST_CASE("cluster monomial") {
  const Seed s = root("A2");
  CHECK(s.monomial(IntVector{2, 1}) == P("x1^2*x2"));
  CHECK(s.monomial(IntVector{0, 0}) == P("1"));
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(Seed::initial(IntMatrix{{0, 1, 0}, {-1, 0, 1}}, CoefficientMode::trivial), InvalidArgument);
  CHECK_THROWS_AS(mutate_seed(root("A2"), 2), IndexOutOfRange);
  CHECK(parse_mode("principal") == CoefficientMode::principal);
  CHECK_THROWS_AS(parse_mode("bogus"), ParseError);
}

}
