#include "helpers.hpp"
#include "oracles.hpp"

#include "clusteralg/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("invariants") {

TEST_CASE("d-vectors") {
  const auto x = a2_named();
  CHECK(dvector_direct(x[3]).entries == IntVector{1, 1});
  CHECK(dvector_direct(x[0]).entries == IntVector{-1, 0});
  CHECK(dvector_direct(x[2]).entries == IntVector{1, 0});
  CHECK_THROWS_AS(dvector_direct(LaurentPoly(2)), ZeroPolynomial);
}

TEST_CASE("d-matrix recurrence") {
  const auto b = corpus_b("A2");
  CHECK(dmatrix_recurrence(Path{}, b) == -IntMatrix::identity(2));
  CHECK(dmatrix_recurrence(Path{0}, b) == IntMatrix::from_columns({{1, 0}, {0, -1}}));
  CHECK(dmatrix_recurrence(Path{0, 1}, b) == IntMatrix::from_columns({{1, 0}, {1, 1}}));
  for (const auto& e : finite_corpus())
    for (auto mode : {CoefficientMode::trivial, CoefficientMode::principal}) {
      const auto g = explore(Seed::initial(e.bmat, mode));
      for (const auto& node : g.nodes())
        CHECK(dmatrix_recurrence(node.seed.path(), e.bmat) == dmatrix_direct(node.seed));
    }
}

TEST_CASE("g-vectors") {
  const Seed s = root("A2", CoefficientMode::principal);
  CHECK(gvector(s.cluster()[0]).entries == IntVector{1, 0});
  const Seed t1 = mutate_seed(s, 0);
  CHECK(gvector(t1.cluster()[0]).entries == IntVector{-1, 1});
  const Seed t2 = mutate_seed(t1, 1);
  CHECK(gvector(t2.cluster()[1]).entries == IntVector{-1, 0});
  CHECK(gmatrix(s) == IntMatrix::identity(2));
  CHECK(gmatrix(t1) == IntMatrix::from_columns({{-1, 1}, {0, 1}}));
  CHECK_THROWS_AS(gmatrix(root("A2")), PreconditionViolated);
  CHECK_THROWS_AS(gvector(P("x1*y1 + x2*y1")), MalformedExpansion);
}

TEST_CASE("g-matrices agree with the tropical oracle") {
  for (const auto& e : finite_corpus()) {
    const auto g = explore(Seed::initial(e.bmat, CoefficientMode::principal));
    std::set<std::set<IntVector>> mine;
    for (const auto& node : g.nodes()) {
      std::set<IntVector> cl;
      const auto gm = gmatrix(node.seed);
      for (std::size_t j = 0; j < gm.cols(); ++j) cl.insert(gm.column(j));
      mine.insert(cl);
    }
    const auto ref = oracle::explore(e.bmat);
    CHECK_FALSE(ref.truncated);
    CHECK(mine == ref.clusters);
  }
}

TEST_CASE("r-matrix") {
  const Seed s = root("A3", CoefficientMode::principal);
  const Seed t = mutate_along(s, Path{0, 1, 2});
  CHECK(rmatrix(t, t) == IntMatrix::identity(3));
  CHECK(rmatrix(s, t) == gmatrix(t));
  CHECK(gmatrix(t) * rmatrix(t, s) == gmatrix(s));
}

TEST_CASE("monomial g-vectors") {
  const Seed t = mutate_seed(root("A2", CoefficientMode::principal), 0);
  CHECK(monomial_gvector(t, IntVector{1, 0}).entries == IntVector{-1, 1});
  CHECK(monomial_gvector(t, IntVector{0, 0}).entries == IntVector{0, 0});
  CHECK(monomial_gvector(t, IntVector{1, 1}).entries == IntVector{-1, 2});
  CHECK(monomial_gvector(t, IntVector{1, 1}).entries == gvector(t.monomial(IntVector{1, 1})).entries);
}

TEST_CASE("proper Laurent monomials") {
  const Seed s = root("A2");
  const Seed t1 = mutate_seed(s, 0);                // {x3, x2}
  const Seed t2 = mutate_seed(t1, 1);               // {x3, x4}
  CHECK(proper_laurent_check(t1, IntVector{2, 0}, s));
  CHECK(proper_laurent_check(t2, IntVector{1, 1}, s));
  CHECK_THROWS_AS(proper_laurent_check(s, IntVector{1, 2}, s), PreconditionViolated);
}

TEST_CASE("exponent sweep") {
  const auto v = exponent_vectors(2, 2);
  CHECK(v.size() == 5);
  CHECK(v.front() == IntVector{0, 1});
  CHECK(exponent_vectors(3, 3).size() == 19);
}

TEST_CASE("sign coherence helpers") {
  CHECK(rows_sign_coherent(IntMatrix{{1, 0}, {-1, -2}}));
  CHECK_FALSE(rows_sign_coherent(IntMatrix{{1, -1}, {0, 0}}));
  CHECK(columns_sign_coherent(IntMatrix{{1, -1}, {2, 0}}));
}

}
