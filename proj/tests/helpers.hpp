#pragma once

#include "clusteralg/compat.hpp"
#include "clusteralg/corpus.hpp"
#include "clusteralg/explorer.hpp"
#include "clusteralg/invariants.hpp"
#include "clusteralg/laurent.hpp"
#include "clusteralg/seed.hpp"

#include <string>
#include <vector>

namespace testing {

using namespace clusteralg;

inline LaurentPoly P(const std::string& text, std::size_t rank = 2) { return LaurentPoly::parse(text, rank); }

inline IntMatrix corpus_b(const std::string& name) { return corpus_entry(name)->bmat; }

inline Seed root(const std::string& name, CoefficientMode m = CoefficientMode::trivial) {
  return Seed::initial(corpus_b(name), m);
}

// A2 variables in the naming x1..x5 of the classical pentagon.
inline std::vector<LaurentPoly> a2_named() {
  const auto one = P("1"), x1 = P("x1"), x2 = P("x2");
  return {x1, x2, div_exact(x2 + one, x1), div_exact(x1 + x2 + one, x1 * x2), div_exact(x1 + one, x2)};
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testing
