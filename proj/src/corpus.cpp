#include "clusteralg/corpus.hpp"

namespace clusteralg {

const std::vector<CorpusEntry>& finite_corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"A2", IntMatrix{{0, 1}, {-1, 0}}, true, "type A2"},
      {"A3", IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, true, "type A3, linear orientation"},
      {"A3alt", IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}, true, "type A3, sink in the middle"},
      {"B2", IntMatrix{{0, 1}, {-2, 0}}, true, "type B2"},
      {"C2T", IntMatrix{{0, 2}, {-1, 0}}, true, "type B2 transposed"},
      {"G2", IntMatrix{{0, 1}, {-3, 0}}, true, "type G2"},
  };
  return entries;
}

const std::vector<CorpusEntry>& all_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    auto v = finite_corpus();
    v.push_back({"K2", IntMatrix{{0, 2}, {-2, 0}}, false, "Kronecker (affine A1), infinite type"});
    return v;
  }();
  return entries;
}

std::optional<CorpusEntry> corpus_entry(std::string_view name) {
  for (const auto& e : all_corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace clusteralg
