#pragma once

// Bundled exchange matrices.

#include "clusteralg/int_matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clusteralg {

struct CorpusEntry {
  std::string name;
  IntMatrix bmat;
  bool finite = true;
  std::string description;
};

/// The finite-type corpus: A2, A3 (two orientations), B2, C2T, G2.
const std::vector<CorpusEntry>& finite_corpus();

/// Finite corpus plus the affine rank-2 matrix "K2" = [[0,2],[-2,0]].
const std::vector<CorpusEntry>& all_corpus();

std::optional<CorpusEntry> corpus_entry(std::string_view name);

}  // namespace clusteralg
