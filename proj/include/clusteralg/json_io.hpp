#pragma once

// JSON and text forms used by the command line. Indices are 1-based in every
// external format; node ids are 0-based positions in the node array.

#include "clusteralg/compat.hpp"
#include "clusteralg/explorer.hpp"
#include "clusteralg/gpairs.hpp"
#include "clusteralg/int_matrix.hpp"
#include "clusteralg/seed.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace clusteralg {

using Json = nlohmann::ordered_json;

struct SeedDescriptor {
  IntMatrix bmat;
  std::optional<CoefficientMode> mode;  // unset unless the descriptor names one
};

/// Accepts `{"n":..,"B":[[..]],"mode":..}`, a bare matrix `[[..]]`, a corpus
/// name such as "A3", or a path to a file holding either JSON form.
SeedDescriptor parse_descriptor(std::string_view text);

IntMatrix matrix_from_json(const Json& j);
Json to_json(const IntMatrix& m);

/// "1,2,3" or "[1,2,3]" (1-based) to 0-based indices. Empty text gives {}.
std::vector<std::size_t> parse_index_list(std::string_view text);
Json path_to_json(const Path& p);

Json to_json(const Seed& s);
Json to_json(const ExchangeGraph& g);
/// One "from to slot" line per edge, preceded by a header comment.
std::string edge_list(const ExchangeGraph& g);
Json to_json(const GPairCertificate& c);
Json to_json(const DegreeReport& r, const Compatibility& c);

}  // namespace clusteralg
