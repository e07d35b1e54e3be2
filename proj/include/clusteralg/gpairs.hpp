#pragma once

// g-pairs along an index subset I: the nonnegative factorization criterion
// G_source|_{I x [1,n]} = G_partner|_{I x I} Q and the exhaustive partner search.

#include "clusteralg/explorer.hpp"
#include "clusteralg/int_matrix.hpp"
#include "clusteralg/seed.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace clusteralg {

struct GPairCertificate {
  Seed source;
  Seed partner;                    // reached from the root by an I-sequence
  std::vector<std::size_t> subset;  // sorted, 0-based
  IntMatrix qmat;                  // |I| x n, entrywise >= 0

  const Path& partner_path() const { return partner.path(); }
};

/// Q if the criterion holds, none otherwise. The partner's own path must be an
/// I-sequence. Throws SingularBlock if G_partner|_{I x I} is not unimodular.
std::optional<IntMatrix> is_gpair(const Seed& source, const Seed& partner, std::span<const std::size_t> subset);

/// Partner search with one restricted graph per subset, reused across calls.
class GPairFinder {
 public:
  /// `root_bmat` fixes the cluster pattern; sources must belong to it.
  explicit GPairFinder(IntMatrix root_bmat, std::size_t limit = kDefaultNodeLimit);

  /// Scans the whole I-restricted labeled graph. Throws TruncatedGraph if it
  /// does not close, NotFound if nothing passes, MultipleFound if partners
  /// from two different seed classes pass.
  GPairCertificate find(const Seed& source, std::span<const std::size_t> subset);

  const ExchangeGraph& restricted_graph(std::span<const std::size_t> subset);

 private:
  struct Restricted {
    ExchangeGraph graph;
    std::vector<IntMatrix> gmats;
  };
  Restricted& restricted(const std::vector<std::size_t>& subset);

  IntMatrix root_bmat_;
  std::size_t limit_;
  std::map<std::vector<std::size_t>, Restricted> cache_;
};

GPairCertificate find_gpair(const Seed& source, std::span<const std::size_t> subset,
                            std::size_t limit = kDefaultNodeLimit);

enum class SharedClass { shared_at_k, shared_elsewhere, disjoint };
const char* to_string(SharedClass c);

/// Lemma 5.2: the sign of r_ki in R = G_partner^-1 G_source, for a certificate
/// along I = [n] \ {k}. Cross-checked against the d-vector of x_{i;source}
/// w.r.t. the partner cluster; disagreement throws TheoremViolation.
SharedClass gpair_dvector_classify(const GPairCertificate& cert, std::size_t i);

}  // namespace clusteralg
