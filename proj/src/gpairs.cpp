#include "clusteralg/gpairs.hpp"

#include "clusteralg/errors.hpp"
#include "clusteralg/invariants.hpp"

#include <algorithm>

namespace clusteralg {

namespace {

std::optional<IntMatrix> criterion(const IntMatrix& gsource, const IntMatrix& gpartner,
                                   const std::vector<std::size_t>& subset) {
  const IntMatrix block = gpartner.submatrix(subset, subset);
  const BigInt det = block.determinant();
  if (det != 1 && det != -1)
    throw SingularBlock("G_partner restricted to I x I has determinant " + det.str());
  IntMatrix q = block.inverse_unimodular() * gsource.select_rows(subset);
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < q.cols(); ++c)
      if (q(r, c) < 0) return std::nullopt;
  return q;
}

void require_principal(const Seed& s, const char* what) {
  if (s.mode() != CoefficientMode::principal)
    throw PreconditionViolated(std::string(what) + " needs principal coefficients");
}

}  // namespace

std::optional<IntMatrix> is_gpair(const Seed& source, const Seed& partner, std::span<const std::size_t> subset) {
  require_principal(source, "is_gpair");
  require_principal(partner, "is_gpair");
  if (source.root_bmat() != partner.root_bmat())
    throw PreconditionViolated("source and partner belong to different cluster patterns");
  const auto sub = normalize_subset(subset, source.rank());
  for (std::size_t k : partner.path())
    if (!std::binary_search(sub.begin(), sub.end(), k))
      throw PreconditionViolated("partner path direction " + std::to_string(k + 1) + " lies outside I");
  return criterion(gmatrix(source), gmatrix(partner), sub);
}

GPairFinder::GPairFinder(IntMatrix root_bmat, std::size_t limit)
    : root_bmat_(std::move(root_bmat)), limit_(limit) {}

GPairFinder::Restricted& GPairFinder::restricted(const std::vector<std::size_t>& subset) {
  auto it = cache_.find(subset);
  if (it == cache_.end()) {
    Restricted r;
    r.graph = restricted_explore(Seed::initial(root_bmat_, CoefficientMode::principal), subset, limit_);
    if (!r.graph.truncated())
      for (const auto& node : r.graph.nodes()) r.gmats.push_back(gmatrix(node.seed));
    it = cache_.emplace(subset, std::move(r)).first;
  }
  if (it->second.graph.truncated())
    throw TruncatedGraph("I-restricted subpattern did not close within " + std::to_string(limit_) +
                         " labeled seeds; partner search refuses infinite restricted types");
  return it->second;
}

const ExchangeGraph& GPairFinder::restricted_graph(std::span<const std::size_t> subset) {
  return restricted(normalize_subset(subset, root_bmat_.rows())).graph;
}

GPairCertificate GPairFinder::find(const Seed& source, std::span<const std::size_t> subset) {
  require_principal(source, "find_gpair");
  if (source.bmat().rows() != root_bmat_.rows() || source.root_bmat() != root_bmat_)
    throw PreconditionViolated("source seed belongs to a different cluster pattern");
  const auto sub = normalize_subset(subset, source.rank());
  Restricted& r = restricted(sub);
  const IntMatrix gsource = gmatrix(source);

  std::optional<GPairCertificate> found;
  std::string found_key;
  for (std::size_t i = 0; i < r.graph.nodes().size(); ++i) {
    auto q = criterion(gsource, r.gmats[i], sub);
    if (!q) continue;
    const Seed& cand = r.graph.nodes()[i].seed;
    if (!found) {
      found = GPairCertificate{source, cand, sub, std::move(*q)};
      found_key = canonical_key(cand);
    } else if (canonical_key(cand) != found_key) {
      throw MultipleFound("two inequivalent partners pass the g-pair criterion (paths of length " +
                          std::to_string(found->partner.path().size()) + " and " +
                          std::to_string(cand.path().size()) + ")");
    }
  }
  if (!found) throw NotFound("no seed in the I-restricted subpattern forms a g-pair with the source");
  return std::move(*found);
}

GPairCertificate find_gpair(const Seed& source, std::span<const std::size_t> subset, std::size_t limit) {
  GPairFinder finder(source.root_bmat(), limit);
  return finder.find(source, subset);
}

const char* to_string(SharedClass c) {
  switch (c) {
    case SharedClass::shared_at_k: return "shared-at-k";
    case SharedClass::shared_elsewhere: return "shared-elsewhere";
    case SharedClass::disjoint: return "disjoint";
  }
  return "?";
}

SharedClass gpair_dvector_classify(const GPairCertificate& cert, std::size_t i) {
  const std::size_t n = cert.source.rank();
  if (i >= n) throw IndexOutOfRange("variable index " + std::to_string(i + 1) + " out of range");
  if (cert.subset.size() + 1 != n)
    throw PreconditionViolated("classification needs a certificate along [n] minus one index");
  std::size_t k = 0;
  while (k < cert.subset.size() && cert.subset[k] == k) ++k;

  const IntMatrix r = rmatrix(cert.partner, cert.source);
  const std::int64_t rki = r(k, i);
  const SharedClass by_r = rki > 0 ? SharedClass::shared_at_k
                         : rki == 0 ? SharedClass::shared_elsewhere
                                    : SharedClass::disjoint;

  const auto expanded = expand_in(cert.source, cert.partner, CoefficientMode::trivial);
  const std::int64_t dk = dvector_direct(expanded[i]).entries[k];
  const SharedClass by_d = dk == -1 ? SharedClass::shared_at_k
                         : dk == 0  ? SharedClass::shared_elsewhere
                                    : SharedClass::disjoint;
  if (dk < -1 || by_r != by_d)
    throw TheoremViolation("Lemma 5.2 mismatch at k=" + std::to_string(k + 1) + ", i=" + std::to_string(i + 1) +
                           ": r_ki=" + std::to_string(rki) + " but d'_k=" + std::to_string(dk));

  const auto slot = cert.partner.slot_of(cert.source.cluster()[i]);
  const SharedClass by_member = !slot ? SharedClass::disjoint
                              : *slot == k ? SharedClass::shared_at_k
                                           : SharedClass::shared_elsewhere;
  if (by_member != by_r)
    throw TheoremViolation("Lemma 5.2 classification disagrees with cluster membership at k=" +
                           std::to_string(k + 1) + ", i=" + std::to_string(i + 1));
  return by_r;
}

}  // namespace clusteralg
