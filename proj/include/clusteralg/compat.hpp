#pragma once

// Compatibility degree d(a,b) and compatible sets over a complete exchange graph.

#include "clusteralg/explorer.hpp"
#include "clusteralg/int_matrix.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace clusteralg {

struct DegreeReport {
  std::size_t a = 0;  // indices into the variable order
  std::size_t b = 0;
  std::int64_t degree = 0;
  std::size_t witness = 0;  // node whose cluster contains a
  std::size_t slot = 0;     // slot of a in the witness
};

/// Variables are indexed in BFS discovery order (node order, then slot).
/// Degrees are computed from trivial-coefficient re-expansions.
class Compatibility {
 public:
  /// Throws TruncatedGraph.
  explicit Compatibility(const ExchangeGraph& g);

  const ExchangeGraph& graph() const { return *g_; }
  const std::vector<LaurentPoly>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  /// Throws UnknownVariable.
  std::size_t index_of(const LaurentPoly& x) const;
  /// Variable indices per slot of node `node`.
  const std::vector<std::size_t>& node_variables(std::size_t node) const { return node_vars_[node]; }
  /// Nodes whose cluster contains variable `a`, in BFS order.
  const std::vector<std::size_t>& witnesses(std::size_t a) const { return witnesses_[a]; }

  /// Through the first BFS witness of a.
  DegreeReport report(std::size_t a, std::size_t b) const;
  std::int64_t degree(std::size_t a, std::size_t b) const { return report(a, b).degree; }
  std::int64_t degree(const LaurentPoly& a, const LaurentPoly& b) const;
  /// One report per witness of a; equal degrees are Theorem 6.3(i).
  std::vector<DegreeReport> audit(std::size_t a, std::size_t b) const;
  /// d-vector of variable b w.r.t. the cluster of `node`.
  IntVector dvector_in(std::size_t b, std::size_t node) const;

  bool compatible(std::size_t a, std::size_t b) const;
  bool is_compatible_set(std::span<const std::size_t> vars) const;
  /// First node containing every variable. Throws NotFound.
  std::size_t complete_to_cluster(std::span<const std::size_t> vars) const;
  /// Inclusion-maximal compatible sets as sorted index lists, sorted.
  std::vector<std::vector<std::size_t>> maximal_compatible_sets() const;
  IntMatrix degree_matrix() const;

 private:
  const std::vector<LaurentPoly>& expansions(std::size_t of_node, std::size_t wrt_node) const;

  const ExchangeGraph* g_;
  std::vector<LaurentPoly> vars_;
  std::map<LaurentPoly, std::size_t> index_;
  std::vector<std::vector<std::size_t>> node_vars_;
  std::vector<std::vector<std::size_t>> witnesses_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<LaurentPoly>> cache_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::int64_t> degrees_;
};

}  // namespace clusteralg
