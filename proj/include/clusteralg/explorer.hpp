#pragma once

// Breadth-first materialization of exchange graphs.

#include "clusteralg/seed.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace clusteralg {

inline constexpr std::size_t kDefaultNodeLimit = 10000;

struct ExchangeNode {
  Seed seed;  // labeled seed reached by seed.path() from the root
  std::string key;
};

struct ExchangeEdge {
  std::size_t from;
  std::size_t slot;
  std::size_t to;
  bool operator==(const ExchangeEdge&) const = default;
};

class ExchangeGraph {
 public:
  ExchangeGraph() = default;

  std::size_t rank() const { return rank_; }
  const std::vector<ExchangeNode>& nodes() const { return nodes_; }
  const std::vector<ExchangeEdge>& edges() const { return edges_; }
  bool truncated() const { return truncated_; }
  /// Labeled graphs keep slot identities; quotient graphs identify
  /// equivalent seeds.
  bool labeled() const { return labeled_; }
  const Seed& root() const { return nodes_.front().seed; }

  std::optional<std::size_t> find(const std::string& key) const;
  /// Node index of the seed, by the graph's own key kind.
  std::optional<std::size_t> locate(const Seed& s) const;

  /// Throws TruncatedGraph with `what` in the message.
  void require_complete(const char* what) const;

 private:
  friend ExchangeGraph explore(const Seed&, std::size_t);
  friend ExchangeGraph restricted_explore(const Seed&, std::span<const std::size_t>, std::size_t);

  std::size_t rank_ = 0;
  std::vector<ExchangeNode> nodes_;
  std::vector<ExchangeEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  bool truncated_ = false;
  bool labeled_ = false;
};

/// Exchange graph up to seed equivalence.
ExchangeGraph explore(const Seed& initial, std::size_t limit = kDefaultNodeLimit);

/// Sorted copy of a 0-based index subset of [0, rank). Throws on repeats or
/// out-of-range entries.
std::vector<std::size_t> normalize_subset(std::span<const std::size_t> subset, std::size_t rank);

/// Labeled seeds reachable by mutations whose directions lie in `subset`.
ExchangeGraph restricted_explore(const Seed& initial, std::span<const std::size_t> subset,
                                 std::size_t limit = kDefaultNodeLimit);

/// Distinct cluster variables in BFS discovery order (node order, then slot).
std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g);

struct Subgraph {
  std::vector<std::size_t> nodes;
  std::vector<ExchangeEdge> edges;
  bool connected() const;
};

/// Nodes whose cluster contains every element of `vars`, with induced edges.
Subgraph seeds_containing(const ExchangeGraph& g, std::span<const LaurentPoly> vars);

}  // namespace clusteralg
