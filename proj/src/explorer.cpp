#include "clusteralg/explorer.hpp"

#include "clusteralg/errors.hpp"

#include <algorithm>
#include <set>

namespace clusteralg {

std::optional<std::size_t> ExchangeGraph::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExchangeGraph::locate(const Seed& s) const {
  return find(labeled_ ? labeled_key(s) : canonical_key(s));
}

void ExchangeGraph::require_complete(const char* what) const {
  if (truncated_)
    throw TruncatedGraph(std::string(what) + " needs the complete exchange graph, but exploration stopped at " +
                         std::to_string(nodes_.size()) + " nodes");
}

namespace {

template <typename KeyFn>
void breadth_first(ExchangeGraph& g, std::vector<ExchangeNode>& nodes, std::vector<ExchangeEdge>& edges,
                   std::unordered_map<std::string, std::size_t>& index, bool& truncated,
                   const Seed& initial, std::span<const std::size_t> directions, std::size_t limit,
                   KeyFn key_of) {
  (void)g;
  if (limit < 1) throw InvalidArgument("node limit must be at least 1");
  std::vector<std::size_t> parent;
  nodes.push_back({initial, key_of(initial)});
  index.emplace(nodes.back().key, 0);
  parent.push_back(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k : directions) {
      const Path& p = nodes[i].seed.path();
      if (i != 0 && !p.empty() && p.back() == k) {
        edges.push_back({i, k, parent[i]});
        continue;
      }
      Seed next = mutate_seed(nodes[i].seed, k);
      std::string key = key_of(next);
      if (auto it = index.find(key); it != index.end()) {
        edges.push_back({i, k, it->second});
        continue;
      }
      if (nodes.size() >= limit) {
        truncated = true;
        continue;
      }
      const std::size_t id = nodes.size();
      index.emplace(key, id);
      nodes.push_back({std::move(next), std::move(key)});
      parent.push_back(i);
      edges.push_back({i, k, id});
    }
  }
}

}  // namespace

ExchangeGraph explore(const Seed& initial, std::size_t limit) {
  ExchangeGraph g;
  g.rank_ = initial.rank();
  g.labeled_ = false;
  std::vector<std::size_t> all(initial.rank());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  breadth_first(g, g.nodes_, g.edges_, g.index_, g.truncated_, initial, all, limit,
                [](const Seed& s) { return canonical_key(s); });
  return g;
}

std::vector<std::size_t> normalize_subset(std::span<const std::size_t> subset, std::size_t rank) {
  std::vector<std::size_t> dirs(subset.begin(), subset.end());
  std::sort(dirs.begin(), dirs.end());
  if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
    throw InvalidArgument("index subset has repeated entries");
  for (std::size_t k : dirs)
    if (k >= rank) throw IndexOutOfRange("subset index " + std::to_string(k + 1) + " out of range");
  return dirs;
}

ExchangeGraph restricted_explore(const Seed& initial, std::span<const std::size_t> subset, std::size_t limit) {
  const auto dirs = normalize_subset(subset, initial.rank());
  ExchangeGraph g;
  g.rank_ = initial.rank();
  g.labeled_ = true;
  breadth_first(g, g.nodes_, g.edges_, g.index_, g.truncated_, initial, dirs, limit,
                [](const Seed& s) { return labeled_key(s); });
  return g;
}

std::vector<LaurentPoly> cluster_variables(const ExchangeGraph& g) {
  g.require_complete("cluster_variables");
  std::vector<LaurentPoly> out;
  std::set<LaurentPoly> seen;
  for (const auto& node : g.nodes())
    for (const auto& x : node.seed.cluster())
      if (seen.insert(x).second) out.push_back(x);
  return out;
}

Subgraph seeds_containing(const ExchangeGraph& g, std::span<const LaurentPoly> vars) {
  g.require_complete("seeds_containing");
  Subgraph sub;
  std::vector<bool> member(g.nodes().size(), false);
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    const Seed& s = g.nodes()[i].seed;
    if (std::all_of(vars.begin(), vars.end(), [&](const LaurentPoly& x) { return s.slot_of(x).has_value(); })) {
      member[i] = true;
      sub.nodes.push_back(i);
    }
  }
  for (const auto& e : g.edges())
    if (member[e.from] && member[e.to]) sub.edges.push_back(e);
  return sub;
}

bool Subgraph::connected() const {
  if (nodes.empty()) return true;
  std::set<std::size_t> reached{nodes.front()};
  std::vector<std::size_t> stack{nodes.front()};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      std::size_t w;
      if (e.from == v)
        w = e.to;
      else if (e.to == v)
        w = e.from;
      else
        continue;
      if (reached.insert(w).second) stack.push_back(w);
    }
  }
  return reached.size() == nodes.size();
}

}  // namespace clusteralg
