#include "clusteralg/compat.hpp"

#include "clusteralg/errors.hpp"
#include "clusteralg/invariants.hpp"

#include <algorithm>

namespace clusteralg {

Compatibility::Compatibility(const ExchangeGraph& g) : g_(&g) {
  g.require_complete("compatibility degrees");
  vars_ = cluster_variables(g);
  for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], i);
  witnesses_.resize(vars_.size());
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    std::vector<std::size_t> ids;
    for (const auto& x : g.nodes()[v].seed.cluster()) {
      const std::size_t a = index_.at(x);
      ids.push_back(a);
      witnesses_[a].push_back(v);
    }
    node_vars_.push_back(std::move(ids));
  }
}

std::size_t Compatibility::index_of(const LaurentPoly& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw UnknownVariable("not a cluster variable of this graph: " + x.to_string());
  return it->second;
}

const std::vector<LaurentPoly>& Compatibility::expansions(std::size_t of_node, std::size_t wrt_node) const {
  const auto key = std::pair{of_node, wrt_node};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto& nodes = g_->nodes();
  auto ex = expand_in(nodes[of_node].seed, nodes[wrt_node].seed, CoefficientMode::trivial);
  return cache_.emplace(key, std::move(ex)).first->second;
}

IntVector Compatibility::dvector_in(std::size_t b, std::size_t node) const {
  if (b >= vars_.size()) throw IndexOutOfRange("variable index out of range");
  if (node >= g_->nodes().size()) throw IndexOutOfRange("node index out of range");
  const std::size_t home = witnesses_[b].front();
  const auto& slots = node_vars_[home];
  const auto s = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), b) - slots.begin());
  return dvector_direct(expansions(home, node)[s]).entries;
}

DegreeReport Compatibility::report(std::size_t a, std::size_t b) const {
  if (a >= vars_.size() || b >= vars_.size()) throw IndexOutOfRange("variable index out of range");
  const std::size_t w = witnesses_[a].front();
  const auto& slots = node_vars_[w];
  const auto j = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), a) - slots.begin());
  auto it = degrees_.find({a, b});
  if (it == degrees_.end()) it = degrees_.emplace(std::pair{a, b}, dvector_in(b, w)[j]).first;
  return {a, b, it->second, w, j};
}

std::int64_t Compatibility::degree(const LaurentPoly& a, const LaurentPoly& b) const {
  return degree(index_of(a), index_of(b));
}

std::vector<DegreeReport> Compatibility::audit(std::size_t a, std::size_t b) const {
  if (a >= vars_.size() || b >= vars_.size()) throw IndexOutOfRange("variable index out of range");
  std::vector<DegreeReport> out;
  for (std::size_t w : witnesses_[a]) {
    const auto& slots = node_vars_[w];
    const auto j = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), a) - slots.begin());
    out.push_back({a, b, dvector_in(b, w)[j], w, j});
  }
  return out;
}

bool Compatibility::compatible(std::size_t a, std::size_t b) const {
  return degree(a, b) <= 0 && degree(b, a) <= 0;
}

bool Compatibility::is_compatible_set(std::span<const std::size_t> vars) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (!compatible(vars[i], vars[j])) return false;
  return true;
}

std::size_t Compatibility::complete_to_cluster(std::span<const std::size_t> vars) const {
  for (std::size_t v = 0; v < node_vars_.size(); ++v) {
    const auto& ids = node_vars_[v];
    if (std::all_of(vars.begin(), vars.end(),
                    [&](std::size_t a) { return std::find(ids.begin(), ids.end(), a) != ids.end(); }))
      return v;
  }
  throw NotFound("no cluster contains the given compatible set");
}

namespace {

// Bron-Kerbosch with pivoting over index sets kept sorted.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x,
                   std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    auto s = r;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t c = 0;
      for (std::size_t v : p) c += adj[u][v];
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  const auto candidates = p;
  for (std::size_t v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> np, nx;
    for (std::size_t w : p)
      if (adj[v][w]) np.push_back(w);
    for (std::size_t w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> Compatibility::maximal_compatible_sets() const {
  const std::size_t m = vars_.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) adj[a][b] = adj[b][a] = compatible(a, b);
  std::vector<std::size_t> r, p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  std::vector<std::vector<std::size_t>> out;
  bron_kerbosch(adj, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix Compatibility::degree_matrix() const {
  const std::size_t m = vars_.size();
  IntMatrix d(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) d(a, b) = degree(a, b);
  return d;
}

}  // namespace clusteralg
