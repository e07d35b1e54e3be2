#include "clusteralg/verify.hpp"

#include "clusteralg/compat.hpp"
#include "clusteralg/errors.hpp"
#include "clusteralg/gpairs.hpp"
#include "clusteralg/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace clusteralg {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const PropertyResult& r) { return r.status == s; }));
}

Json VerificationReport::to_json(bool with_timing) const {
  Json props = Json::array();
  for (const auto& r : results) {
    Json p{{"name", r.name}, {"reference", r.reference}, {"status", clusteralg::to_string(r.status)},
           {"checked", r.checked}, {"failures", r.failures}};
    if (!r.counterexample.is_null()) p["counterexample"] = r.counterexample;
    if (!r.note.empty()) p["note"] = r.note;
    if (with_timing) p["seconds"] = r.seconds;
    props.push_back(std::move(p));
  }
  Json out{{"schema_version", kReportSchemaVersion},
           {"instance", Json{{"n", bmat.rows()},
                             {"B", clusteralg::to_json(bmat)},
                             {"modes", Json::array({"trivial", "principal"})},
                             {"limit", options.limit},
                             {"degree_bound", options.degree_bound},
                             {"suite", options.suite}}},
           {"summary", Json{{"pass", count(Status::pass)},
                            {"fail", count(Status::fail)},
                            {"skipped", count(Status::skipped)}}},
           {"properties", std::move(props)}};
  if (with_timing) out["seconds"] = seconds;
  return out;
}

std::vector<std::string> suite_names() {
  return {"all", "laurent", "seed", "explorer", "invariants", "gpairs", "compat"};
}

namespace {

// Skips the rest of a property.
struct Skip {
  std::string why;
};

class Recorder {
 public:
  explicit Recorder(PropertyResult& r) : r_(r) {}

  template <typename Payload>
  void check(bool ok, Payload&& payload) {
    ++r_.checked;
    if (ok) return;
    if (r_.failures++ == 0) r_.counterexample = payload();
  }
  void fail(Json payload, const std::string& why) {
    ++r_.checked;
    if (r_.failures++ == 0) {
      r_.counterexample = std::move(payload);
      r_.note = why;
    }
  }
  void note(std::string s) { r_.note = std::move(s); }

 private:
  PropertyResult& r_;
};

Json at(const Seed& s) { return Json{{"path", path_to_json(s.path())}}; }

Json subset_json(const std::vector<std::size_t>& sub) {
  Json j = Json::array();
  for (std::size_t i : sub) j.push_back(i + 1);
  return j;
}

Json vec_json(const IntVector& v) { return Json(v); }

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Subsets of {0..m-1} with at most `k` elements, including the empty set.
void small_subsets(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    f(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

struct Context {
  IntMatrix bmat;
  VerifyOptions opts;
  std::size_t n = 0;
  Seed troot, proot;
  ExchangeGraph tg, pg;
  std::optional<Compatibility> compat;
  std::vector<std::vector<bool>> cocluster;  // over compat variables
  GPairFinder finder;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, GPairCertificate> certs;
  bool certs_done = false;
  std::size_t certs_skipped = 0;
  std::mt19937_64 rng{0x5eedc1a5u};

  Context(const IntMatrix& b, const VerifyOptions& o)
      : bmat(b),
        opts(o),
        n(b.rows()),
        troot(Seed::initial(b, CoefficientMode::trivial)),
        proot(Seed::initial(b, CoefficientMode::principal)),
        finder(b, o.limit) {}

  bool complete() const { return !tg.truncated() && !pg.truncated(); }
  void require_complete() const {
    if (!complete()) throw Skip{"exchange graph truncated at the node limit"};
  }
  const Compatibility& cc() {
    require_complete();
    if (!compat) {
      compat.emplace(tg);
      const std::size_t m = compat->size();
      cocluster.assign(m, std::vector<bool>(m, false));
      for (std::size_t v = 0; v < tg.nodes().size(); ++v)
        for (std::size_t a : compat->node_variables(v))
          for (std::size_t b : compat->node_variables(v)) cocluster[a][b] = true;
    }
    return *compat;
  }

  // g-pair certificates for every explored principal node and nonempty I.
  void build_certs() {
    if (certs_done) return;
    certs_done = true;
    for (std::size_t v = 0; v < pg.nodes().size(); ++v)
      for (const auto& sub : nonempty_subsets(n)) {
        try {
          certs.emplace(std::pair{v, sub}, finder.find(pg.nodes()[v].seed, sub));
        } catch (const TruncatedGraph&) {
          ++certs_skipped;
        }
      }
  }

  LaurentPoly random_poly(bool laurent) {
    std::uniform_int_distribution<int> nterms(1, 4), xe(laurent ? -2 : 0, 2), ye(0, 2), co(-3, 3);
    LaurentPoly p(n);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      std::vector<Exponent> xs(n), ys(n);
      for (auto& e : xs) e = xe(rng);
      for (auto& e : ys) e = ye(rng);
      int c = co(rng);
      if (c == 0) c = 1;
      p += LaurentPoly::monomial(ExponentVector(xs, ys), c);
    }
    return p;
  }

  TropicalMonomial random_trop() {
    std::uniform_int_distribution<int> e(-3, 3);
    TropicalMonomial m = TropicalMonomial::one(n);
    for (std::size_t i = 0; i < n; ++i) m = m * TropicalMonomial::generator(n, i).pow(e(rng));
    return m;
  }
};

using Check = std::function<void(Context&, Recorder&)>;

struct Property {
  const char* name;
  const char* reference;
  Check run;
};

// ---------------------------------------------------------------------------

void ring_axioms(Context& c, Recorder& rec) {
  for (int t = 0; t < 40; ++t) {
    const auto a = c.random_poly(true), b = c.random_poly(true), d = c.random_poly(true);
    auto payload = [&] {
      return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", d.to_string()}};
    };
    rec.check((a * b) * d == a * (b * d), payload);
    rec.check(a * b == b * a && a + b == b + a, payload);
    rec.check(a * (b + d) == a * b + a * d, payload);
    rec.check(a - a == LaurentPoly(c.n), payload);
  }
}

void division_roundtrip(Context& c, Recorder& rec) {
  for (int t = 0; t < 40; ++t) {
    const auto p = c.random_poly(true), q = c.random_poly(t % 2 == 0);
    rec.check(div_exact(p * q, q) == p, [&] { return Json{{"p", p.to_string()}, {"q", q.to_string()}}; });
  }
}

void serialization_roundtrip(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg})
    for (const auto& node : g->nodes())
      for (const auto& x : node.seed.cluster())
        rec.check(LaurentPoly::parse(x.to_string(), c.n) == x, [&] { return Json{{"poly", x.to_string()}}; });
}

void tropical_laws(Context& c, Recorder& rec) {
  for (int t = 0; t < 60; ++t) {
    const auto a = c.random_trop(), b = c.random_trop(), d = c.random_trop();
    auto payload = [&] {
      return Json{{"a", a.yexp()}, {"b", b.yexp()}, {"c", d.yexp()}};
    };
    rec.check(trop_oplus(a, b) == trop_oplus(b, a), payload);
    rec.check(trop_oplus(trop_oplus(a, b), d) == trop_oplus(a, trop_oplus(b, d)), payload);
    rec.check(trop_oplus(a, a) == a, payload);
    rec.check(a * trop_oplus(b, d) == trop_oplus(a * b, a * d), payload);
  }
}

void mutation_involution(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg})
    for (const auto& node : g->nodes())
      for (std::size_t k = 0; k < c.n; ++k) {
        const Seed back = mutate_seed(mutate_seed(node.seed, k), k);
        rec.check(back == node.seed, [&] {
          return Json{{"mode", to_string(node.seed.mode())}, {"path", path_to_json(node.seed.path())},
                      {"k", k + 1}};
        });
      }
}

void symmetrizer_preserved(Context& c, Recorder& rec) {
  const auto s0 = find_skew_symmetrizer(c.bmat).diag;
  for (const auto& node : c.tg.nodes())
    for (std::size_t k = 0; k < c.n; ++k)
      rec.check(find_skew_symmetrizer(mutate_matrix(node.seed.bmat(), k)).diag == s0,
                [&] { return Json{{"path", path_to_json(node.seed.path())}, {"k", k + 1}}; });
}

void laurent_property(Context& c, Recorder& rec) {
  // Exploration already divided exactly at every step; re-run each edge's
  // mutation to count the divisions that were checked.
  for (const auto* g : {&c.tg, &c.pg})
    for (const auto& e : g->edges()) {
      bool ok = true;
      try {
        mutate_seed(g->nodes()[e.from].seed, e.slot);
      } catch (const InexactDivision&) {
        ok = false;
      }
      rec.check(ok, [&] { return Json{{"path", path_to_json(g->nodes()[e.from].seed.path())}, {"k", e.slot + 1}}; });
    }
}

void principal_positivity(Context& c, Recorder& rec) {
  for (const auto& node : c.pg.nodes())
    for (std::size_t i = 0; i < c.n; ++i) {
      const auto& x = node.seed.cluster()[i];
      bool ok = true;
      for (const auto& [e, coef] : x.terms()) {
        if (coef <= 0) ok = false;
        for (Exponent y : e.yexp())
          if (y < 0) ok = false;
      }
      rec.check(ok, [&] { return Json{{"path", path_to_json(node.seed.path())}, {"slot", i + 1}}; });
    }
}

void distinct_entries(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg})
    for (const auto& node : g->nodes()) {
      std::set<LaurentPoly> s(node.seed.cluster().begin(), node.seed.cluster().end());
      rec.check(s.size() == c.n, [&] { return at(node.seed); });
    }
}

void finite_closure(Context& c, Recorder& rec) {
  c.require_complete();
  rec.check(c.tg.nodes().size() == c.pg.nodes().size(), [&] {
    return Json{{"trivial_nodes", c.tg.nodes().size()}, {"principal_nodes", c.pg.nodes().size()}};
  });
  rec.note(std::to_string(c.tg.nodes().size()) + " seed classes");
}

void witness_paths(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg}) {
    const Seed root = Seed::initial(c.bmat, g->root().mode());
    for (std::size_t i = 0; i < g->nodes().size(); ++i) {
      const Seed& s = g->nodes()[i].seed;
      const Seed replay = mutate_along(root, s.path());
      rec.check(replay == s && g->locate(replay) == i, [&] { return at(s); });
    }
  }
}

void degree_regularity(Context& c, Recorder& rec) {
  c.require_complete();
  for (const auto* g : {&c.tg, &c.pg}) {
    std::vector<std::set<std::size_t>> slots(g->nodes().size());
    std::set<std::pair<std::size_t, std::size_t>> adj;
    for (const auto& e : g->edges()) {
      slots[e.from].insert(e.slot);
      adj.insert({e.from, e.to});
    }
    for (std::size_t i = 0; i < g->nodes().size(); ++i)
      rec.check(slots[i].size() == c.n, [&] { return at(g->nodes()[i].seed); });
    for (const auto& e : g->edges())
      rec.check(adj.count({e.to, e.from}) == 1, [&] {
        return Json{{"from", at(g->nodes()[e.from].seed)}, {"to", at(g->nodes()[e.to].seed)}, {"k", e.slot + 1}};
      });
  }
}

void rank2_period(Context& c, Recorder& rec) {
  c.require_complete();
  if (c.n != 2) throw Skip{"rank is not 2"};
  const std::size_t len = c.tg.nodes().size();
  Path p;
  for (std::size_t i = 0; i < len; ++i) p.push_back(i % 2);
  for (const Seed* root : {&c.troot, &c.proot}) {
    const auto sigma = seeds_equivalent(mutate_along(*root, p), *root);
    const std::vector<std::size_t> want = len % 2 ? std::vector<std::size_t>{1, 0} : std::vector<std::size_t>{0, 1};
    rec.check(sigma && *sigma == want, [&] { return Json{{"path", path_to_json(p)}, {"mode", to_string(root->mode())}}; });
  }
}

void cluster_determines_seed(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg}) {
    std::map<std::set<LaurentPoly>, std::size_t> seen;
    for (std::size_t i = 0; i < g->nodes().size(); ++i) {
      const auto& cl = g->nodes()[i].seed.cluster();
      auto [it, fresh] = seen.emplace(std::set<LaurentPoly>(cl.begin(), cl.end()), i);
      rec.check(fresh, [&] { return Json{{"first", at(g->nodes()[it->second].seed)}, {"second", at(g->nodes()[i].seed)}}; });
    }
  }
}

void connectedness(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  if (cc.size() > 40) throw Skip{"too many cluster variables for subset enumeration"};
  // Subsets larger than n lie in no cluster, so their subgraph is empty.
  small_subsets(cc.size(), c.n, [&](const std::vector<std::size_t>& s) {
    std::vector<LaurentPoly> vars;
    for (std::size_t a : s) vars.push_back(cc.variables()[a]);
    rec.check(seeds_containing(c.tg, vars).connected(), [&] {
      Json j = Json::array();
      for (std::size_t a : s) j.push_back(a + 1);
      return Json{{"variables", j}};
    });
  });
}

void labeled_vs_cluster(Context& c, Recorder& rec) {
  std::size_t skipped = 0;
  for (const auto& sub : nonempty_subsets(c.n)) {
    const ExchangeGraph base = restricted_explore(c.proot, sub, c.opts.limit);
    if (base.truncated()) {
      ++skipped;
      continue;
    }
    auto clusters = [](const ExchangeGraph& g) {
      std::set<std::set<LaurentPoly>> out;
      for (const auto& node : g.nodes())
        out.emplace(node.seed.cluster().begin(), node.seed.cluster().end());
      return out;
    };
    for (const auto& node : base.nodes())
      for (std::size_t i = 0; i < c.n; ++i)
        if (!std::binary_search(sub.begin(), sub.end(), i))
          rec.check(node.seed.cluster()[i] == c.proot.cluster()[i], [&] {
            return Json{{"subset", subset_json(sub)}, {"path", path_to_json(node.seed.path())}, {"slot", i + 1}};
          });
    const auto want = clusters(base);
    // Relabel the root by permutations of I; slots outside I stay fixed.
    std::vector<std::size_t> perm = sub;
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::size_t> sigma(c.n);
      for (std::size_t i = 0; i < c.n; ++i) sigma[i] = i;
      for (std::size_t j = 0; j < sub.size(); ++j) sigma[sub[j]] = perm[j];
      const ExchangeGraph alt = restricted_explore(relabel(c.proot, sigma), sub, c.opts.limit);
      rec.check(!alt.truncated() && clusters(alt) == want, [&] {
        return Json{{"subset", subset_json(sub)}, {"relabeling", subset_json(sigma)}};
      });
    }
  }
  if (skipped) rec.note(std::to_string(skipped) + " subsets skipped: restricted graph truncated");
}

void dmatrix_recurrence_check(Context& c, Recorder& rec) {
  for (const auto* g : {&c.tg, &c.pg})
    for (const auto& node : g->nodes())
      rec.check(dmatrix_recurrence(node.seed.path(), c.bmat) == dmatrix_direct(node.seed), [&] {
        return Json{{"mode", to_string(node.seed.mode())}, {"path", path_to_json(node.seed.path())},
                    {"direct", to_json(dmatrix_direct(node.seed))},
                    {"recurrence", to_json(dmatrix_recurrence(node.seed.path(), c.bmat))}};
      });
}

void coefficient_independence(Context& c, Recorder& rec) {
  for (const auto& node : c.pg.nodes()) {
    const Seed t = mutate_along(c.troot, node.seed.path());
    rec.check(dmatrix_direct(t) == dmatrix_direct(node.seed), [&] { return at(node.seed); });
  }
}

void dvector_stability(Context& c, Recorder& rec) {
  // One home node per distinct variable covers every variable once.
  std::vector<std::size_t> homes;
  std::set<LaurentPoly> seen;
  for (std::size_t v = 0; v < c.tg.nodes().size(); ++v) {
    bool fresh = false;
    for (const auto& x : c.tg.nodes()[v].seed.cluster()) fresh |= seen.insert(x).second;
    if (fresh) homes.push_back(v);
  }
  std::vector<const Seed*> hs;
  for (std::size_t h : homes) hs.push_back(&c.tg.nodes()[h].seed);
  for (const auto& node : c.tg.nodes()) {
    const auto e1 = expand_many(hs, node.seed);
    for (std::size_t k = 0; k < c.n; ++k) {
      const Seed t2 = mutate_seed(node.seed, k);
      const auto e2 = expand_many(hs, t2);
      for (std::size_t h = 0; h < hs.size(); ++h) {
        for (std::size_t s = 0; s < c.n; ++s) {
          const auto d1 = dvector_direct(e1[h][s]).entries, d2 = dvector_direct(e2[h][s]).entries;
          bool ok = true;
          for (std::size_t i = 0; i < c.n; ++i)
            if (i != k && d1[i] != d2[i]) ok = false;
          rec.check(ok, [&] {
            return Json{{"variable", hs[h]->cluster()[s].to_string()}, {"path", path_to_json(node.seed.path())},
                        {"k", k + 1}, {"d", vec_json(d1)}, {"d_mutated", vec_json(d2)}};
          });
        }
      }
    }
  }
}

void g_sign_coherence(Context& c, Recorder& rec) {
  for (const auto& node : c.pg.nodes()) {
    const IntMatrix g = gmatrix(node.seed);
    rec.check(rows_sign_coherent(g), [&] { return Json{{"path", path_to_json(node.seed.path())}, {"G", to_json(g)}}; });
  }
}

void g_unimodular(Context& c, Recorder& rec) {
  for (const auto& node : c.pg.nodes()) {
    try {
      const BigInt det = gmatrix(node.seed).determinant();
      rec.check(det == 1 || det == -1, [&] { return at(node.seed); });
    } catch (const TheoremViolation& e) {
      rec.fail(at(node.seed), e.what());
    }
  }
}

void r_factorization(Context& c, Recorder& rec) {
  std::vector<IntMatrix> gs;
  for (const auto& node : c.pg.nodes()) gs.push_back(gmatrix(node.seed));
  for (std::size_t s = 0; s < gs.size(); ++s)
    for (std::size_t t = 0; t < gs.size(); ++t)
      rec.check(gs[s] * (gs[s].inverse_unimodular() * gs[t]) == gs[t], [&] {
        return Json{{"s", at(c.pg.nodes()[s].seed)}, {"t", at(c.pg.nodes()[t].seed)}};
      });
}

void d_sign_coherence(Context& c, Recorder& rec) {
  for (const auto& node : c.tg.nodes()) {
    const IntMatrix d = dmatrix_direct(node.seed);
    rec.check(rows_sign_coherent(d) && columns_sign_coherent(d),
              [&] { return Json{{"path", path_to_json(node.seed.path())}, {"D", to_json(d)}}; });
  }
}

struct MonomialWitness {
  std::size_t node;
  IntVector v;
};

// Multiset of (variable, exponent) over the support of v.
std::map<LaurentPoly, std::int64_t> support(const Seed& s, const IntVector& v) {
  std::map<LaurentPoly, std::int64_t> m;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) m[s.cluster()[i]] += v[i];
  return m;
}

void gvector_injectivity(Context& c, Recorder& rec) {
  const auto vs = exponent_vectors(c.n, c.opts.degree_bound);
  std::map<IntVector, std::vector<MonomialWitness>> groups;
  for (std::size_t v = 0; v < c.pg.nodes().size(); ++v) {
    const IntMatrix g = gmatrix(c.pg.nodes()[v].seed);
    for (const auto& e : vs) groups[g * e].push_back({v, e});
  }
  for (const auto& [gv, members] : groups) {
    const auto& first = members.front();
    const Seed& s1 = c.pg.nodes()[first.node].seed;
    const LaurentPoly m1 = s1.monomial(first.v);
    const auto sup1 = support(s1, first.v);
    for (const auto& w : members) {
      const Seed& s2 = c.pg.nodes()[w.node].seed;
      rec.check(s2.monomial(w.v) == m1 && support(s2, w.v) == sup1, [&] {
        return Json{{"g", vec_json(gv)},
                    {"first", Json{{"path", path_to_json(s1.path())}, {"v", vec_json(first.v)}}},
                    {"second", Json{{"path", path_to_json(s2.path())}, {"v", vec_json(w.v)}}}};
      });
    }
  }
}

void proper_laurent(Context& c, Recorder& rec) {
  const auto vs = exponent_vectors(c.n, c.opts.degree_bound);
  std::set<LaurentPoly> done;
  std::size_t initial_monomials = 0;
  for (const auto& node : c.tg.nodes())
    for (const auto& v : vs) {
      if (!done.insert(node.seed.monomial(v)).second) continue;
      bool inside = true;
      for (std::size_t i = 0; i < c.n; ++i)
        if (v[i] > 0 && !c.troot.slot_of(node.seed.cluster()[i])) inside = false;
      if (inside) {
        ++initial_monomials;
        continue;
      }
      rec.check(proper_laurent_check(node.seed, v, c.troot),
                [&] { return Json{{"path", path_to_json(node.seed.path())}, {"v", vec_json(v)}}; });
    }
  rec.note(std::to_string(initial_monomials) + " monomials of the initial cluster excluded");
}

void dvector_trichotomy(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  for (std::size_t b = 0; b < cc.size(); ++b)
    for (std::size_t v = 0; v < c.tg.nodes().size(); ++v) {
      const auto d = cc.dvector_in(b, v);
      const auto& ids = cc.node_variables(v);
      for (std::size_t j = 0; j < c.n; ++j) {
        const std::size_t a = ids[j];
        const bool ok = a == b ? d[j] == -1 : c.cocluster[a][b] ? d[j] == 0 : d[j] > 0;
        rec.check(ok, [&] {
          return Json{{"variable", cc.variables()[b].to_string()}, {"cluster", at(c.tg.nodes()[v].seed)},
                      {"slot", j + 1}, {"d", vec_json(d)}};
        });
      }
    }
}

void gpair_existence(Context& c, Recorder& rec) {
  for (std::size_t v = 0; v < c.pg.nodes().size(); ++v)
    for (const auto& sub : nonempty_subsets(c.n)) {
      try {
        c.certs.insert_or_assign(std::pair{v, sub}, c.finder.find(c.pg.nodes()[v].seed, sub));
        rec.check(true, [] { return Json(); });
      } catch (const TruncatedGraph&) {
        ++c.certs_skipped;
      } catch (const TheoremViolation& e) {
        rec.fail(Json{{"source", at(c.pg.nodes()[v].seed)}, {"subset", subset_json(sub)}}, e.what());
      }
    }
  c.certs_done = true;
  if (c.certs_skipped) rec.note(std::to_string(c.certs_skipped) + " (seed, I) pairs skipped: restricted graph truncated");
}

void gpair_rows(Context& c, Recorder& rec) {
  c.build_certs();
  for (const auto& [key, cert] : c.certs) {
    if (cert.subset.size() != 1) continue;
    const std::size_t k = cert.subset.front();
    const IntVector row = gmatrix(cert.source).row(k);
    IntVector neg = row;
    for (auto& e : neg) e = -e;
    const IntVector q = cert.qmat.row(0);
    rec.check(q == row || q == neg, [&] {
      return Json{{"source", at(cert.source)}, {"subset", subset_json(cert.subset)}, {"Q", to_json(cert.qmat)}};
    });
  }
}

void gpair_lemma52(Context& c, Recorder& rec) {
  c.build_certs();
  for (const auto& [key, cert] : c.certs) {
    if (cert.subset.size() + 1 != c.n) continue;
    for (std::size_t i = 0; i < c.n; ++i) {
      try {
        gpair_dvector_classify(cert, i);
        rec.check(true, [] { return Json(); });
      } catch (const TheoremViolation& e) {
        rec.fail(Json{{"source", at(cert.source)}, {"subset", subset_json(cert.subset)}, {"i", i + 1}}, e.what());
      }
    }
  }
}

void gpair_monomials(Context& c, Recorder& rec) {
  c.build_certs();
  const auto vs = exponent_vectors(c.n, c.opts.degree_bound);
  for (const auto& [key, cert] : c.certs) {
    const IntMatrix gs = gmatrix(cert.source), gp = gmatrix(cert.partner);
    for (const auto& v : vs) {
      const IntVector vq = cert.qmat * v;
      IntVector ext(c.n, 0);
      for (std::size_t j = 0; j < cert.subset.size(); ++j) ext[cert.subset[j]] = vq[j];
      const IntVector lhs = gs * v, rhs = gp * ext;
      bool ok = true;
      for (std::size_t i : cert.subset) ok &= lhs[i] == rhs[i];
      for (auto e : ext) ok &= e >= 0;
      rec.check(ok, [&] {
        return Json{{"source", at(cert.source)}, {"subset", subset_json(cert.subset)}, {"v", vec_json(v)}};
      });
    }
  }
}

void compat_well_defined(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  for (std::size_t a = 0; a < cc.size(); ++a)
    for (std::size_t b = 0; b < cc.size(); ++b) {
      const auto reps = cc.audit(a, b);
      for (const auto& r : reps)
        rec.check(r.degree == reps.front().degree, [&] {
          return Json{{"a", a + 1}, {"b", b + 1}, {"witness", at(c.tg.nodes()[r.witness].seed)},
                      {"first_witness", at(c.tg.nodes()[reps.front().witness].seed)}};
        });
    }
}

void compat_trichotomy(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  for (std::size_t a = 0; a < cc.size(); ++a)
    for (std::size_t b = 0; b < cc.size(); ++b) {
      const auto d = cc.degree(a, b);
      const bool ok = a == b ? d == -1 : c.cocluster[a][b] ? d == 0 : d > 0;
      rec.check(ok, [&] { return Json{{"a", a + 1}, {"b", b + 1}, {"degree", d}}; });
    }
}

void compat_sign_symmetry(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  for (std::size_t a = 0; a < cc.size(); ++a)
    for (std::size_t b = a + 1; b < cc.size(); ++b) {
      const auto dab = cc.degree(a, b), dba = cc.degree(b, a);
      rec.check((dab <= 0) == (dba <= 0) && (dab == 0) == (dba == 0),
                [&] { return Json{{"a", a + 1}, {"b", b + 1}, {"d_ab", dab}, {"d_ba", dba}}; });
    }
}

void compat_maximal_sets(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  std::set<std::vector<std::size_t>> clusters;
  for (std::size_t v = 0; v < c.tg.nodes().size(); ++v) {
    auto ids = cc.node_variables(v);
    std::sort(ids.begin(), ids.end());
    clusters.insert(ids);
  }
  const auto sets = cc.maximal_compatible_sets();
  for (const auto& s : sets)
    rec.check(s.size() == c.n && clusters.count(s) == 1, [&] { return Json{{"set", subset_json(s)}}; });
  rec.check(sets.size() == clusters.size(), [&] {
    return Json{{"maximal_sets", sets.size()}, {"clusters", clusters.size()}};
  });
}

void compat_exchange_pairs(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  const auto& nodes = c.tg.nodes();
  for (std::size_t u = 0; u < nodes.size(); ++u)
    for (std::size_t w = u + 1; w < nodes.size(); ++w) {
      const auto& cu = cc.node_variables(u);
      const auto& cw = cc.node_variables(w);
      std::vector<std::size_t> only_u, only_w;
      for (std::size_t a : cu)
        if (std::find(cw.begin(), cw.end(), a) == cw.end()) only_u.push_back(a);
      for (std::size_t a : cw)
        if (std::find(cu.begin(), cu.end(), a) == cu.end()) only_w.push_back(a);
      if (only_u.size() != 1) continue;
      const auto slot = static_cast<std::size_t>(std::find(cu.begin(), cu.end(), only_u[0]) - cu.begin());
      const Seed m = mutate_seed(nodes[u].seed, slot);
      rec.check(m.cluster()[slot] == cc.variables()[only_w[0]], [&] {
        return Json{{"first", at(nodes[u].seed)}, {"second", at(nodes[w].seed)}, {"slot", slot + 1}};
      });
    }
}

void compat_pairwise_global(Context& c, Recorder& rec) {
  const auto& cc = c.cc();
  if (cc.size() > 40) throw Skip{"too many cluster variables for subset enumeration"};
  small_subsets(cc.size(), c.n + 1, [&](const std::vector<std::size_t>& s) {
    if (!cc.is_compatible_set(s)) return;
    bool ok = s.size() <= c.n;
    if (ok) {
      try {
        cc.complete_to_cluster(s);
      } catch (const NotFound&) {
        ok = false;
      }
    }
    rec.check(ok, [&] { return Json{{"set", subset_json(s)}}; });
  });
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"laurent.ring_axioms", "Laurent ring structure", ring_axioms},
      {"laurent.division_roundtrip", "exact division (mutation step)", division_roundtrip},
      {"laurent.serialization_roundtrip", "canonical text form", serialization_roundtrip},
      {"laurent.tropical_laws", "tropical semifield axioms", tropical_laws},
      {"seed.mutation_involution", "mutation is an involution", mutation_involution},
      {"seed.symmetrizer_preserved", "mutation preserves the skew-symmetrizer", symmetrizer_preserved},
      {"seed.laurent_property", "Laurent phenomenon (Theorem 2.6)", laurent_property},
      {"seed.principal_positivity", "y-exponents and coefficients nonnegative (Theorem 2.6)", principal_positivity},
      {"seed.distinct_entries", "cluster entries pairwise distinct", distinct_entries},
      {"explorer.finite_closure", "exchange graph closes; both modes agree", finite_closure},
      {"explorer.witness_paths", "witness paths replay to their nodes", witness_paths},
      {"explorer.degree_regularity", "n edge slots per node, symmetric adjacency", degree_regularity},
      {"explorer.rank2_period", "rank-2 periodicity (pentagon for A2)", rank2_period},
      {"explorer.cluster_determines_seed", "seed determined by its cluster (Prop. 6.1)", cluster_determines_seed},
      {"explorer.connectedness", "seeds containing a set are connected (Theorem 6.2)", connectedness},
      {"explorer.labeled_vs_cluster_reachability", "I-reachability independent of labeling (Def. 4.5)",
       labeled_vs_cluster},
      {"invariants.dmatrix_recurrence", "D-matrix recurrence equals direct d-vectors (Prop. 2.10, Eq. 2)",
       dmatrix_recurrence_check},
      {"invariants.coefficient_independence", "d-vectors independent of coefficients (Prop. 2.10)",
       coefficient_independence},
      {"invariants.dvector_stability", "d_i unchanged by mu_k for i != k (Prop. 2.9)", dvector_stability},
      {"invariants.g_sign_coherence", "G-matrix rows sign-coherent (Theorem 2.8)", g_sign_coherence},
      {"invariants.g_unimodular", "det G_t = +-1 (Theorem 3.1)", g_unimodular},
      {"invariants.r_factorization", "G_s R = G_t (Theorem 3.1)", r_factorization},
      {"invariants.d_sign_coherence", "D-matrix rows and columns sign-coherent (Section 6)", d_sign_coherence},
      {"invariants.gvector_injectivity", "g-vectors determine cluster monomials (Theorem 3.2, Prop. 5.4)",
       gvector_injectivity},
      {"invariants.proper_laurent", "proper Laurent monomial property (Prop. 6.5)", proper_laurent},
      {"invariants.dvector_trichotomy", "d-vector trichotomy and positivity (Theorem 6.3)", dvector_trichotomy},
      {"gpairs.existence_uniqueness", "enough g-pairs, unique partner (Theorems 4.10, 5.5)", gpair_existence},
      {"gpairs.single_index_rows", "|I| = 1 gives +-row of G (Corollary 4.9)", gpair_rows},
      {"gpairs.dvector_classification", "r_ki sign matches d-vectors (Lemma 5.2)", gpair_lemma52},
      {"gpairs.monomial_matching", "projected g-vectors match (Def. 4.6)", gpair_monomials},
      {"compat.well_defined", "degree independent of witness (Theorem 6.3(i))", compat_well_defined},
      {"compat.trichotomy", "degree -1 / 0 / >0 trichotomy (Theorem 6.3(ii))", compat_trichotomy},
      {"compat.sign_symmetry", "sign pattern symmetric (Section 7 remark)", compat_sign_symmetry},
      {"compat.maximal_sets_are_clusters", "maximal compatible sets are clusters (Theorem 7.4)",
       compat_maximal_sets},
      {"compat.exchange_pairs", "clusters sharing n-1 entries differ by an exchange (Section 7)",
       compat_exchange_pairs},
      {"compat.pairwise_implies_global", "pairwise compatible sets lie in a cluster (Corollary 7.5)",
       compat_pairwise_global},
  };
  return all;
}

}  // namespace

VerificationReport verify_suite(const IntMatrix& bmat, const VerifyOptions& opts) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), opts.suite) == names.end())
    throw InvalidArgument("unknown suite '" + opts.suite + "'");
  if (opts.degree_bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  VerificationReport report;
  report.bmat = bmat;
  report.options = opts;
  Context ctx(bmat, opts);

  {
    PropertyResult explore_result;
    explore_result.name = "explorer.exploration";
    explore_result.reference = "breadth-first exploration in both modes";
    const auto t0 = clock::now();
    try {
      ctx.tg = explore(ctx.troot, opts.limit);
      ctx.pg = explore(ctx.proot, opts.limit);
      explore_result.checked = ctx.tg.nodes().size() + ctx.pg.nodes().size();
      if (!ctx.complete()) explore_result.note = "truncated at " + std::to_string(opts.limit) + " nodes";
    } catch (const ClusterError& e) {
      explore_result.status = Status::fail;
      explore_result.failures = 1;
      explore_result.note = e.what();
    }
    explore_result.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    const bool failed = explore_result.status == Status::fail;
    report.results.push_back(std::move(explore_result));
    if (failed) {
      report.seconds = std::chrono::duration<double>(clock::now() - start).count();
      return report;
    }
  }

  for (const auto& p : properties()) {
    const std::string name = p.name;
    if (opts.suite != "all" && name.substr(0, name.find('.')) != opts.suite) continue;
    PropertyResult r;
    r.name = name;
    r.reference = p.reference;
    Recorder rec(r);
    const auto t0 = clock::now();
    try {
      p.run(ctx, rec);
    } catch (const Skip& s) {
      r.status = Status::skipped;
      r.note = s.why;
    } catch (const TruncatedGraph& e) {
      r.status = Status::skipped;
      r.note = e.what();
    } catch (const ClusterError& e) {
      ++r.failures;
      if (r.note.empty()) r.note = e.what();
    }
    if (r.status != Status::skipped) r.status = r.failures ? Status::fail : Status::pass;
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    report.results.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

}  // namespace clusteralg
