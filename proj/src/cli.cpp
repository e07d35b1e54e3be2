#include "clusteralg/cli.hpp"

#include "clusteralg/compat.hpp"
#include "clusteralg/errors.hpp"
#include "clusteralg/explorer.hpp"
#include "clusteralg/gpairs.hpp"
#include "clusteralg/invariants.hpp"
#include "clusteralg/json_io.hpp"
#include "clusteralg/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace clusteralg {

namespace {

struct Common {
  std::string b;
  std::string mode;
  bool compact = false;
};

struct Options {
  Common common;
  std::string path;
  std::string wrt;
  bool wrt_root = false;
  std::string subset;
  std::size_t limit = kDefaultNodeLimit;
  bool edge_list = false;
  std::vector<std::string> at;
  std::vector<std::size_t> index;
  bool audit = false;
  std::string suite = "all";
  int degree_bound = 3;
  bool no_timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--b", c.b, "Seed descriptor: JSON literal, matrix, corpus name (A2, A3, ...) or file")
      ->required();
  sub->add_option("--mode", c.mode, "Coefficient mode: principal or trivial")
      ->check(CLI::IsMember({"principal", "trivial"}));
  sub->add_flag("--json", c.compact, "Compact single-line JSON instead of indented");
}

Seed root_seed(const Common& c, CoefficientMode fallback) {
  const SeedDescriptor d = parse_descriptor(c.b);
  CoefficientMode mode = fallback;
  if (d.mode) mode = *d.mode;
  if (!c.mode.empty()) mode = parse_mode(c.mode);
  return Seed::initial(d.bmat, mode);
}

Seed along(const Seed& root, const std::string& path) {
  const auto p = parse_index_list(path);
  return mutate_along(root, p);
}

void emit(std::ostream& out, const Json& j, const Common& c) { out << j.dump(c.compact ? -1 : 2) << '\n'; }

std::size_t resolve_at(const std::string& ref, const Seed& root, const Compatibility& cc) {
  const auto colon = ref.rfind(':');
  if (colon == std::string::npos) throw ParseError("expected <path>:<slot>, got '" + ref + "'");
  const Seed s = along(root, ref.substr(0, colon));
  const auto slot = parse_index_list(ref.substr(colon + 1));
  if (slot.size() != 1) throw ParseError("expected a single slot in '" + ref + "'");
  if (slot[0] >= s.rank()) throw IndexOutOfRange("slot out of range in '" + ref + "'");
  return cc.index_of(s.cluster()[slot[0]]);
}

std::vector<std::size_t> resolve_vars(const Options& o, const Seed& root, const Compatibility& cc) {
  std::vector<std::size_t> out;
  for (const auto& r : o.at) out.push_back(resolve_at(r, root, cc));
  for (std::size_t i : o.index) {
    if (i == 0 || i > cc.size())
      throw IndexOutOfRange("variable index " + std::to_string(i) + " outside 1.." + std::to_string(cc.size()));
    out.push_back(i - 1);
  }
  return out;
}

Json var_list(const std::vector<std::size_t>& ids, const Compatibility& cc) {
  Json j = Json::array();
  for (std::size_t a : ids) j.push_back(Json{{"index", a + 1}, {"poly", cc.variables()[a].to_string()}});
  return j;
}

Json columns(const std::vector<IntVector>& cols) {
  Json j = Json::array();
  for (const auto& c : cols) j.push_back(Json(c));
  return j;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  emit(out, to_json(along(root_seed(o.common, CoefficientMode::principal), o.path)), o.common);
  return kExitOk;
}

int cmd_explore(const Options& o, std::ostream& out) {
  const ExchangeGraph g = explore(root_seed(o.common, CoefficientMode::principal), o.limit);
  if (o.edge_list)
    out << edge_list(g);
  else
    emit(out, to_json(g), o.common);
  return kExitOk;
}

int cmd_dvec(const Options& o, std::ostream& out) {
  const Seed root = root_seed(o.common, CoefficientMode::trivial);
  const Seed s = along(root, o.path);
  if (o.wrt_root && !o.wrt.empty()) throw InvalidArgument("--wrt-root and --wrt are exclusive");
  const Seed wrt = o.wrt.empty() ? root : along(root, o.wrt);
  std::vector<IntVector> cols;
  for (const auto& x : expand_in(s, wrt, CoefficientMode::trivial)) cols.push_back(dvector_direct(x).entries);
  emit(out, Json{{"path", path_to_json(s.path())}, {"wrt_path", path_to_json(wrt.path())}, {"dvectors", columns(cols)}},
       o.common);
  return kExitOk;
}

int cmd_gvec(const Options& o, std::ostream& out) {
  const Seed s = along(root_seed(o.common, CoefficientMode::principal), o.path);
  if (s.mode() != CoefficientMode::principal) throw PreconditionViolated("g-vectors need principal coefficients");
  std::vector<IntVector> cols;
  for (const auto& x : s.cluster()) cols.push_back(gvector(x).entries);
  emit(out, Json{{"path", path_to_json(s.path())}, {"gvectors", columns(cols)}}, o.common);
  return kExitOk;
}

int cmd_gmat(const Options& o, std::ostream& out) {
  const Seed s = along(root_seed(o.common, CoefficientMode::principal), o.path);
  const IntMatrix g = gmatrix(s);
  emit(out, Json{{"path", path_to_json(s.path())}, {"G", to_json(g)}, {"det", g.determinant().convert_to<std::int64_t>()}}, o.common);
  return kExitOk;
}

int cmd_dmat(const Options& o, std::ostream& out, std::ostream& err) {
  const Seed s = along(root_seed(o.common, CoefficientMode::trivial), o.path);
  const IntMatrix direct = dmatrix_direct(s);
  const IntMatrix rec = dmatrix_recurrence(s.path(), s.root_bmat());
  emit(out, Json{{"path", path_to_json(s.path())}, {"D", to_json(direct)}, {"D_recurrence", to_json(rec)}},
       o.common);
  if (direct != rec) {
    err << "error: D-matrix recurrence disagrees with direct d-vectors\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_gpair(const Options& o, std::ostream& out) {
  const Seed source = along(root_seed(o.common, CoefficientMode::principal), o.path);
  const auto subset = parse_index_list(o.subset);
  const GPairCertificate cert = find_gpair(source, subset, o.limit);
  Json j = to_json(cert);
  if (cert.subset.size() + 1 == source.rank()) {
    Json cls = Json::array();
    for (std::size_t i = 0; i < source.rank(); ++i) cls.push_back(to_string(gpair_dvector_classify(cert, i)));
    j["classification"] = std::move(cls);
  }
  emit(out, j, o.common);
  return kExitOk;
}

int cmd_compat(const std::string& what, const Options& o, std::ostream& out, std::ostream& err) {
  const Seed root = root_seed(o.common, CoefficientMode::trivial);
  const ExchangeGraph g = explore(root, o.limit);
  const Compatibility cc(g);
  if (what == "degree") {
    const auto vars = resolve_vars(o, root, cc);
    if (vars.size() != 2) throw InvalidArgument("compat degree needs exactly two variables (--at or --index)");
    Json j = to_json(cc.report(vars[0], vars[1]), cc);
    if (o.audit) {
      Json all = Json::array();
      bool agree = true;
      const auto reps = cc.audit(vars[0], vars[1]);
      for (const auto& r : reps) {
        agree &= r.degree == reps.front().degree;
        all.push_back(to_json(r, cc));
      }
      j["audit"] = std::move(all);
      j["audit_agrees"] = agree;
      emit(out, j, o.common);
      if (!agree) {
        err << "error: compatibility degree depends on the witness cluster\n";
        return kExitViolation;
      }
      return kExitOk;
    }
    emit(out, j, o.common);
    return kExitOk;
  }
  if (what == "check") {
    const auto vars = resolve_vars(o, root, cc);
    Json j{{"variables", var_list(vars, cc)}, {"compatible", cc.is_compatible_set(vars)}};
    if (cc.is_compatible_set(vars)) {
      const std::size_t node = cc.complete_to_cluster(vars);
      j["cluster"] = Json{{"node", node}, {"path", path_to_json(g.nodes()[node].seed.path())},
                          {"variables", var_list(cc.node_variables(node), cc)}};
    }
    emit(out, j, o.common);
    return kExitOk;
  }
  if (what == "sets") {
    Json sets = Json::array();
    for (const auto& s : cc.maximal_compatible_sets()) sets.push_back(var_list(s, cc));
    emit(out, Json{{"maximal_compatible_sets", std::move(sets)}}, o.common);
    return kExitOk;
  }
  Json vars = Json::array();
  for (const auto& x : cc.variables()) vars.push_back(x.to_string());
  emit(out, Json{{"variables", std::move(vars)}, {"matrix", to_json(cc.degree_matrix())}}, o.common);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Seed root = root_seed(o.common, CoefficientMode::principal);
  VerifyOptions vo;
  vo.limit = o.limit;
  vo.degree_bound = o.degree_bound;
  vo.suite = o.suite;
  const VerificationReport r = verify_suite(root.bmat(), vo);
  emit(out, r.to_json(!o.no_timing), o.common);
  return r.count(Status::fail) ? kExitViolation : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cluster algebra computations: mutation, exchange graphs, d-/g-vectors, g-pairs, "
               "compatibility degrees"};
  app.name("clusteralg");
  app.require_subcommand(1);
  Options o;

  auto* mutate = app.add_subcommand("mutate", "Seed reached by a mutation path");
  add_common(mutate, o.common);
  mutate->add_option("--path", o.path, "Mutation directions k1,k2,... (1-based)");

  auto* expl = app.add_subcommand("explore", "Exchange graph up to seed equivalence");
  add_common(expl, o.common);
  expl->add_option("--limit", o.limit, "Node limit")->check(CLI::PositiveNumber);
  expl->add_flag("--edge-list", o.edge_list, "Plain edge list instead of JSON");

  auto* dvec = app.add_subcommand("dvec", "d-vectors of the cluster at --path");
  add_common(dvec, o.common);
  dvec->add_option("--path", o.path, "Mutation path of the cluster");
  dvec->add_flag("--wrt-root", o.wrt_root, "With respect to the initial cluster (default)");
  dvec->add_option("--wrt", o.wrt, "With respect to the cluster at this path");

  auto* gvec = app.add_subcommand("gvec", "g-vectors of the cluster at --path");
  add_common(gvec, o.common);
  gvec->add_option("--path", o.path, "Mutation path");

  auto* gmat = app.add_subcommand("gmat", "G-matrix at --path");
  add_common(gmat, o.common);
  gmat->add_option("--path", o.path, "Mutation path");

  auto* dmat = app.add_subcommand("dmat", "D-matrix at --path, direct and by recurrence");
  add_common(dmat, o.common);
  dmat->add_option("--path", o.path, "Mutation path");

  auto* gpair = app.add_subcommand("gpair", "g-pair partner of the seed at --path along --subset");
  add_common(gpair, o.common);
  gpair->add_option("--path", o.path, "Mutation path of the source seed");
  gpair->add_option("--subset", o.subset, "Index subset i1,i2,... (1-based)")->required();
  gpair->add_option("--limit", o.limit, "Node limit for the restricted graph")->check(CLI::PositiveNumber);

  auto* compat = app.add_subcommand("compat", "Compatibility degrees");
  compat->require_subcommand(1);
  std::string compat_what;
  for (const char* what : {"degree", "check", "sets", "matrix"}) {
    const char* help = std::string_view(what) == "degree"  ? "d(a,b) for two variables"
                       : std::string_view(what) == "check" ? "Compatibility of a set and a cluster containing it"
                       : std::string_view(what) == "sets"  ? "All maximal compatible sets"
                                                           : "Degree table in discovery order";
    auto* sub = compat->add_subcommand(what, help);
    add_common(sub, o.common);
    sub->add_option("--limit", o.limit, "Node limit")->check(CLI::PositiveNumber);
    if (std::string_view(what) == "degree" || std::string_view(what) == "check") {
      sub->add_option("--at", o.at, "Variable as <path>:<slot>, e.g. 1,2:1 or :2 (repeatable)");
      sub->add_option("--index", o.index, "Variable by 1-based discovery index (repeatable; after --at)");
    }
    if (std::string_view(what) == "degree") sub->add_flag("--audit", o.audit, "Recompute through every witness");
    sub->callback([&compat_what, what] { compat_what = what; });
  }

  auto* verify = app.add_subcommand("verify", "Run the theorem checks and print a report");
  add_common(verify, o.common);
  verify->add_option("--suite", o.suite, "all, laurent, seed, explorer, invariants, gpairs or compat");
  verify->add_option("--limit", o.limit, "Node limit")->check(CLI::PositiveNumber);
  verify->add_option("--degree", o.degree_bound, "Monomial degree bound for sweeps")->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-timing", o.no_timing, "Omit timing fields");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mutate->parsed()) return cmd_mutate(o, out);
    if (expl->parsed()) return cmd_explore(o, out);
    if (dvec->parsed()) return cmd_dvec(o, out);
    if (gvec->parsed()) return cmd_gvec(o, out);
    if (gmat->parsed()) return cmd_gmat(o, out);
    if (dmat->parsed()) return cmd_dmat(o, out, err);
    if (gpair->parsed()) return cmd_gpair(o, out);
    if (compat->parsed()) return cmd_compat(compat_what, o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const TruncatedGraph& e) {
    err << "error: " << e.what() << '\n';
    return kExitTruncated;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const ClusterError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace clusteralg
