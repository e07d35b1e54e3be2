#include "clusteralg/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace clusteralg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("explore") {
  const auto r = run({"explore", "--b", "[[0,1],[-1,0]]"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.j();
  CHECK(j["nodes"].size() == 5);
  CHECK(j["truncated"] == false);
  CHECK(j["nodes"][0]["id"] == 0);
  CHECK(j["edges"][0].size() == 3);
  const auto el = run({"explore", "--b", "A3", "--edge-list"});
  CHECK(el.code == kExitOk);
  CHECK(el.out.rfind("# from to slot", 0) == 0);
}

TEST_CASE("descriptor forms") {
  CHECK(run({"explore", "--b", R"({"n":2,"B":[[0,1],[-2,0]],"mode":"trivial"})"}).j()["nodes"].size() == 6);
  CHECK(run({"explore", "--b", R"({"n":3,"B":[[0,1],[-2,0]]})"}).code == kExitUsage);
  CHECK(run({"explore", "--b", "[[0,1],[1,0]]"}).code == kExitUsage);
  CHECK(run({"explore", "--b", "no_such_file.json"}).code == kExitUsage);
  const std::string path = "cli_test_descriptor.json";
  std::ofstream(path) << R"({"B":[[0,1],[-3,0]]})";
  CHECK(run({"explore", "--b", path}).j()["nodes"].size() == 8);
  std::remove(path.c_str());
}

TEST_CASE("dvec") {
  const auto r = run({"dvec", "--b", "A2", "--path", "1,2", "--wrt-root", "--json"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["dvectors"] == json::parse("[[1,0],[1,1]]"));
  const auto w = run({"dvec", "--b", "A2", "--path", "", "--wrt", "1,2", "--json"});
  REQUIRE(w.code == kExitOk);
  CHECK(w.j()["dvectors"] == json::parse("[[1,1],[0,1]]"));
}

TEST_CASE("mutate, gvec, gmat, dmat") {
  const auto m = run({"mutate", "--b", "A2", "--path", "1"});
  REQUIRE(m.code == kExitOk);
  CHECK(m.j()["coefficients"] == json::parse("[[-1,0],[1,1]]"));
  CHECK(run({"gvec", "--b", "A2", "--path", "1"}).j()["gvectors"] == json::parse("[[-1,1],[0,1]]"));
  const auto g = run({"gmat", "--b", "A3", "--path", "1,2,3"}).j();
  CHECK((g["det"] == 1 || g["det"] == -1));
  const auto d = run({"dmat", "--b", "A2", "--path", "1,2"}).j();
  CHECK(d["D"] == d["D_recurrence"]);
}

TEST_CASE("gpair") {
  const auto r = run({"gpair", "--b", "A2", "--path", "1,2", "--subset", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["partner_path"] == json::parse("[1]"));
  CHECK(r.j()["Q"] == json::parse("[[1,1]]"));
  CHECK(r.j()["classification"] == json::parse(R"(["shared-elsewhere","disjoint"])"));
  CHECK(run({"gpair", "--b", "K2", "--subset", "1,2", "--limit", "20"}).code == kExitTruncated);
  CHECK(run({"gpair", "--b", "A2", "--subset", "0"}).code == kExitUsage);
  CHECK(run({"gpair", "--b", "A2", "--subset", "1", "--mode", "trivial"}).code == kExitUsage);
}

TEST_CASE("compat") {
  const auto d = run({"compat", "degree", "--b", "A2", "--index", "1", "--index", "5"});
  REQUIRE(d.code == kExitOk);
  CHECK(d.j()["degree"] == 1);
  const auto byat = run({"compat", "degree", "--b", "A2", "--at", ":1", "--at", "1,2:2"});
  REQUIRE(byat.code == kExitOk);
  CHECK(byat.j()["degree"] == 1);
  CHECK(run({"compat", "check", "--b", "A2", "--index", "3", "--index", "5"}).j()["compatible"] == true);
  CHECK(run({"compat", "sets", "--b", "A3"}).j()["maximal_compatible_sets"].size() == 14);
  const auto m = run({"compat", "matrix", "--b", "A2"}).j();
  CHECK(m["matrix"].size() == 5);
  CHECK(run({"compat", "sets", "--b", "K2", "--limit", "10"}).code == kExitTruncated);
  CHECK(run({"compat", "degree", "--b", "A2", "--index", "9", "--index", "1"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--b", "A2", "--no-timing"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.j();
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["schema_version"] == 1);
  CHECK(run({"verify", "--b", "A2", "--no-timing"}).out == r.out);
  CHECK(run({"verify", "--b", "A2", "--suite", "bogus"}).code == kExitUsage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"explore"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"mutate", "--b", "A2", "--path", "3"}).code == kExitUsage);
  CHECK(run({"explore", "--b", "A2", "--limit", "0"}).code == kExitUsage);
  const auto h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("explore") != std::string::npos);
  CHECK_FALSE(run({"explore", "--b", "A2", "--mode", "sideways"}).err.empty());
}

}
