#include "clusteralg/json_io.hpp"

#include "clusteralg/corpus.hpp"
#include "clusteralg/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace clusteralg {

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    IntVector row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
      row.push_back(v.get<std::int64_t>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("matrix rows have unequal length");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix is empty");
  return IntMatrix::from_rows(rows);
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

SeedDescriptor descriptor_from_json(const Json& j) {
  SeedDescriptor d;
  if (j.is_array()) {
    d.bmat = matrix_from_json(j);
  } else if (j.is_object()) {
    if (!j.contains("B")) throw ParseError("seed descriptor lacks \"B\"");
    d.bmat = matrix_from_json(j.at("B"));
    if (j.contains("mode")) {
      if (!j.at("mode").is_string()) throw ParseError("\"mode\" must be a string");
      d.mode = parse_mode(j.at("mode").get<std::string>());
    }
    if (j.contains("n")) {
      if (!j.at("n").is_number_integer()) throw ParseError("\"n\" must be an integer");
      if (j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(d.bmat.rows()))
        throw RankMismatch("\"n\" disagrees with the size of \"B\"");
    }
  } else {
    throw ParseError("seed descriptor must be an object or a matrix");
  }
  if (!d.bmat.is_square()) throw RankMismatch("exchange matrix must be square");
  return d;
}

}  // namespace

SeedDescriptor parse_descriptor(std::string_view text) {
  if (auto e = corpus_entry(text)) return {e->bmat, std::nullopt};
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty seed descriptor");
  if (body[first] != '[' && body[first] != '{') {
    std::ifstream in(body);
    if (!in) throw ParseError("cannot read seed descriptor file '" + body + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return descriptor_from_json(j);
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') s += c;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const std::string_view tok(s.data() + pos, end - pos);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("bad index '" + std::string(tok) + "' in list '" + std::string(text) + "'");
    if (v == 0) throw IndexOutOfRange("indices are 1-based");
    out.push_back(v - 1);
    pos = end + 1;
  }
  return out;
}

Json path_to_json(const Path& p) {
  Json out = Json::array();
  for (std::size_t k : p) out.push_back(k + 1);
  return out;
}

Json to_json(const Seed& s) {
  Json cluster = Json::array();
  for (const auto& x : s.cluster()) cluster.push_back(x.to_string());
  Json coeffs = Json::array();
  for (const auto& y : s.coeffs()) {
    Json e = Json::array();
    for (Exponent v : y.yexp()) e.push_back(v);
    coeffs.push_back(std::move(e));
  }
  return Json{{"mode", to_string(s.mode())},
              {"path", path_to_json(s.path())},
              {"cluster", std::move(cluster)},
              {"coefficients", std::move(coeffs)},
              {"B", to_json(s.bmat())}};
}

Json to_json(const ExchangeGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    const auto& node = g.nodes()[i];
    Json cluster = Json::array();
    for (const auto& x : node.seed.cluster()) cluster.push_back(x.to_string());
    nodes.push_back(Json{{"id", i}, {"key", node.key}, {"path", path_to_json(node.seed.path())},
                         {"cluster", std::move(cluster)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.from, e.slot + 1, e.to}));
  return Json{{"n", g.rank()},
              {"labeled", g.labeled()},
              {"truncated", g.truncated()},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string edge_list(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "# from to slot (" << g.nodes().size() << " nodes" << (g.truncated() ? ", truncated" : "") << ")\n";
  for (const auto& e : g.edges()) out << e.from << ' ' << e.to << ' ' << e.slot + 1 << '\n';
  return out.str();
}

Json to_json(const GPairCertificate& c) {
  Json subset = Json::array();
  for (std::size_t i : c.subset) subset.push_back(i + 1);
  Json partner_cluster = Json::array();
  for (const auto& x : c.partner.cluster()) partner_cluster.push_back(x.to_string());
  return Json{{"source_path", path_to_json(c.source.path())},
              {"subset", std::move(subset)},
              {"partner_path", path_to_json(c.partner_path())},
              {"partner_cluster", std::move(partner_cluster)},
              {"Q", to_json(c.qmat)}};
}

Json to_json(const DegreeReport& r, const Compatibility& c) {
  const auto& w = c.graph().nodes()[r.witness];
  return Json{{"a", c.variables()[r.a].to_string()},
              {"b", c.variables()[r.b].to_string()},
              {"a_index", r.a + 1},
              {"b_index", r.b + 1},
              {"degree", r.degree},
              {"witness", Json{{"node", r.witness}, {"path", path_to_json(w.seed.path())}, {"slot", r.slot + 1},
                               {"key", w.key}}}};
}

}  // namespace clusteralg
