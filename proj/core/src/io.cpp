#include "semirand/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semirand {

namespace {

using json = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

long long require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<long long>();
}

std::vector<Vertex> int_list(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertex ids");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("vertex id must be an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph_json(const std::string& text) {
  json j = parse_or_throw(text);
  const int n = static_cast<int>(require_int(j, "n"));
  const int s = static_cast<int>(require_int(j, "s"));
  Hypergraph g(n, s);
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing edge list");
  long long fallback_time = 0;
  try {
    for (const auto& e : j["edges"]) {
      ++fallback_time;
      if (e.is_array()) {
        g.add_edge(int_list(e), {}, fallback_time);
      } else if (e.is_object()) {
        std::vector<Vertex> sq = int_list(e.at("sq"));
        std::vector<Vertex> ci = e.contains("ci") ? int_list(e.at("ci")) : std::vector<Vertex>{};
        long long t = e.contains("t") ? e.at("t").get<long long>() : fallback_time;
        g.add_edge(std::move(sq), std::move(ci), t);
      } else {
        throw ParseError("edge must be an array or an object");
      }
    }
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  } catch (const std::out_of_range& ex) {
    throw ParseError(ex.what());
  }
  return g;
}

std::string to_json(const Hypergraph& g) {
  // Plain form when the document carries no process information, full form
  // otherwise.
  bool plain = true;
  long long expect = 0;
  for (const EdgeRecord& e : g.edges()) {
    ++expect;
    if (!e.circle.empty() || e.time != expect) { plain = false; break; }
  }
  json j;
  j["n"] = g.n();
  j["s"] = g.s();
  j["edges"] = json::array();
  for (const EdgeRecord& e : g.edges()) {
    if (plain) {
      j["edges"].push_back(e.all());
    } else {
      json rec;
      rec["sq"] = e.square;
      rec["ci"] = e.circle;
      rec["t"] = e.time;
      j["edges"].push_back(rec);
    }
  }
  return j.dump();
}

OrientedOrderedGraph parse_oriented_json(const std::string& text) {
  json j = parse_or_throw(text);
  OrientedOrderedGraph g;
  g.k = static_cast<int>(require_int(j, "k"));
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing edge list");
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) throw ParseError("oriented edge must be an object");
    g.edges.push_back({static_cast<int>(require_int(e, "from")),
                       static_cast<int>(require_int(e, "to"))});
  }
  try {
    g.validate();
  } catch (const std::exception& ex) {
    throw ParseError(ex.what());
  }
  return g;
}

std::string to_json(const OrientedOrderedGraph& g) {
  json j;
  j["k"] = g.k;
  j["edges"] = json::array();
  for (const auto& a : g.edges) j["edges"].push_back({{"from", a.from}, {"to", a.to}});
  return j.dump();
}

LeadingEdgeHypergraph parse_leading_json(const std::string& text) {
  json j = parse_or_throw(text);
  LeadingEdgeHypergraph g;
  g.k = static_cast<int>(require_int(j, "k"));
  g.s = static_cast<int>(require_int(j, "s"));
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing edge list");
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) throw ParseError("leading edge must be an object");
    LeadingEdgeHypergraph::Edge edge;
    edge.verts = int_list(e.at("verts"));
    std::sort(edge.verts.begin(), edge.verts.end());
    edge.lead = static_cast<int>(require_int(e, "lead"));
    g.edges.push_back(std::move(edge));
  }
  try {
    g.validate();
  } catch (const std::exception& ex) {
    throw ParseError(ex.what());
  }
  return g;
}

std::string to_json(const LeadingEdgeHypergraph& g) {
  json j;
  j["k"] = g.k;
  j["s"] = g.s;
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"verts", e.verts}, {"lead", e.lead}});
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Hypergraph load_hypergraph(const std::string& path) {
  return parse_hypergraph_json(read_file(path));
}

}  // namespace semirand
