#pragma once

#include <stdexcept>
#include <string>

#include "semirand/hypergraph.hpp"

namespace semirand {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON document formats:
//   hypergraph       {"n":int,"s":int,"edges":[[int,...],...]}
//                    (an edge may instead be {"sq":[...],"ci":[...],"t":int}
//                     to carry the square/circle split and the timestamp)
//   oriented pattern {"k":int,"edges":[{"from":int,"to":int},...]}
//   leading-edge     {"k":int,"s":int,"edges":[{"verts":[...],"lead":int},...]}
// List order is edge order everywhere.

Hypergraph parse_hypergraph_json(const std::string& text);
std::string to_json(const Hypergraph& g);

OrientedOrderedGraph parse_oriented_json(const std::string& text);
std::string to_json(const OrientedOrderedGraph& g);

LeadingEdgeHypergraph parse_leading_json(const std::string& text);
std::string to_json(const LeadingEdgeHypergraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Hypergraph load_hypergraph(const std::string& path);

}  // namespace semirand
