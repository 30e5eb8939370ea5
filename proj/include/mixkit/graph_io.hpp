#pragma once

#include <iosfwd>
#include <string>

#include "mixkit/graph.hpp"

namespace mixkit {

// Text format: header "N M", then M lines "u v c" (loops as "u u c").
// Conductances print with 17 significant digits so the round trip is exact.
void write_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& in);

void write_graph_file(const std::string& path, const WeightedGraph& g);
WeightedGraph read_graph_file(const std::string& path);

// Label sidecar: one "index<TAB>label" line per labeled vertex.
void write_labels(std::ostream& out, const WeightedGraph& g);
std::vector<std::string> read_labels(std::istream& in, Index n);
void write_labels_file(const std::string& path, const WeightedGraph& g);

// FNV-1a over the canonical serialization; stable content fingerprint.
std::string graph_content_hash(const WeightedGraph& g);

}  // namespace mixkit
