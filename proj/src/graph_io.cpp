#include "mixkit/graph_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mixkit {

namespace {
std::string format_weight(double c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", c);
  return buf;
}
}  // namespace

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight(e.c) << '\n';
}

WeightedGraph read_graph(std::istream& in) {
  Index n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("read_graph: bad header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long k = 0; k < m; ++k) {
    Index u, v;
    double c;
    if (!(in >> u >> v >> c)) throw std::runtime_error("read_graph: truncated edge list");
    edges.push_back({u, v, c});
  }
  return WeightedGraph(n, std::move(edges));
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_graph(out, g);
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_labels(std::ostream& out, const WeightedGraph& g) {
  for (Index v = 0; v < g.num_vertices(); ++v)
    if (!g.label(v).empty()) out << v << '\t' << g.label(v) << '\n';
}

std::vector<std::string> read_labels(std::istream& in, Index n) {
  std::vector<std::string> labels(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("read_labels: missing tab");
    Index v = std::stoi(line.substr(0, tab));
    if (v < 0 || v >= n) throw std::runtime_error("read_labels: index out of range");
    labels[v] = line.substr(tab + 1);
  }
  return labels;
}

void write_labels_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_labels(out, g);
}

std::string graph_content_hash(const WeightedGraph& g) {
  std::ostringstream canon;
  write_graph(canon, g);
  const std::string bytes = canon.str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

}  // namespace mixkit
