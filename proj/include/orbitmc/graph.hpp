#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitmc/error.hpp"

namespace orbitmc {

/// Simple undirected graph over vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n = 0) : adjacency_(n) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }

  void add_edge(int u, int v) {
    if (u == v) throw ContractError("self-loop rejected");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
      throw ContractError("edge endpoint out of range");
    if (has_edge(u, v)) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool has_edge(int u, int v) const {
    const auto& adj = adjacency_[u];
    return std::find(adj.begin(), adj.end(), v) != adj.end();
  }

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& adj : adjacency_) d = std::max(d, static_cast<int>(adj.size()));
    return d;
  }

  /// Neighborhood bitmask per vertex; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (vertex_count() > 64) throw ScaleGuardError("adjacency masks require <= 64 vertices");
    std::vector<std::uint64_t> masks(vertex_count(), 0);
    for (auto [u, v] : edges_) {
      masks[u] |= std::uint64_t{1} << v;
      masks[v] |= std::uint64_t{1} << u;
    }
    return masks;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

/// The k x k lattice, vertices numbered row-major.
inline Graph grid_graph(int k) {
  if (k < 2) throw ContractError("grid_graph requires k >= 2");
  Graph g(k * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      int v = r * k + c;
      if (c + 1 < k) g.add_edge(v, v + 1);
      if (r + 1 < k) g.add_edge(v, v + k);
    }
  return g;
}

/// k+1 cliques of size k-1, the lowest-numbered vertex of each clique joined
/// to a single hub vertex. Cliques occupy vertices block-wise; the hub is last.
inline Graph connected_cliques(int k) {
  if (k < 2) throw ContractError("connected_cliques requires k >= 2");
  const int cliques = k + 1;
  const int size = k - 1;
  const int hub = cliques * size;
  Graph g(hub + 1);
  for (int c = 0; c < cliques; ++c) {
    int base = c * size;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) g.add_edge(base + i, base + j);
    g.add_edge(base, hub);
  }
  return g;
}

/// Complete graph on k^2 vertices.
inline Graph complete_graph_model(int k) {
  if (k < 2) throw ContractError("complete_graph_model requires k >= 2");
  const int n = k * k;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// DIMACS-like format: `p edge <n> <m>` then `e <u> <v>` lines, 1-based.
inline Graph read_dimacs_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int declared_edges = -1;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> declared_edges) || kind != "edge" || n < 0)
        throw ParseError("bad problem line, expected 'p edge <n> <m>'", line_no);
      g = Graph(n);
    } else if (head == "e") {
      if (n < 0) throw ParseError("edge before problem line", line_no);
      int u, v;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw ParseError("bad edge line", line_no);
      g.add_edge(u - 1, v - 1);
    } else {
      throw ParseError("unrecognized line '" + head + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing problem line");
  return g;
}

inline void write_dimacs_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

}  // namespace orbitmc
