#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitmc/error.hpp"
#include "orbitmc/graph.hpp"
#include "orbitmc/perm.hpp"

namespace orbitmc {

/// What a colored-graph vertex stands for in the source model, when known.
struct VertexProvenance {
  enum class Kind { plain, positive_literal, negative_literal, clause };
  Kind kind = Kind::plain;
  int index = -1;  // variable or clause index
};

/// Vertex-colored undirected graph. Color ids are dense (0..color_count-1).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Graph graph, std::vector<int> colors)
      : graph_(std::move(graph)), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != graph_.vertex_count())
      throw ContractError("color array size does not match vertex count");
    normalize_colors();
  }

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  const Graph& graph() const { return graph_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_count() const { return color_count_; }

  std::vector<VertexProvenance>& provenance() { return provenance_; }
  const std::vector<VertexProvenance>& provenance() const { return provenance_; }
  NameTable& names() { return names_; }
  const NameTable& names() const { return names_; }

 private:
  // Renumber colors to dense ids, ranked by (original id).
  void normalize_colors() {
    std::map<int, int> dense;
    for (int c : colors_) dense.emplace(c, 0);
    int next = 0;
    for (auto& [old_id, new_id] : dense) new_id = next++;
    for (int& c : colors_) c = dense[c];
    color_count_ = next;
  }

  Graph graph_;
  std::vector<int> colors_;
  int color_count_ = 0;
  std::vector<VertexProvenance> provenance_;
  NameTable names_;
};

/// Wraps a plain graph as a single-color colored graph.
inline ColoredGraph graph_to_colored(const Graph& g) {
  ColoredGraph cg(g, std::vector<int>(g.vertex_count(), 0));
  cg.names() = NameTable::default_names(g.vertex_count());
  return cg;
}

/// Coarsest equitable refinement of `initial`: any two vertices of equal color
/// end up with identical multisets of neighbor colors. Class ids are assigned
/// by sorting signatures, so the numbering is invariant under vertex
/// relabeling.
inline std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> coloring) {
  const int n = g.vertex_count();
  if (static_cast<int>(coloring.size()) != n)
    throw ContractError("refine_colors: coloring size mismatch");
  using Signature = std::vector<int>;  // old color, then sorted neighbor colors
  for (;;) {
    std::vector<Signature> sigs(n);
    for (int v = 0; v < n; ++v) {
      Signature& s = sigs[v];
      const auto& adj = g.graph().neighbors(v);
      s.reserve(adj.size() + 1);
      s.push_back(coloring[v]);
      for (int w : adj) s.push_back(coloring[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::map<Signature, int> ids;
    for (const auto& s : sigs) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = ids[sigs[v]];
    if (refined == coloring) return refined;
    coloring = std::move(refined);
  }
}

inline std::vector<int> refine_colors(const ColoredGraph& g) {
  return refine_colors(g, g.colors());
}

/// True iff same-colored vertices see identical neighbor-color multisets.
inline bool is_equitable(const ColoredGraph& g, const std::vector<int>& coloring) {
  const int n = g.vertex_count();
  std::map<int, std::vector<int>> seen;
  for (int v = 0; v < n; ++v) {
    std::vector<int> sig;
    for (int w : g.graph().neighbors(v)) sig.push_back(coloring[w]);
    std::sort(sig.begin(), sig.end());
    auto [it, fresh] = seen.emplace(coloring[v], sig);
    if (!fresh && it->second != sig) return false;
  }
  return true;
}

/// Colored graph file: `p cgraph <n> <m>`, `n <vertex> <color>` lines and
/// `e <u> <v>` lines, all 1-based. Unlisted vertices default to color 0.
inline ColoredGraph read_cgraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  Graph g;
  std::vector<int> colors;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      std::string kind;
      int m;
      if (!(ls >> kind >> n >> m) || kind != "cgraph" || n < 0)
        throw ParseError("bad problem line, expected 'p cgraph <n> <m>'", line_no);
      g = Graph(n);
      colors.assign(n, 0);
    } else if (head == "n") {
      int v, color;
      if (n < 0 || !(ls >> v >> color) || v < 1 || v > n)
        throw ParseError("bad vertex color line", line_no);
      colors[v - 1] = color;
    } else if (head == "e") {
      int u, v;
      if (n < 0 || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw ParseError("bad edge line", line_no);
      g.add_edge(u - 1, v - 1);
    } else {
      throw ParseError("unrecognized line '" + head + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing problem line");
  return ColoredGraph(std::move(g), std::move(colors));
}

inline void write_cgraph(std::ostream& out, const ColoredGraph& g) {
  out << "p cgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "n " << v + 1 << " " << g.colors()[v] << "\n";
  for (auto [u, v] : g.graph().edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

}  // namespace orbitmc
