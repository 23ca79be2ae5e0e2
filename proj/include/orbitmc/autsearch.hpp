#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitmc/colored_graph.hpp"
#include "orbitmc/group.hpp"
#include "orbitmc/perm.hpp"

namespace orbitmc {

/// Automorphism search output. `order` comes free from the stabilizer chain
/// (orbit size times stabilizer order per level); `order_exact` is false only
/// when the product overflows 64 bits.
struct AutResult {
  PermGroup group = PermGroup::trivial(0);
  std::uint64_t order = 1;
  bool order_exact = true;
};

namespace detail {

/// Individualization-refinement machinery shared by the automorphism search.
///
/// The search runs down a stabilizer chain: at each level pick the target cell
/// (first non-singleton class of smallest size), individualize its first
/// vertex v to get the stabilizer subgroup recursively, then look for one
/// coset representative v -> w per remaining cell vertex w, skipping w already
/// reachable from v under the generators found so far.
class AutSearch {
 public:
  explicit AutSearch(const ColoredGraph& g, std::size_t vertex_guard)
      : g_(g), n_(g.vertex_count()) {
    if (static_cast<std::size_t>(n_) > vertex_guard)
      throw ScaleGuardError("automorphism search guard: " + std::to_string(n_) +
                            " vertices exceeds " + std::to_string(vertex_guard));
    sorted_adj_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      sorted_adj_[v] = g_.graph().neighbors(v);
      std::sort(sorted_adj_[v].begin(), sorted_adj_[v].end());
    }
  }

  AutResult run() {
    AutResult result;
    std::uint64_t order = 1;
    bool exact = true;
    if (n_ > 0) chain_level(refine_colors(g_), order, exact);
    result.group = PermGroup(n_, std::move(generators_));
    result.order = order;
    result.order_exact = exact;
    return result;
  }

 private:
  bool adjacent(int u, int v) const {
    return std::binary_search(sorted_adj_[u].begin(), sorted_adj_[u].end(), v);
  }

  // First non-singleton class of smallest size; ties broken by smallest color
  // id. Returns members ascending, empty when the coloring is discrete.
  std::vector<int> target_cell(const std::vector<int>& coloring) const {
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n_; ++v) classes[coloring[v]].push_back(v);
    const std::vector<int>* best = nullptr;
    for (const auto& [color, members] : classes)
      if (members.size() > 1 && (best == nullptr || members.size() < best->size()))
        best = &members;
    return best == nullptr ? std::vector<int>{} : *best;
  }

  std::vector<int> individualized(std::vector<int> coloring, int v) const {
    coloring[v] = n_;  // fresh color; refinement renumbers densely
    return coloring;
  }

  // Joint equitable refinement of a source/target coloring pair with shared
  // class ids. Returns false when the class profiles diverge, i.e. no
  // automorphism can map one side onto the other.
  bool refine_pair(std::vector<int>& cs, std::vector<int>& ct) const {
    using Signature = std::vector<int>;
    for (;;) {
      std::vector<Signature> sig_s(n_), sig_t(n_);
      std::map<Signature, std::pair<int, int>> counts;
      for (int v = 0; v < n_; ++v) {
        sig_s[v] = signature(cs, v);
        sig_t[v] = signature(ct, v);
        counts[sig_s[v]].first++;
        counts[sig_t[v]].second++;
      }
      for (const auto& [sig, c] : counts)
        if (c.first != c.second) return false;
      std::map<Signature, int> ids;
      int next = 0;
      for (const auto& [sig, c] : counts) ids[sig] = next++;
      bool stable = true;
      for (int v = 0; v < n_; ++v) {
        int rs = ids[sig_s[v]], rt = ids[sig_t[v]];
        stable = stable && rs == cs[v] && rt == ct[v];
        cs[v] = rs;
        ct[v] = rt;
      }
      if (stable) return true;
    }
  }

  std::vector<int> signature(const std::vector<int>& coloring, int v) const {
    std::vector<int> s;
    s.reserve(sorted_adj_[v].size() + 1);
    s.push_back(coloring[v]);
    for (int w : sorted_adj_[v]) s.push_back(coloring[w]);
    std::sort(s.begin() + 1, s.end());
    return s;
  }

  bool is_discrete(const std::vector<int>& coloring) const {
    std::vector<char> seen(n_, 0);
    for (int c : coloring) {
      if (seen[c]) return false;
      seen[c] = 1;
    }
    return true;
  }

  // One automorphism mapping the source coloring onto the target coloring, or
  // nothing. Complete backtracking search, so a nullopt answer is definitive.
  std::optional<Permutation> find_mapping(std::vector<int> cs, std::vector<int> ct) const {
    if (!refine_pair(cs, ct)) return std::nullopt;
    if (is_discrete(cs)) {
      std::vector<int> by_color_t(n_);
      for (int v = 0; v < n_; ++v) by_color_t[ct[v]] = v;
      std::vector<int> images(n_);
      for (int v = 0; v < n_; ++v) images[v] = by_color_t[cs[v]];
      // refinement is only a necessary condition; verify edges for real
      for (auto [u, v] : g_.graph().edges())
        if (!adjacent(images[u], images[v])) return std::nullopt;
      return Permutation(std::move(images));
    }
    auto cell_s = target_cell(cs);
    int color = cs[cell_s.front()];
    int v = cell_s.front();
    for (int w = 0; w < n_; ++w) {
      if (ct[w] != color) continue;
      auto r = find_mapping(individualized(cs, v), individualized(ct, w));
      if (r.has_value()) return r;
    }
    return std::nullopt;
  }

  // Descends the stabilizer chain, accumulating generators and multiplying
  // orbit sizes into `order`.
  void chain_level(std::vector<int> coloring, std::uint64_t& order, bool& exact) {
    auto cell = target_cell(coloring);
    if (cell.empty()) return;  // discrete: trivial stabilizer
    int v = cell.front();
    chain_level(refine_colors(g_, individualized(coloring, v)), order, exact);

    UnionFind uf(n_);
    for (const auto& gen : generators_)
      for (int i = 0; i < n_; ++i) uf.unite(i, gen(i));
    std::uint64_t orbit_size = 1;
    for (std::size_t k = 1; k < cell.size(); ++k) {
      int w = cell[k];
      if (uf.find(v) == uf.find(w)) {
        ++orbit_size;
        continue;
      }
      auto rep = find_mapping(individualized(coloring, v), individualized(coloring, w));
      if (!rep.has_value()) continue;
      for (int i = 0; i < n_; ++i) uf.unite(i, (*rep)(i));
      generators_.push_back(std::move(*rep));
      ++orbit_size;
    }
    if (order > std::numeric_limits<std::uint64_t>::max() / orbit_size) {
      exact = false;
      order = std::numeric_limits<std::uint64_t>::max();
    } else {
      order *= orbit_size;
    }
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<int>> sorted_adj_;
  std::vector<Permutation> generators_;
};

}  // namespace detail

/// Color-preserving automorphism group of g, with its order. The generated
/// group equals the full automorphism group (checked against the brute-force
/// oracle in the test suite); the generator list is not necessarily minimal.
inline AutResult find_automorphisms(const ColoredGraph& g, std::size_t vertex_guard = 10'000) {
  return detail::AutSearch(g, vertex_guard).run();
}

inline PermGroup automorphism_generators(const ColoredGraph& g,
                                         std::size_t vertex_guard = 10'000) {
  return find_automorphisms(g, vertex_guard).group;
}

/// All color-preserving edge-preserving bijections by exhaustive search within
/// color classes. Oracle for the search above; guarded by the number of
/// candidate maps (product of class factorials).
inline std::vector<Permutation> brute_force_automorphisms(const ColoredGraph& g,
                                                          std::uint64_t candidate_guard =
                                                              10'000'000) {
  const int n = g.vertex_count();
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[g.colors()[v]].push_back(v);

  double candidates = 1;
  for (const auto& [color, members] : classes) {
    if (members.size() > 10)
      throw ScaleGuardError("brute force guard: color class larger than 10 vertices");
    for (std::size_t k = 2; k <= members.size(); ++k) candidates *= static_cast<double>(k);
    if (candidates > static_cast<double>(candidate_guard))
      throw ScaleGuardError("brute force guard: candidate map count exceeds " +
                            std::to_string(candidate_guard));
  }

  std::vector<std::vector<int>> cells;
  for (auto& [color, members] : classes) cells.push_back(members);
  std::vector<std::vector<int>> arrangement = cells;  // image order per cell

  std::vector<Permutation> found;
  for (;;) {
    std::vector<int> images(n);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t k = 0; k < cells[c].size(); ++k) images[cells[c][k]] = arrangement[c][k];
    bool ok = true;
    for (auto [u, v] : g.graph().edges()) {
      if (!g.graph().has_edge(images[u], images[v])) {
        ok = false;
        break;
      }
    }
    if (ok) found.emplace_back(std::move(images));

    // odometer over per-cell permutations
    std::size_t c = 0;
    while (c < cells.size() &&
           !std::next_permutation(arrangement[c].begin(), arrangement[c].end()))
      ++c;
    if (c == cells.size()) break;
  }
  return found;
}

}  // namespace orbitmc
