#pragma once

// Shared model fixtures for the test suites.

#include <random>
#include <sstream>

#include "orbitmc/clause_set.hpp"
#include "orbitmc/colored_graph.hpp"
#include "orbitmc/graph.hpp"
#include "orbitmc/group.hpp"

namespace testsupport {

// The running two-clause example: {(a v ~c, 0.5), (b v ~c, 0.5)}.
inline orbitmc::WeightedClauseSet two_clause_set() {
  std::stringstream ss(
      "p wcnf 3 2\n"
      "c n 1 a\n"
      "c n 2 b\n"
      "c n 3 c\n"
      "0.5 1 -3 0\n"
      "0.5 2 -3 0\n");
  return orbitmc::read_wcnf(ss);
}

inline orbitmc::PermGroup grid3_group() {
  auto names = orbitmc::NameTable::default_names(9);
  return orbitmc::PermGroup(9, {orbitmc::parse_cycles("(a c)(d f)(g i)", 9, &names),
                                orbitmc::parse_cycles("(a i)(b f)(d h)", 9, &names)});
}

// Random colored graph within the brute-force oracle guard.
inline orbitmc::ColoredGraph random_colored_graph(std::mt19937_64& rng, int max_vertices = 8) {
  int n = 1 + static_cast<int>(rng() % max_vertices);
  orbitmc::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 100 < 40) g.add_edge(u, v);
  int palette = 1 + static_cast<int>(rng() % 3);
  std::vector<int> colors(n);
  for (int& c : colors) c = static_cast<int>(rng() % palette);
  return orbitmc::ColoredGraph(std::move(g), std::move(colors));
}

// Random clause set within the Theorem-1 oracle scale (<= 4 vars, <= 4 clauses).
inline orbitmc::WeightedClauseSet random_clause_set(std::mt19937_64& rng) {
  orbitmc::WeightedClauseSet s;
  s.variable_count = 1 + static_cast<int>(rng() % 4);
  int nclauses = static_cast<int>(rng() % 5);
  const double weights[] = {0.5, 0.7};
  for (int j = 0; j < nclauses; ++j) {
    orbitmc::WeightedClause clause;
    int len = 1 + static_cast<int>(rng() % std::min(3, s.variable_count));
    std::vector<int> vars(s.variable_count);
    for (int v = 0; v < s.variable_count; ++v) vars[v] = v;
    std::shuffle(vars.begin(), vars.end(), rng);
    for (int k = 0; k < len; ++k) clause.literals.push_back({vars[k], rng() % 2 == 0});
    switch (rng() % 3) {
      case 0: clause.weight = weights[0]; break;
      case 1: clause.weight = weights[1]; break;
      default: clause.weight = std::nullopt; break;
    }
    s.clauses.push_back(std::move(clause));
    // occasionally duplicate a clause to exercise multiset semantics
    if (rng() % 5 == 0) s.clauses.push_back(s.clauses.back());
  }
  for (int v = 0; v < s.variable_count; ++v)
    s.variable_names.set(v, "x" + std::to_string(v + 1));
  return s;
}

}  // namespace testsupport
