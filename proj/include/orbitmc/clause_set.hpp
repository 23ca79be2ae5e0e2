#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitmc/autsearch.hpp"
#include "orbitmc/colored_graph.hpp"
#include "orbitmc/error.hpp"
#include "orbitmc/group.hpp"

namespace orbitmc {

struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.variable == b.variable && a.negated == b.negated;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    return std::pair(a.variable, a.negated) < std::pair(b.variable, b.negated);
  }
};

/// A clause with either a finite weight or the HARD marker (nullopt, w = inf).
struct WeightedClause {
  std::vector<Literal> literals;
  std::optional<double> weight;  // nullopt = HARD

  bool hard() const { return !weight.has_value(); }
};

/// A set of partially weighted clauses with optional evidence assignments.
struct WeightedClauseSet {
  NameTable variable_names;
  int variable_count = 0;
  std::vector<WeightedClause> clauses;
  std::map<int, bool> evidence;  // variable -> observed value

  void validate() const {
    for (const auto& clause : clauses) {
      for (std::size_t i = 0; i < clause.literals.size(); ++i) {
        const auto& lit = clause.literals[i];
        if (lit.variable < 0 || lit.variable >= variable_count)
          throw ContractError("literal variable out of range");
        for (std::size_t j = i + 1; j < clause.literals.size(); ++j)
          if (lit == clause.literals[j]) throw ContractError("duplicate literal in clause");
      }
    }
    for (const auto& [var, value] : evidence)
      if (var < 0 || var >= variable_count) throw ContractError("evidence variable out of range");
  }
};

/// Weighted clause file: `p wcnf <vars> <clauses>` header; one clause per line
/// `<weight|H> <+-lit>... 0`; optional `e <var> <0|1>` evidence lines; `c`
/// comments, with `c n <var> <label>` naming variables. Variables are 1-based.
inline WeightedClauseSet read_wcnf(std::istream& in) {
  WeightedClauseSet s;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<std::pair<int, std::string>> pending_names;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string tag;
      int var;
      std::string label;
      if (ls >> tag && tag == "n" && ls >> var >> label) pending_names.emplace_back(var, label);
      continue;
    }
    if (head == "p") {
      std::string kind;
      if (!(ls >> kind >> s.variable_count >> declared_clauses) || kind != "wcnf" ||
          s.variable_count < 0)
        throw ParseError("bad header, expected 'p wcnf <vars> <clauses>'", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before header", line_no);
    if (head == "e") {
      int var, value;
      if (!(ls >> var >> value) || var < 1 || var > s.variable_count || (value != 0 && value != 1))
        throw ParseError("bad evidence line", line_no);
      s.evidence[var - 1] = value == 1;
      continue;
    }
    WeightedClause clause;
    if (head == "H" || head == "h") {
      clause.weight = std::nullopt;
    } else {
      try {
        std::size_t used = 0;
        clause.weight = std::stod(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
      } catch (const std::exception&) {
        throw ParseError("bad clause weight '" + head + "'", line_no);
      }
    }
    int lit;
    bool terminated = false;
    while (ls >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      int var = std::abs(lit);
      if (var > s.variable_count) throw ParseError("literal out of range", line_no);
      clause.literals.push_back({var - 1, lit < 0});
    }
    if (!terminated) throw ParseError("clause line missing terminating 0", line_no);
    s.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ParseError("missing 'p wcnf' header");
  for (int v = 0; v < s.variable_count; ++v)
    s.variable_names.set(v, "x" + std::to_string(v + 1));
  for (auto& [var, label] : pending_names) {
    if (var < 1 || var > s.variable_count) throw ParseError("name comment variable out of range");
    s.variable_names.set(var - 1, label);
  }
  s.validate();
  if (static_cast<int>(s.clauses.size()) != declared_clauses)
    throw ParseError("header declared " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(s.clauses.size()));
  return s;
}

inline void write_wcnf(std::ostream& out, const WeightedClauseSet& s) {
  out << "p wcnf " << s.variable_count << " " << s.clauses.size() << "\n";
  for (int v = 0; v < s.variable_count; ++v)
    out << "c n " << v + 1 << " " << s.variable_names.label(v) << "\n";
  for (const auto& clause : s.clauses) {
    if (clause.hard())
      out << "H";
    else
      out << *clause.weight;
    for (const auto& lit : clause.literals)
      out << " " << (lit.negated ? -(lit.variable + 1) : lit.variable + 1);
    out << " 0\n";
  }
  for (const auto& [var, value] : s.evidence) out << "e " << var + 1 << " " << (value ? 1 : 0) << "\n";
}

/// Colored graph G(S): two vertices per variable joined by an edge (colors 0
/// negated / 1 unnegated), one vertex per clause colored by its weight (one
/// color per distinct finite weight, one for HARD), edges from each clause to
/// the literals occurring in it. Evidence recolors the positive-literal vertex
/// of the observed variable with a fresh true/false color.
inline ColoredGraph build_colored_graph(const WeightedClauseSet& s) {
  s.validate();
  const int nv = s.variable_count;
  const int nc = static_cast<int>(s.clauses.size());
  Graph graph(2 * nv + nc);
  std::vector<int> colors(2 * nv + nc, 0);
  std::vector<VertexProvenance> provenance(2 * nv + nc);
  NameTable names;

  std::map<double, int> weight_color;
  for (const auto& clause : s.clauses)
    if (!clause.hard()) weight_color.emplace(*clause.weight, 0);
  int next_color = 2;
  for (auto& [w, color] : weight_color) color = next_color++;
  const int hard_color = next_color++;
  const int true_color = next_color++;
  const int false_color = next_color++;

  auto pos_vertex = [](int var) { return 2 * var; };
  auto neg_vertex = [](int var) { return 2 * var + 1; };

  for (int v = 0; v < nv; ++v) {
    colors[pos_vertex(v)] = 1;
    colors[neg_vertex(v)] = 0;
    auto it = s.evidence.find(v);
    if (it != s.evidence.end()) colors[pos_vertex(v)] = it->second ? true_color : false_color;
    graph.add_edge(pos_vertex(v), neg_vertex(v));
    provenance[pos_vertex(v)] = {VertexProvenance::Kind::positive_literal, v};
    provenance[neg_vertex(v)] = {VertexProvenance::Kind::negative_literal, v};
    names.set(pos_vertex(v), "v_" + s.variable_names.label(v));
    names.set(neg_vertex(v), "v_~" + s.variable_names.label(v));
  }
  for (int j = 0; j < nc; ++j) {
    const auto& clause = s.clauses[j];
    int cv = 2 * nv + j;
    colors[cv] = clause.hard() ? hard_color : weight_color.at(*clause.weight);
    provenance[cv] = {VertexProvenance::Kind::clause, j};
    names.set(cv, "v_f" + std::to_string(j + 1));
    for (const auto& lit : clause.literals)
      graph.add_edge(cv, lit.negated ? neg_vertex(lit.variable) : pos_vertex(lit.variable));
  }

  ColoredGraph cg(std::move(graph), std::move(colors));
  cg.provenance() = std::move(provenance);
  cg.names() = std::move(names);
  return cg;
}

/// Projects a vertex group on G(S) down to its action on variables. Colors
/// force literal-type preservation, so the projection is well defined; a
/// non-bijective projection signals a bug upstream.
inline PermGroup restrict_to_variables(const PermGroup& group, const ColoredGraph& g) {
  const auto& provenance = g.provenance();
  if (provenance.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ContractError("restrict_to_variables requires clause-graph provenance");
  std::vector<int> pos_vertex_of_var;
  std::vector<int> var_of_vertex(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (provenance[v].kind == VertexProvenance::Kind::positive_literal) {
      var_of_vertex[v] = provenance[v].index;
      if (provenance[v].index >= static_cast<int>(pos_vertex_of_var.size()))
        pos_vertex_of_var.resize(provenance[v].index + 1, -1);
      pos_vertex_of_var[provenance[v].index] = v;
    }
  const int nv = static_cast<int>(pos_vertex_of_var.size());

  std::vector<Permutation> projected;
  for (const auto& gen : group.generators()) {
    std::vector<int> images(nv, -1);
    for (int var = 0; var < nv; ++var) {
      int image_vertex = gen(pos_vertex_of_var[var]);
      int image_var = image_vertex >= 0 ? var_of_vertex[image_vertex] : -1;
      if (image_var < 0)
        throw ContractError("projection maps a literal vertex outside the literal set");
      images[var] = image_var;
    }
    try {
      projected.emplace_back(std::move(images));
    } catch (const ContractError&) {
      throw ContractError("projected variable action is not a bijection");
    }
  }
  return PermGroup(nv, std::move(projected));
}

/// Orbit partition of G(S) vertices, labeled by provenance.
struct OrbitReport {
  std::vector<std::vector<int>> variable_classes;
  std::vector<std::vector<int>> feature_classes;
};

inline OrbitReport orbit_report(const PermGroup& group, const ColoredGraph& g) {
  const auto& provenance = g.provenance();
  if (provenance.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ContractError("orbit_report requires clause-graph provenance");
  auto part = point_orbits(group);
  OrbitReport report;
  for (const auto& cls : part.classes) {
    std::vector<int> vars, features;
    for (int v : cls) {
      if (provenance[v].kind == VertexProvenance::Kind::positive_literal)
        vars.push_back(provenance[v].index);
      else if (provenance[v].kind == VertexProvenance::Kind::clause)
        features.push_back(provenance[v].index);
    }
    if (!vars.empty()) report.variable_classes.push_back(std::move(vars));
    if (!features.empty()) report.feature_classes.push_back(std::move(features));
  }
  auto by_min = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.front() < b.front();
  };
  std::sort(report.variable_classes.begin(), report.variable_classes.end(), by_min);
  std::sort(report.feature_classes.begin(), report.feature_classes.end(), by_min);
  return report;
}

/// Renames variables through sigma; clause order is preserved. Used to state
/// the correspondence property: an automorphism maps S to an identical set.
inline WeightedClauseSet apply_to_clauses(const Permutation& sigma, const WeightedClauseSet& s) {
  if (sigma.size() != s.variable_count)
    throw ContractError("variable permutation degree mismatch");
  WeightedClauseSet out = s;
  for (auto& clause : out.clauses)
    for (auto& lit : clause.literals) lit.variable = sigma(lit.variable);
  std::map<int, bool> evidence;
  for (const auto& [var, value] : s.evidence) evidence[sigma(var)] = value;
  out.evidence = std::move(evidence);
  return out;
}

/// Canonical multiset view: clauses as (weight-or-HARD, sorted literals),
/// sorted. Two sets are identical iff these compare equal.
inline std::vector<std::pair<std::pair<bool, double>, std::vector<Literal>>> clause_multiset(
    const WeightedClauseSet& s) {
  std::vector<std::pair<std::pair<bool, double>, std::vector<Literal>>> canon;
  for (const auto& clause : s.clauses) {
    auto lits = clause.literals;
    std::sort(lits.begin(), lits.end());
    canon.emplace_back(std::pair(clause.hard(), clause.hard() ? 0.0 : *clause.weight),
                       std::move(lits));
  }
  std::sort(canon.begin(), canon.end());
  return canon;
}

inline bool same_clause_multiset(const WeightedClauseSet& a, const WeightedClauseSet& b) {
  return a.variable_count == b.variable_count && clause_multiset(a) == clause_multiset(b) &&
         a.evidence == b.evidence;
}

}  // namespace orbitmc
