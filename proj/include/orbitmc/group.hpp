#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orbitmc/error.hpp"
#include "orbitmc/perm.hpp"
#include "orbitmc/state.hpp"

namespace orbitmc {

/// A permutation group given by a finite generating set. The empty generating
/// set is legal and denotes the trivial group.
class PermGroup {
 public:
  explicit PermGroup(int domain_size, std::vector<Permutation> generators = {})
      : domain_size_(domain_size) {
    for (auto& g : generators) {
      if (g.size() != domain_size_)
        throw ContractError("generator degree " + std::to_string(g.size()) +
                            " does not match domain size " + std::to_string(domain_size_));
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
  }

  static PermGroup trivial(int domain_size) { return PermGroup(domain_size); }

  int domain_size() const { return domain_size_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

 private:
  int domain_size_;
  std::vector<Permutation> generators_;
};

/// Disjoint classes covering {0..n-1}; classes ordered by minimum member,
/// members ascending within a class.
struct OrbitPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  std::size_t size() const { return classes.size(); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

inline OrbitPartition partition_from_union_find(UnionFind& uf, int n) {
  OrbitPartition part;
  part.class_of.assign(n, -1);
  std::unordered_map<int, int> root_to_class;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(r, static_cast<int>(part.classes.size())).first;
      part.classes.emplace_back();
    }
    part.class_of[i] = it->second;
    part.classes[it->second].push_back(i);
  }
  return part;
}

}  // namespace detail

/// Orbit partition of the point set under the generated group (union-find
/// closure over the generators).
inline OrbitPartition point_orbits(const PermGroup& group) {
  detail::UnionFind uf(group.domain_size());
  for (const auto& g : group.generators())
    for (int i = 0; i < group.domain_size(); ++i) uf.unite(i, g(i));
  return detail::partition_from_union_find(uf, group.domain_size());
}

/// Exact orbit of x under the generated group, by BFS closure. Sorted by mask.
/// This is the uniformity oracle for the samplers.
inline std::vector<State> state_orbit_enumerate(const PermGroup& group, const State& x,
                                                std::size_t guard = 1'000'000) {
  if (group.domain_size() != x.n)
    throw ContractError("state_orbit_enumerate: domain/state width mismatch");
  std::unordered_set<std::uint64_t> seen{x.bits};
  std::vector<std::uint64_t> queue{x.bits};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint64_t cur = queue[head];
    for (const auto& g : group.generators()) {
      std::uint64_t next = apply_to_mask(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > guard)
          throw ScaleGuardError("state orbit exceeds guard of " + std::to_string(guard));
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  std::vector<State> orbit;
  orbit.reserve(queue.size());
  for (auto mask : queue) orbit.emplace_back(x.n, mask);
  return orbit;
}

/// Every element of the generated group, by BFS closure over generator
/// right-multiplication. Oracle scale only.
inline std::vector<Permutation> enumerate_elements(const PermGroup& group,
                                                   std::size_t guard = 10'000'000) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> elements{Permutation::identity(group.domain_size())};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : group.generators()) {
      Permutation next = compose(elements[head], g);
      if (seen.insert(next).second) {
        if (seen.size() > guard)
          throw ScaleGuardError("group order exceeds guard of " + std::to_string(guard));
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

inline std::uint64_t group_order_oracle(const PermGroup& group, std::size_t guard = 10'000'000) {
  return enumerate_elements(group, guard).size();
}

inline bool group_contains(const std::vector<Permutation>& elements, const Permutation& g) {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

/// Checks |G| == |orbit(x)| * |stabilizer(x)| with all three sets enumerated.
inline bool verify_orbit_stabilizer(const PermGroup& group, const State& x,
                                    std::size_t guard = 10'000'000) {
  auto elements = enumerate_elements(group, guard);
  std::uint64_t stabilizer = 0;
  for (const auto& g : elements)
    if (apply_to_mask(g, x.bits) == x.bits) ++stabilizer;
  std::uint64_t orbit = state_orbit_enumerate(group, x, guard).size();
  return elements.size() == orbit * stabilizer;
}

/// Generating-set text format: a `domain <n>` header, optional
/// `name <index> <label>` lines, then one permutation per line in cycle
/// notation. `#` starts a comment.
struct GeneratorFile {
  PermGroup group = PermGroup::trivial(0);
  NameTable names;
  bool has_names = false;
};

inline GeneratorFile read_generators(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  NameTable names;
  bool has_names = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "domain") {
      if (!(ls >> n) || n < 0) throw ParseError("bad domain line", line_no);
    } else if (head == "name") {
      int idx;
      std::string label;
      if (n < 0) throw ParseError("name line before domain line", line_no);
      if (!(ls >> idx >> label) || idx < 0 || idx >= n)
        throw ParseError("bad name line", line_no);
      names.set(idx, label);
      has_names = true;
    } else {
      if (n < 0) throw ParseError("permutation before domain line", line_no);
      try {
        gens.push_back(parse_cycles(line, n, has_names ? &names : nullptr));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
  }
  if (n < 0) throw ParseError("missing domain line");
  GeneratorFile out;
  out.group = PermGroup(n, std::move(gens));
  out.names = std::move(names);
  out.has_names = has_names;
  return out;
}

inline void write_generators(std::ostream& out, const PermGroup& group,
                             const NameTable* names = nullptr) {
  out << "domain " << group.domain_size() << "\n";
  if (names != nullptr)
    for (int i = 0; i < group.domain_size() && i < names->size(); ++i)
      out << "name " << i << " " << names->label(i) << "\n";
  for (const auto& g : group.generators()) out << format_cycles(g, names) << "\n";
}

}  // namespace orbitmc
