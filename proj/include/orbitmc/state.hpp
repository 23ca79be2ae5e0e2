#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "orbitmc/error.hpp"
#include "orbitmc/perm.hpp"

namespace orbitmc {

/// A binary assignment over n variables, n <= 64. Bit v is variable v;
/// the bitstring form puts variable 0 first (leftmost).
struct State {
  int n = 0;
  std::uint64_t bits = 0;

  State() = default;
  State(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
    if (n < 0 || n > 64) throw ContractError("state width out of range (0..64)");
    if (n < 64) bits &= (std::uint64_t{1} << n) - 1;
  }

  static State zeros(int n) { return State(n, 0); }

  static State parse(std::string_view s) {
    if (s.size() > 64) throw ParseError("state bitstring longer than 64");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw ParseError("state bitstring must contain only 0/1", -1, static_cast<int>(i));
    }
    return State(static_cast<int>(s.size()), bits);
  }

  bool test(int v) const { return (bits >> v) & 1u; }
  void set(int v, bool value) {
    if (value)
      bits |= std::uint64_t{1} << v;
    else
      bits &= ~(std::uint64_t{1} << v);
  }

  int popcount() const { return std::popcount(bits); }

  std::string to_string() const {
    std::string s(n, '0');
    for (int v = 0; v < n; ++v)
      if (test(v)) s[v] = '1';
    return s;
  }

  friend bool operator==(const State& a, const State& b) { return a.n == b.n && a.bits == b.bits; }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
  friend bool operator<(const State& a, const State& b) { return a.bits < b.bits; }
};

struct StateHash {
  std::size_t operator()(const State& s) const { return std::hash<std::uint64_t>{}(s.bits); }
};

/// Moves bit v to position g(v). The value travels with the point, so the
/// indicator state of a set S maps to the indicator of g(S).
inline std::uint64_t apply_to_mask(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << g(v);
  }
  return out;
}

/// y with y[g(v)] = x[v] for every point v. With left-to-right composition this
/// is a right action: act(h, act(g, x)) == act(compose(g, h), x).
inline State act_on_state(const Permutation& g, const State& x) {
  if (g.size() != x.n)
    throw ContractError("act_on_state: permutation degree " + std::to_string(g.size()) +
                        " does not match state width " + std::to_string(x.n));
  return State(x.n, apply_to_mask(g, x.bits));
}

}  // namespace orbitmc
