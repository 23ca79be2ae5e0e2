#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitmc/error.hpp"

namespace orbitmc {

/// A bijection on {0,...,n-1}, stored as its image table.
///
/// Composition is left-to-right: compose(p, q) maps i to q(p(i)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity on n points.
  explicit Permutation(int n) : images_(n) {
    for (int i = 0; i < n; ++i) images_[i] = i;
  }

  /// Takes ownership of an image table; validates that it is a bijection.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw ContractError("permutation image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) { return Permutation(n); }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);  // already a bijection, skip re-validation
    return p;
  }

  /// Nontrivial cycles, each starting at its minimum point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back(j);
        j = images_[j];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = p.size();
    for (int v : p.images()) h = h * 1000003u + static_cast<std::size_t>(v);
    return h;
  }
};

/// result(i) = q(p(i)): apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw ContractError("compose: domain sizes differ (" + std::to_string(p.size()) + " vs " +
                        std::to_string(q.size()) + ")");
  std::vector<int> images(p.size());
  for (int i = 0; i < p.size(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

/// Bidirectional point-index <-> label table. Labels must be unique.
class NameTable {
 public:
  NameTable() = default;

  explicit NameTable(std::vector<std::string> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) set(static_cast<int>(i), labels[i]);
  }

  /// Single letters a.. for n <= 26, otherwise v0, v1, ...
  static NameTable default_names(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
      labels[i] = n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i);
    return NameTable(std::move(labels));
  }

  void set(int index, const std::string& label) {
    if (index >= static_cast<int>(labels_.size())) labels_.resize(index + 1);
    labels_[index] = label;
    index_.emplace(label, index);
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::string& label(int index) const { return labels_[index]; }

  /// -1 when the label is unknown.
  int index(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

/// Parses cycle notation: "(a c)(d f)(g i)". Points not mentioned are fixed.
/// Tokens are labels from `names` when given, else decimal point indices.
/// The empty string (or "()") denotes the identity.
inline Permutation parse_cycles(std::string_view text, int n, const NameTable* names = nullptr) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<char> used(n, 0);

  auto fail = [&](const std::string& what, std::size_t pos) -> void {
    throw ParseError(what, -1, static_cast<int>(pos));
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text[pos] != '(' && text[pos] != ')')
        ++pos;
      std::string_view tok = text.substr(start, pos - start);
      int point = -1;
      if (names != nullptr) point = names->index(tok);
      if (point < 0) {
        bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        });
        if (numeric) point = std::stoi(std::string(tok));
        if (point < 0 || point >= n) fail("unknown point '" + std::string(tok) + "'", start);
      }
      if (used[point]) fail("point '" + std::string(tok) + "' repeated", start);
      used[point] = 1;
      cycle.push_back(point);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

/// Formats a permutation as a product of disjoint cycles; identity prints as "()".
inline std::string format_cycles(const Permutation& p, const NameTable* names = nullptr) {
  auto point = [&](int i) {
    return names != nullptr && i < names->size() ? names->label(i) : std::to_string(i);
  };
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k > 0) out += ' ';
      out += point(cyc[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace orbitmc
