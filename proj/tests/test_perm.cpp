#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbitmc/perm.hpp"
#include "orbitmc/state.hpp"

using namespace orbitmc;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("compose follows left-to-right application") {
  // (0 1) o (0 1) = identity
  auto t = parse_cycles("(0 1)", 2);
  REQUIRE(compose(t, t) == Permutation::identity(2));

  // (0 1 2) o (0 1 2) = (0 2 1)
  auto c = parse_cycles("(0 1 2)", 3);
  REQUIRE(compose(c, c) == parse_cycles("(0 2 1)", 3));

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    auto p = random_perm(9, rng);
    REQUIRE(compose(p, p.inverse()) == Permutation::identity(9));
    REQUIRE(compose(p.inverse(), p) == Permutation::identity(9));
  }
}

TEST_CASE("compose rejects mismatched domains") {
  REQUIRE_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), ContractError);
}

TEST_CASE("image tables are validated") {
  REQUIRE_THROWS_AS(Permutation(std::vector<int>{0, 0}), ContractError);
  REQUIRE_THROWS_AS(Permutation(std::vector<int>{1, 2}), ContractError);
}

TEST_CASE("cycle parsing matches the paper's notation") {
  auto names = NameTable::default_names(9);

  // 3-grid generator set uses letters a..i
  auto g = parse_cycles("(a c)(d f)(g i)", 9, &names);
  REQUIRE(g(0) == 2);
  REQUIRE(g(2) == 0);
  REQUIRE(g(3) == 5);
  REQUIRE(g(5) == 3);
  REQUIRE(g(6) == 8);
  REQUIRE(g(8) == 6);
  REQUIRE(g(1) == 1);
  REQUIRE(g(4) == 4);
  REQUIRE(g(7) == 7);

  // (b c) fixes the other seven points
  auto t = parse_cycles("(b c)", 9, &names);
  int moved = 0;
  for (int i = 0; i < 9; ++i) moved += t(i) != i;
  REQUIRE(moved == 2);

  REQUIRE(parse_cycles("", 9, &names) == Permutation::identity(9));
  REQUIRE(parse_cycles("()", 9) == Permutation::identity(9));
}

TEST_CASE("cycle parsing reports errors with position") {
  auto names = NameTable::default_names(4);
  REQUIRE_THROWS_AS(parse_cycles("(a a)", 4, &names), ParseError);
  REQUIRE_THROWS_AS(parse_cycles("(a z)", 4, &names), ParseError);
  REQUIRE_THROWS_AS(parse_cycles("(a b", 4, &names), ParseError);
  REQUIRE_THROWS_AS(parse_cycles("a b)", 4, &names), ParseError);
  try {
    parse_cycles("(a b)(c c)", 4, &names);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.column() == 8);  // byte offset of the repeated point
  }
}

TEST_CASE("format/parse round trip") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    auto p = random_perm(12, rng);
    REQUIRE(parse_cycles(format_cycles(p), 12) == p);
  }
  REQUIRE(format_cycles(Permutation::identity(5)) == "()");
}

TEST_CASE("act_on_state moves values with points") {
  // identity
  State x = State::parse("101");
  REQUIRE(act_on_state(Permutation::identity(3), x) == x);

  // bit swap: g=(0 1), x=10 -> 01
  REQUIRE(act_on_state(parse_cycles("(0 1)", 2), State::parse("10")) == State::parse("01"));

  // 3-grid generator on the indicator of {a} -> indicator of {c}
  auto names = NameTable::default_names(9);
  auto g = parse_cycles("(a c)(d f)(g i)", 9, &names);
  State a_only(9, 1);
  State c_only(9, std::uint64_t{1} << 2);
  REQUIRE(act_on_state(g, a_only) == c_only);

  REQUIRE_THROWS_AS(act_on_state(Permutation::identity(4), State::parse("101")), ContractError);
}

TEST_CASE("act_on_state is a right action under compose") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = random_perm(10, rng);
    auto h = random_perm(10, rng);
    State x(10, rng() & 0x3ff);
    REQUIRE(act_on_state(h, act_on_state(g, x)) == act_on_state(compose(g, h), x));
  }
}

TEST_CASE("bijection invariant survives compose/inverse/parse on random inputs") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng() % 64);
    auto p = random_perm(n, rng);
    auto q = random_perm(n, rng);
    for (const auto& r : {compose(p, q), p.inverse(), parse_cycles(format_cycles(p), n)}) {
      std::vector<char> seen(n, 0);
      for (int i = 0; i < n; ++i) {
        REQUIRE(!seen[r(i)]);
        seen[r(i)] = 1;
      }
    }
  }
}

TEST_CASE("state bitstrings put variable 0 first") {
  State s = State::parse("100");
  REQUIRE(s.test(0));
  REQUIRE(!s.test(1));
  REQUIRE(s.to_string() == "100");
  REQUIRE_THROWS_AS(State::parse("10x"), ParseError);
}
