#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "orbitmc/colored_graph.hpp"
#include "support/fixtures.hpp"

using namespace orbitmc;

TEST_CASE("graph_to_colored wraps with a single color") {
  auto cg = graph_to_colored(grid_graph(3));
  REQUIRE(cg.vertex_count() == 9);
  REQUIRE(cg.edge_count() == 12);
  REQUIRE(cg.color_count() == 1);

  auto complete = graph_to_colored(complete_graph_model(3));
  REQUIRE(complete.edge_count() == 36);

  auto empty = graph_to_colored(Graph(4));
  REQUIRE(empty.edge_count() == 0);
}

TEST_CASE("color ids are normalized to a dense range") {
  Graph g(3);
  g.add_edge(0, 1);
  ColoredGraph cg(g, {5, 9, 5});
  REQUIRE(cg.color_count() == 2);
  REQUIRE(cg.colors() == std::vector<int>{0, 1, 0});
}

TEST_CASE("refinement leaves the complete graph untouched") {
  auto cg = graph_to_colored(complete_graph_model(2));
  auto refined = refine_colors(cg);
  REQUIRE(refined == std::vector<int>(4, 0));
  REQUIRE(is_equitable(cg, refined));
}

TEST_CASE("refinement splits a path by degree") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto cg = graph_to_colored(g);
  auto refined = refine_colors(cg);
  REQUIRE(refined[0] == refined[2]);
  REQUIRE(refined[1] != refined[0]);
  REQUIRE(is_equitable(cg, refined));
}

TEST_CASE("refinement separates the unshared variable of the two-clause set") {
  auto cg = build_colored_graph(testsupport::two_clause_set());
  auto refined = refine_colors(cg);
  // positive literal vertices: a=0, b=2, c=4
  REQUIRE(refined[0] == refined[2]);
  REQUIRE(refined[4] != refined[0]);
  // negative side follows: ~a=1, ~b=3, ~c=5
  REQUIRE(refined[1] == refined[3]);
  REQUIRE(refined[5] != refined[1]);
  REQUIRE(is_equitable(cg, refined));
}

TEST_CASE("refinement is equitable and relabel-invariant on random graphs") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    auto cg = testsupport::random_colored_graph(rng);
    auto refined = refine_colors(cg);
    REQUIRE(is_equitable(cg, refined));

    // relabel vertices, refine, and map back: the partition must be identical
    int n = cg.vertex_count();
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Graph h(n);
    for (auto [u, v] : cg.graph().edges()) h.add_edge(relabel[u], relabel[v]);
    std::vector<int> hcolors(n);
    for (int v = 0; v < n; ++v) hcolors[relabel[v]] = cg.colors()[v];
    auto refined_h = refine_colors(ColoredGraph(std::move(h), std::move(hcolors)));
    for (int v = 0; v < n; ++v) REQUIRE(refined_h[relabel[v]] == refined[v]);
  }
}

TEST_CASE("cgraph file round trip") {
  auto cg = build_colored_graph(testsupport::two_clause_set());
  std::stringstream ss;
  write_cgraph(ss, cg);
  auto back = read_cgraph(ss);
  REQUIRE(back.vertex_count() == cg.vertex_count());
  REQUIRE(back.colors() == cg.colors());
  REQUIRE(back.graph().edges() == cg.graph().edges());
}

TEST_CASE("cgraph parse errors") {
  std::stringstream bad("p cgraph 2 1\nn 3 0\n");
  REQUIRE_THROWS_AS(read_cgraph(bad), ParseError);
  std::stringstream junk("p cgraph 2 0\nq 1 2\n");
  REQUIRE_THROWS_AS(read_cgraph(junk), ParseError);
}
