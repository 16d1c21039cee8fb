#include <cmath>

#include "doctest.h"
#include "strep/spectral.hpp"

using namespace strep;

TEST_CASE("growth matrix, characteristic polynomial, automaton agree") {
  for (int d = 2; d <= 6; ++d) {
    SquareMatrix m = tandem_atleast1_matrix(d);
    REQUIRE(m.n == static_cast<std::size_t>(d));
    for (std::size_t i = 0; i + 1 < m.n; ++i) {
      for (std::size_t j = 0; j < m.n; ++j) {
        std::uint64_t expected = (j == i || j == i + 1) ? 1 : 0;
        CHECK(m.at(i, j) == expected);
      }
    }
    for (std::size_t j = 0; j < m.n; ++j) CHECK(m.at(m.n - 1, j) == 1);

    LabeledGraph g = tandem_atleast1_automaton(d);
    CHECK(g.vertex_count == static_cast<std::size_t>(d));
    CHECK(adjacency_matrix(g) == m);
    REQUIRE(g.starts.size() == 1);
    CHECK(g.starts[0] == 0);

    // The characteristic root and the matrix radius describe one number.
    Polynomial p = tandem_atleast1_characteristic(d);
    double root = largest_real_root(p);
    CHECK(std::abs(spectral_radius(m) - (1.0 + root)) < 1e-9);
  }
  CHECK_THROWS_AS(tandem_atleast1_matrix(1), std::invalid_argument);
}

TEST_CASE("root finding hits pinned values") {
  // d = 2: x^2 - 1 has the exact root 1, and the bracket rule preserves it.
  CHECK(largest_real_root(tandem_atleast1_characteristic(2)) == 1.0);

  // x^3 - x - 1: the plastic number.
  double plastic = largest_real_root(tandem_atleastk_characteristic(2));
  CHECK(std::abs(plastic - 1.3247179572447460) < 1e-11);

  // x^2 - x - 1: the golden ratio.
  double golden = largest_real_root(tandem_atleastk_characteristic(1));
  CHECK(std::abs(golden - 1.6180339887498949) < 1e-11);

  // Bracket precondition: p must change sign over [lo, hi].
  Polynomial always_positive{{1.0, 0.0, 1.0}};  // x^2 + 1
  CHECK_THROWS_AS(largest_real_root(always_positive), std::invalid_argument);
}

TEST_CASE("spectral radius on known matrices") {
  SquareMatrix one(1);
  one.at(0, 0) = 2;
  CHECK(spectral_radius(one) == doctest::Approx(2.0).epsilon(1e-9));

  SquareMatrix ones(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones.at(i, j) = 1;
  CHECK(spectral_radius(ones) == doctest::Approx(2.0).epsilon(1e-9));

  SquareMatrix perm(3);  // cyclic permutation: radius 1
  perm.at(0, 1) = 1;
  perm.at(1, 2) = 1;
  perm.at(2, 0) = 1;
  CHECK(spectral_radius(perm) == doctest::Approx(1.0).epsilon(1e-9));

  SquareMatrix zero(3);
  CHECK(spectral_radius(zero) == doctest::Approx(0.0).epsilon(1e-9));

  // Block triangular: the radius comes from the dominant diagonal block.
  SquareMatrix tri(3);
  tri.at(0, 0) = 1;
  tri.at(0, 1) = 5;
  tri.at(0, 2) = 7;
  tri.at(1, 1) = 3;
  tri.at(2, 2) = 2;
  CHECK(spectral_radius(tri) == doctest::Approx(3.0).epsilon(1e-9));

  CHECK(spectral_radius(tandem_atleast1_matrix(3)) ==
        doctest::Approx(2.3247179572447460).epsilon(1e-9));

  // Fibonacci matrix [[1,1],[1,0]]: golden ratio.
  SquareMatrix fib(2);
  fib.at(0, 0) = 1;
  fib.at(0, 1) = 1;
  fib.at(1, 0) = 1;
  CHECK(spectral_radius(fib) == doctest::Approx(1.6180339887498949).epsilon(1e-9));
}

TEST_CASE("sliding-window graphs have full out-degree and radius sigma") {
  for (int sigma = 2; sigma <= 3; ++sigma) {
    for (int order = 1; order <= 2; ++order) {
      LabeledGraph g = debruijn_graph(sigma, order);
      std::size_t expected_vertices = 1;
      for (int i = 0; i <= order; ++i) expected_vertices *= sigma;
      REQUIRE(g.vertex_count == expected_vertices);
      CHECK(g.edges.size() == expected_vertices * sigma);
      CHECK(g.starts.size() == expected_vertices);
      REQUIRE(g.vertex_words.size() == expected_vertices);
      for (const Word& w : g.vertex_words)
        CHECK(w.size() == static_cast<std::size_t>(order) + 1);

      std::vector<std::size_t> out_degree(g.vertex_count, 0);
      for (const LabeledEdge& e : g.edges) {
        ++out_degree[e.from];
        // The edge label is the last symbol of the window slid into.
        CHECK(g.vertex_words[e.to].back() == e.label);
        // Window overlap: target's prefix equals source's suffix.
        CHECK(g.vertex_words[e.to].prefix(order) ==
              g.vertex_words[e.from].suffix(order));
      }
      for (std::size_t deg : out_degree)
        CHECK(deg == static_cast<std::size_t>(sigma));

      CHECK(spectral_radius(adjacency_matrix(g)) ==
            doctest::Approx(static_cast<double>(sigma)).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(debruijn_graph(2, 20), std::invalid_argument);  // 4096 cap
}

TEST_CASE("path counting is exact and overflow-guarded") {
  LabeledGraph g = debruijn_graph(2, 1);  // 4 vertices, out-degree 2
  CHECK(count_labeled_paths(g, 0) == 4);
  CHECK(count_labeled_paths(g, 1) == 8);
  CHECK(count_labeled_paths(g, 5) == 128);  // 4 * 2^5
  CHECK_THROWS_AS(count_labeled_paths(g, 100), std::overflow_error);
}

TEST_CASE("residue pruning removes edges and lowers the radius") {
  // Order matching the modulus (window length d+1): every window realizes
  // every residue, so forbidding any residue empties the graph and the
  // radius collapses below sigma.
  LabeledGraph g = debruijn_graph(2, 2);
  LabeledGraph pruned = prune_debruijn(g, {0}, 2);
  CHECK(pruned.vertex_count == g.vertex_count);
  CHECK(pruned.edges.empty());
  CHECK(pruned.starts.empty());
  CHECK(spectral_radius(adjacency_matrix(pruned)) ==
        doctest::Approx(0.0).epsilon(1e-9));

  LabeledGraph g3 = debruijn_graph(2, 3);
  CHECK(prune_debruijn(g3, {0, 1}, 3).edges.empty());

  // Short windows realize only small residues: length-2 windows see pair
  // distances 0 and +-1 only, so residues {0,1,4} mod 5 cover them all and
  // nothing is pruned.
  LabeledGraph tiny = debruijn_graph(2, 1);
  LabeledGraph kept = prune_debruijn(tiny, {0, 1, 4}, 5);
  CHECK(kept.edges.size() == tiny.edges.size());
  CHECK(kept.starts.size() == tiny.starts.size());

  CHECK_THROWS_AS(prune_debruijn(g, {0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(prune_debruijn(g, {2}, 2), std::invalid_argument);
}

TEST_CASE("exports are deterministic and shaped as documented") {
  LabeledGraph g = tandem_atleast1_automaton(2);
  Alphabet binary(2);
  std::string dot = graph_to_dot(g, binary);
  CHECK(dot == graph_to_dot(g, binary));
  CHECK(dot.find("digraph system {") == 0);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.back() == '\n');

  SquareMatrix m = tandem_atleast1_matrix(2);
  CHECK(matrix_to_tsv(m) == "1\t1\n1\t1\n");
}
