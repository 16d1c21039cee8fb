#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "strep/word.hpp"

namespace strep {

// Dense non-negative integer matrix (adjacency/transfer matrices).
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<std::uint64_t> data;

  explicit SquareMatrix(std::size_t size) : n(size), data(size * size, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  bool operator==(const SquareMatrix&) const = default;
};

// Real polynomial, coefficients in ascending powers of x.
struct Polynomial {
  std::vector<double> coeffs;

  double eval(double x) const;
};

struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Symbol label = 0;

  bool operator==(const LabeledEdge&) const = default;
};

// Directed multigraph with symbol-labeled edges.  `starts` are the entry
// vertices for path counting; `vertex_words` optionally names each vertex by
// a word (used by the sliding-window graphs below).
struct LabeledGraph {
  std::size_t vertex_count = 0;
  std::vector<LabeledEdge> edges;
  std::vector<std::size_t> starts;
  std::vector<Word> vertex_words;
};

// Transfer matrix of the growth automaton for tandem replication with
// unconstrained block lengths over `diversity` >= 2 distinct symbols: state
// i (0-based) may repeat (A[i][i] = 1) or advance to the next fresh symbol
// (A[i][i+1] = 1), and the final state may emit anything (last row all
// ones).  Its spectral radius governs the count of reachable words.
SquareMatrix tandem_atleast1_matrix(int diversity);

// x^d - (x^{d-2} + ... + x + 1) for d = diversity: its unique positive root
// r satisfies 1 + r = spectral radius of tandem_atleast1_matrix(d).
Polynomial tandem_atleast1_characteristic(int diversity);

// The growth automaton behind tandem_atleast1_matrix as a labeled graph
// (edge labels name the written symbol class, start state 0); its adjacency
// matrix equals tandem_atleast1_matrix(diversity).
LabeledGraph tandem_atleast1_automaton(int diversity);

// x^{k+1} - x - 1: its unique positive root r gives log2(r) as a growth
// bound for tandem replication with block lengths >= k.
Polynomial tandem_atleastk_characteristic(std::size_t k);

// Unique sign crossing of p inside [lo, hi]; requires p(lo) <= 0 <= p(hi).
// Bisects to a bracket narrower than 1e-12 and returns its lower end, so an
// exact root at `lo` is returned exactly.
double largest_real_root(const Polynomial& p, double lo = 1.0, double hi = 2.0);

// Largest-magnitude eigenvalue of a non-negative matrix: condenses into
// strongly-connected components and power-iterates each component's block
// (shifted by +I to guarantee primitivity), sandwiching the eigenvalue with
// min/max growth-ratio bounds; the overall radius is the component maximum.
double spectral_radius(const SquareMatrix& a);

// Sliding-window graph over `sigma` symbols whose vertices are all words of
// length order+1 and whose edges slide the window one symbol (label = the
// symbol shifted in).  Every vertex is a start.  Guarded to at most 4096
// vertices.
LabeledGraph debruijn_graph(int sigma, int order);

// Removes from a sliding-window graph every edge with an endpoint whose
// pair-position residues modulo d stray outside `allowed`.  Requires
// |allowed| < d and allowed ⊂ {0..d-1}; under that hypothesis at least one
// edge disappears (any constant window realizes every residue), so the
// pruned graph's spectral radius drops strictly below sigma.
LabeledGraph prune_debruijn(const LabeledGraph& g, const std::set<std::size_t>& allowed,
                            std::size_t d);

// Number of `steps`-edge paths starting in g.starts (steps = 0 counts the
// start vertices).  Exact; throws std::overflow_error beyond 64 bits.
std::uint64_t count_labeled_paths(const LabeledGraph& g, std::size_t steps);

SquareMatrix adjacency_matrix(const LabeledGraph& g);

// Graphviz DOT export; vertices show their word names when present, edge
// labels use the alphabet's display.
std::string graph_to_dot(const LabeledGraph& g, const Alphabet& alphabet);

// Plain numeric grid, one row per line, tab-separated.
std::string matrix_to_tsv(const SquareMatrix& a);

}  // namespace strep
