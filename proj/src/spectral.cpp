#include "strep/spectral.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace strep {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw std::overflow_error("path count exceeds 64 bits");
  return a + b;
}

// Strongly-connected components, iterative two-pass approach: first pass
// records reverse-finish order, second pass sweeps the transposed graph.
std::vector<std::vector<std::size_t>> strong_components(
    std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : adj[u]) radj[v].push_back(u);

  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // stack frames: (vertex, next child index)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        std::size_t v = adj[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<std::size_t>> components;
  std::vector<char> assigned(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    components.emplace_back();
    std::vector<std::size_t> stack{*it};
    assigned[*it] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      components.back().push_back(u);
      for (std::size_t v : radj[u])
        if (!assigned[v]) {
          assigned[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return components;
}

// Perron root of the (irreducible) restriction of `a` to `idx`, via power
// iteration on the +I shift.  The shift makes the block primitive, so the
// min/max growth ratios converge geometrically onto the eigenvalue from
// both sides; the midpoint (minus the shift) is returned.
double component_radius(const SquareMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size();
  std::vector<double> block(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      block[i * m + j] = static_cast<double>(a.at(idx[i], idx[j])) + (i == j ? 1.0 : 0.0);

  std::vector<double> v(m, 1.0), w(m, 0.0);
  double lo = 0.0, hi = 0.0;
  for (std::size_t iter = 0; iter < 1'000'000; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += block[i * m + j] * v[j];
      w[i] = acc;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double ratio = w[i] / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= 1e-12 * hi) break;
    double scale = 1.0 / *std::max_element(w.begin(), w.end());
    for (std::size_t i = 0; i < m; ++i) v[i] = w[i] * scale;
  }
  return (lo + hi) / 2.0 - 1.0;
}

}  // namespace

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

SquareMatrix tandem_atleast1_matrix(int diversity) {
  if (diversity < 2)
    throw std::invalid_argument("tandem_atleast1_matrix: need diversity >= 2");
  const auto d = static_cast<std::size_t>(diversity);
  SquareMatrix a(d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    a.at(i, i) = 1;
    a.at(i, i + 1) = 1;
  }
  for (std::size_t j = 0; j < d; ++j) a.at(d - 1, j) = 1;
  return a;
}

Polynomial tandem_atleast1_characteristic(int diversity) {
  if (diversity < 2)
    throw std::invalid_argument("tandem_atleast1_characteristic: need diversity >= 2");
  const auto d = static_cast<std::size_t>(diversity);
  Polynomial p;
  p.coeffs.assign(d + 1, 0.0);
  for (std::size_t i = 0; i + 2 <= d; ++i) p.coeffs[i] = -1.0;
  p.coeffs[d] = 1.0;
  return p;
}

LabeledGraph tandem_atleast1_automaton(int diversity) {
  if (diversity < 2)
    throw std::invalid_argument("tandem_atleast1_automaton: need diversity >= 2");
  const auto d = static_cast<std::size_t>(diversity);
  LabeledGraph g;
  g.vertex_count = d;
  g.starts = {0};
  for (std::size_t i = 0; i + 1 < d; ++i) {
    g.edges.push_back({i, i, static_cast<Symbol>(i)});
    g.edges.push_back({i, i + 1, static_cast<Symbol>(i + 1)});
  }
  for (std::size_t j = 0; j < d; ++j)
    g.edges.push_back({d - 1, j, static_cast<Symbol>(j)});
  return g;
}

Polynomial tandem_atleastk_characteristic(std::size_t k) {
  if (k == 0) throw std::invalid_argument("tandem_atleastk_characteristic: need k >= 1");
  Polynomial p;
  p.coeffs.assign(k + 2, 0.0);
  p.coeffs[0] = -1.0;
  p.coeffs[1] = -1.0;
  p.coeffs[k + 1] = 1.0;
  return p;
}

double largest_real_root(const Polynomial& p, double lo, double hi) {
  if (!(p.eval(lo) <= 0.0) || !(p.eval(hi) >= 0.0))
    throw std::invalid_argument("largest_real_root: [lo, hi] does not bracket a root");
  while (hi - lo > 1e-12) {
    double mid = lo + (hi - lo) / 2.0;
    if (p.eval(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

double spectral_radius(const SquareMatrix& a) {
  if (a.n == 0) return 0.0;
  std::vector<std::vector<std::size_t>> adj(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (a.at(i, j) > 0) adj[i].push_back(j);

  // The spectrum of a non-negative matrix is the union of the spectra of its
  // strongly-connected blocks, so the radius is the block maximum.
  double best = 0.0;
  for (const auto& component : strong_components(a.n, adj))
    best = std::max(best, component_radius(a, component));
  return best;
}

LabeledGraph debruijn_graph(int sigma, int order) {
  if (sigma < 1) throw std::invalid_argument("debruijn_graph: need at least one symbol");
  if (order < 0) throw std::invalid_argument("debruijn_graph: negative order");
  const auto s = static_cast<std::size_t>(sigma);
  std::size_t count = 1;
  for (int t = 0; t <= order; ++t) {
    count *= s;
    if (count > 4096) throw std::invalid_argument("debruijn_graph: more than 4096 vertices");
  }

  LabeledGraph g;
  g.vertex_count = count;
  g.vertex_words.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string raw(static_cast<std::size_t>(order) + 1, '\0');
    std::size_t rest = v;
    for (int t = order; t >= 0; --t) {
      raw[static_cast<std::size_t>(t)] = static_cast<char>(rest % s);
      rest /= s;
    }
    g.vertex_words.push_back(Word::from_raw(std::move(raw)));
    g.starts.push_back(v);
  }
  const std::size_t tail = count / s;  // sigma^order
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t c = 0; c < s; ++c)
      g.edges.push_back({v, (v % tail) * s + c, static_cast<Symbol>(c)});
  return g;
}

LabeledGraph prune_debruijn(const LabeledGraph& g, const std::set<std::size_t>& allowed,
                            std::size_t d) {
  if (allowed.size() >= d)
    throw std::invalid_argument("prune_debruijn: allowed residue set must be smaller than d");
  for (std::size_t r : allowed)
    if (r >= d) throw std::invalid_argument("prune_debruijn: residue out of range");
  if (g.vertex_words.size() != g.vertex_count)
    throw std::invalid_argument("prune_debruijn: graph has no vertex words");

  // An edge survives iff both endpoint windows keep all their pair-position
  // residues (mod d) inside `allowed`; that is a per-vertex property.
  std::vector<char> ok(g.vertex_count, 1);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    auto profile = position_profile(g.vertex_words[v], d);
    for (const auto& [pair, residues] : profile.residues) {
      for (std::size_t r : residues)
        if (!allowed.count(r)) {
          ok[v] = 0;
          break;
        }
      if (!ok[v]) break;
    }
  }

  LabeledGraph pruned;
  pruned.vertex_count = g.vertex_count;
  pruned.vertex_words = g.vertex_words;
  for (std::size_t v : g.starts)
    if (ok[v]) pruned.starts.push_back(v);
  for (const LabeledEdge& e : g.edges)
    if (ok[e.from] && ok[e.to]) pruned.edges.push_back(e);
  return pruned;
}

std::uint64_t count_labeled_paths(const LabeledGraph& g, std::size_t steps) {
  std::vector<std::uint64_t> cur(g.vertex_count, 0);
  for (std::size_t v : g.starts) cur[v] = checked_add(cur[v], 1);
  for (std::size_t t = 0; t < steps; ++t) {
    std::vector<std::uint64_t> next(g.vertex_count, 0);
    for (const LabeledEdge& e : g.edges)
      next[e.to] = checked_add(next[e.to], cur[e.from]);
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : cur) total = checked_add(total, c);
  return total;
}

SquareMatrix adjacency_matrix(const LabeledGraph& g) {
  SquareMatrix a(g.vertex_count);
  for (const LabeledEdge& e : g.edges) ++a.at(e.from, e.to);
  return a;
}

std::string graph_to_dot(const LabeledGraph& g, const Alphabet& alphabet) {
  std::set<std::size_t> starts(g.starts.begin(), g.starts.end());
  std::ostringstream out;
  out << "digraph system {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  v" << v << " [label=\"";
    if (v < g.vertex_words.size())
      out << alphabet.format(g.vertex_words[v]);
    else
      out << v;
    out << "\"" << (starts.count(v) ? ", shape=doublecircle" : "") << "];\n";
  }
  for (const LabeledEdge& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\""
        << alphabet.format(Word{e.label}) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string matrix_to_tsv(const SquareMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) out << (j ? "\t" : "") << a.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace strep
