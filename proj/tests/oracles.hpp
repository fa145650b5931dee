#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check; only the data types are shared.

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "invtree/polynomial.hpp"
#include "invtree/tree.hpp"

namespace oracle {

using invtree::Edge;
using invtree::Graph;
using invtree::IntPoly;
using invtree::Tree;

// Labeled tree from a Prüfer sequence on n >= 2 vertices.
inline Tree prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back(invtree::make_edge(leaf, x));
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back(invtree::make_edge(u, v));
      }
    }
  }
  return Tree::from_edges(n, edges);
}

// Every labeled tree on n vertices (n^(n-2) of them).
template <typename Visit>
void for_each_labeled_tree(int n, Visit&& visit) {
  if (n == 1) {
    visit(Tree{});
    return;
  }
  if (n == 2) {
    visit(Tree::from_edges(2, {Edge{0, 1}}));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    visit(prufer_decode(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) return;
    ++seq[i];
  }
}

// Minimum sorted relabeled edge list over all n! permutations.
inline std::vector<Edge> brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges()) relabeled.push_back(invtree::make_edge(perm[e.u], perm[e.v]));
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) best = relabeled;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline long count_perfect_matchings(int n, const std::vector<Edge>& edges, std::vector<char>& covered) {
  int v = 0;
  while (v < n && covered[v]) ++v;
  if (v == n) return 1;
  long total = 0;
  for (const Edge& e : edges) {
    if (!e.has(v)) continue;
    const int w = e.other(v);
    if (covered[w]) continue;
    covered[v] = covered[w] = 1;
    total += count_perfect_matchings(n, edges, covered);
    covered[v] = covered[w] = 0;
  }
  return total;
}

// Perfect matchings of g restricted to the vertices with keep[v] set.
inline long count_perfect_matchings(const Graph& g, std::vector<char> keep) {
  std::vector<char> covered(g.order());
  for (int v = 0; v < g.order(); ++v) covered[v] = !keep[v];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back(e);
  }
  return count_perfect_matchings(g.order(), edges, covered);
}

inline long count_perfect_matchings(const Graph& g) {
  return count_perfect_matchings(g, std::vector<char>(g.order(), 1));
}

// For a forest the characteristic polynomial equals the matching
// polynomial: sum_k (-1)^k m_k t^(n-2k), m_k counted over edge subsets.
inline IntPoly matching_polynomial(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<long> count(n / 2 + 1, 0);
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<char> used(n, 0);
    bool ok = true;
    int k = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (used[edges[i].u] || used[edges[i].v]) ok = false;
      used[edges[i].u] = used[edges[i].v] = 1;
      ++k;
    }
    if (ok) ++count[k];
  }
  std::vector<invtree::BigInt> coeffs(n + 1);
  for (int k = 0; 2 * k <= n; ++k) coeffs[n - 2 * k] = (k % 2 ? -1 : 1) * count[k];
  return IntPoly(coeffs);
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

// Ascending eigenvalues from a dense symmetric solver.
inline std::vector<double> dense_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// Uniform random labeled tree via a random Prüfer sequence.
inline Tree random_tree(int n, std::mt19937& rng) {
  if (n <= 2) return n == 1 ? Tree{} : Tree::from_edges(2, {Edge{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return prufer_decode(n, seq);
}

inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back(invtree::make_edge(perm[e.u], perm[e.v]));
  return Tree::from_edges(t.order(), edges);
}

inline Tree edges_tree(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back(invtree::make_edge(u, v));
  return Tree::from_edges(n, edges);
}

}  // namespace oracle
