#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invtree/charpoly.hpp"
#include "invtree/matrix.hpp"
#include "invtree/tree.hpp"

namespace invtree {

/// Graph whose edges carry a sign in {+1, -1}.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int order) : order_(order) {}

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return signs_.size(); }
  const std::map<Edge, int>& signed_edges() const noexcept { return signs_; }

  /// +1 / -1 for a present edge, 0 otherwise.
  int sign(Edge e) const;
  /// Throws std::invalid_argument for a sign outside {+1, -1} or a loop.
  void set(Edge e, int sign);
  std::size_t negative_count() const;

  bool operator==(const SignedGraph& other) const = default;

 private:
  int order_ = 0;
  std::map<Edge, int> signs_;
};

IntMatrix signed_adjacency_matrix(const SignedGraph& graph);
Graph underlying_graph(const SignedGraph& graph);

/// Entry (a, b) of A(T)^{-1} from the alternating-path formula:
/// (-1)^(1-m) when a != b and P_{a,b} is M-alternating on 2m vertices.
int inverse_entry(const Tree& tree, const Matching& matching, Vertex a, Vertex b);

/// The signed graph G^{+-} with adjacency matrix A(T)^{-1}, built from the
/// alternating-path formula. Throws Errc::not_invertible.
SignedGraph inverse_signed_graph(const Tree& tree);

/// T^{-1}: the underlying graph of inverse_signed_graph(tree).
Graph inverse_graph(const Tree& tree);

/// A(T)^{-1} by exact elimination, independent of the combinatorial route.
/// Throws Errc::singular when T has no perfect matching.
IntMatrix exact_inverse(const Tree& tree);

/// T^{+-}: phi(T) with matching edges positive, all others negative.
SignedGraph signed_tree_image(const Tree& tree, const Matching& matching);

/// Vertex side of an edge cut.
struct Cut {
  std::vector<Vertex> side;  // sorted

  bool contains(Vertex v) const;
  bool crosses(Edge e) const { return contains(e.u) != contains(e.v); }
  std::vector<Edge> crossing_edges(const Graph& graph) const;

  bool operator==(const Cut& other) const = default;
};

/// The fundamental cut of `tree_edge` with respect to `spanning_tree`: the
/// side is the component of spanning_tree - tree_edge holding the smaller
/// endpoint. Throws Errc::not_spanning_tree_edge.
Cut fundamental_cut(const Graph& graph, const Graph& spanning_tree, Edge tree_edge);

/// Negates the sign of every edge crossing the cut.
SignedGraph switch_on(const SignedGraph& graph, const Cut& cut);

enum class GodsilClause {
  entries_in_range,      // (a) exact inverse is a (0, +-1) matrix
  matches_exact_inverse, // (b) combinatorial inverse equals it entrywise
  signed_subgraph,       // (c) T^{+-} is a signed subgraph of G^{+-}
  switching_positive,    // (d) switching on negative fundamental cuts makes all signs positive
  spanning_tree,         // (e) phi(T) is a spanning tree of T^{-1}
  negative_cut_count,    // (f) non-tree edge at T-distance 2m-1 lies in m-1 negative cuts
};

const char* to_string(GodsilClause clause) noexcept;

struct GodsilReport {
  std::optional<GodsilClause> first_failure;
  std::string detail;

  bool passed() const noexcept { return !first_failure; }
};

/// Checks clauses (a) through (f) in order and stops at the first failure.
/// Throws Errc::not_invertible.
GodsilReport verify_godsil(const Tree& tree);

/// Number of negative fundamental cuts (w.r.t. phi(T) inside T^{-1}) that
/// contain the edge e.
int negative_cut_count(const Tree& tree, const Matching& matching, Edge e);

}  // namespace invtree
