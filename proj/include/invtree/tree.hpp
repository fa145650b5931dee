#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool has(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Normalizes {a, b}; throws Errc::same_vertex for a loop.
Edge make_edge(Vertex a, Vertex b);

std::string to_string(Edge e);

/// Simple undirected graph on {0..n-1}. Edges are kept sorted and unique,
/// neighbor lists ascending.
class Graph {
 public:
  Graph() = default;
  /// Throws Errc::invalid_vertex / Errc::same_vertex / Errc::parse_error
  /// (duplicate edge).
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  bool has_edge(Edge e) const noexcept;
  bool is_connected() const;

  bool operator==(const Graph& other) const noexcept {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A labeled tree on {0..n-1}, n >= 1. Construction validates |E| = n - 1
/// and connectivity; every Tree value is a tree.
class Tree : public Graph {
 public:
  /// Single vertex.
  Tree() : Graph(1, {}) {}

  /// Throws Errc::not_a_tree when the edges do not form a spanning tree.
  static Tree from_edges(int order, std::vector<Edge> edges);

 private:
  explicit Tree(Graph g) : Graph(std::move(g)) {}
};

/// A set of vertex-disjoint edges of a host graph on `order` vertices.
class Matching {
 public:
  Matching() = default;
  /// Throws Errc::parse_error if two pairs share a vertex.
  Matching(int order, std::vector<Edge> pairs);

  std::span<const Edge> pairs() const noexcept { return pairs_; }
  int order() const noexcept { return static_cast<int>(mate_.size()); }
  bool contains(Edge e) const noexcept;
  /// Partner of v, or -1 when v is uncovered.
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool is_perfect() const noexcept;

  bool operator==(const Matching& other) const noexcept { return pairs_ == other.pairs_; }

 private:
  std::vector<Edge> pairs_;
  std::vector<Vertex> mate_;
};

/// Fixed-point-free involution swapping the ends of every matched edge.
class Involution {
 public:
  Vertex operator()(Vertex v) const { return perm_[v]; }
  Edge operator()(Edge e) const { return make_edge(perm_[e.u], perm_[e.v]); }
  std::span<const Vertex> permutation() const noexcept { return perm_; }

 private:
  friend Involution involution(const Tree& tree, const Matching& matching);
  std::vector<Vertex> perm_;
};

struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  std::vector<Edge> edges() const;
};

/// AHU encoding of the unlabeled tree; equal codes iff isomorphic trees.
struct CanonicalCode {
  std::string code;

  auto operator<=>(const CanonicalCode&) const = default;
};

// --- parsing ---------------------------------------------------------------

/// Parses the `.elist` text format (first line n, then "u v" per line,
/// '#' comments). Throws Errc::parse_error or Errc::not_a_tree.
Tree parse_tree(std::string_view text);
/// Same format without the tree requirement.
Graph parse_graph(std::string_view text);

// --- matchings and the involution -------------------------------------------

/// The unique perfect matching by leaf stripping, or nullopt.
std::optional<Matching> perfect_matching(const Tree& tree);

/// Throws Errc::not_perfect if the matching does not cover the tree.
Involution involution(const Tree& tree, const Matching& matching);

Tree apply_involution(const Tree& tree, const Involution& phi);
Graph apply_involution(const Graph& graph, const Involution& phi);

// --- paths ------------------------------------------------------------------

/// Unique a-b path. Throws Errc::same_vertex / Errc::invalid_vertex.
VertexPath tree_path(const Tree& tree, Vertex a, Vertex b);

/// Odd edge count 2k-1 with edges alternating in/out of M, first and last
/// edge in M.
bool is_alternating(const VertexPath& path, const Matching& matching);

// --- isomorphism ------------------------------------------------------------

CanonicalCode canonical_code(const Tree& tree);

/// The tree decoded from its canonical code with preorder labels; two trees
/// are isomorphic iff their canonical forms are identical.
Tree canonical_form(const Tree& tree);

/// Rebuilds a labeled tree from a rooted AHU code (preorder labels).
Tree tree_from_code(const CanonicalCode& code);

bool is_isomorphic(const Tree& a, const Tree& b);

// --- constructors -----------------------------------------------------------

Tree make_path(int order);
/// K_{1,order-1} centered at vertex 0.
Tree make_star(int order);

/// Y(K2,...,K2): vertex i of Y gets the pendant vertex order(Y) + i.
Tree rooted_product_k2(const Tree& base);

/// T_{2n}, the rooted product of P_n with n copies of K2.
Tree elongated_caterpillar(int n);

bool is_path(const Tree& tree) noexcept;

/// Connected components of the subgraph induced on the vertices with
/// keep[v] != 0, each relabeled to 0..k-1 in ascending original order.
std::vector<Tree> induced_components(const Tree& tree, const std::vector<char>& keep);

}  // namespace invtree
