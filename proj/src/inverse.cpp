#include "invtree/inverse.hpp"

#include <algorithm>
#include <stdexcept>

#include "invtree/error.hpp"

namespace invtree {

int SignedGraph::sign(Edge e) const {
  auto it = signs_.find(e);
  return it == signs_.end() ? 0 : it->second;
}

void SignedGraph::set(Edge e, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
  if (e.u == e.v || e.u < 0 || e.v >= order_) throw std::invalid_argument("invalid signed edge");
  signs_[e] = sign;
}

std::size_t SignedGraph::negative_count() const {
  return static_cast<std::size_t>(
      std::count_if(signs_.begin(), signs_.end(), [](const auto& kv) { return kv.second < 0; }));
}

IntMatrix signed_adjacency_matrix(const SignedGraph& graph) {
  IntMatrix out(graph.order(), graph.order());
  for (const auto& [e, s] : graph.signed_edges()) {
    out(e.u, e.v) = s;
    out(e.v, e.u) = s;
  }
  return out;
}

Graph underlying_graph(const SignedGraph& graph) {
  std::vector<Edge> edges;
  edges.reserve(graph.size());
  for (const auto& kv : graph.signed_edges()) edges.push_back(kv.first);
  return Graph(graph.order(), std::move(edges));
}

namespace {

Matching require_matching(const Tree& tree) {
  auto m = perfect_matching(tree);
  if (!m) throw Error(Errc::not_invertible, "no perfect matching");
  return *m;
}

int alternating_sign(int matched_edges) { return matched_edges % 2 == 1 ? 1 : -1; }

}  // namespace

int inverse_entry(const Tree& tree, const Matching& matching, Vertex a, Vertex b) {
  if (a == b) return 0;
  VertexPath path = tree_path(tree, a, b);
  if (!is_alternating(path, matching)) return 0;
  const int m = static_cast<int>(path.vertices.size()) / 2;
  return alternating_sign(m);
}

SignedGraph inverse_signed_graph(const Tree& tree) {
  const Matching matching = require_matching(tree);
  SignedGraph out(tree.order());
  // From each source walk only along alternating continuations: a matched
  // edge, then any unmatched edge away from it, then that vertex's matched
  // edge again. Every vertex reached by a matched edge ends an alternating path.
  struct Frame {
    Vertex at;
    int matched;
  };
  for (Vertex a = 0; a < tree.order(); ++a) {
    std::vector<Frame> stack{{matching.mate(a), 1}};
    while (!stack.empty()) {
      auto [x, m] = stack.back();
      stack.pop_back();
      if (a < x) out.set(Edge{a, x}, alternating_sign(m));
      for (Vertex y : tree.neighbors(x)) {
        if (y == matching.mate(x)) continue;
        stack.push_back({matching.mate(y), m + 1});
      }
    }
  }
  return out;
}

Graph inverse_graph(const Tree& tree) { return underlying_graph(inverse_signed_graph(tree)); }

IntMatrix exact_inverse(const Tree& tree) {
  const IntMatrix a = adjacency_matrix(tree);
  IntMatrix inv = exact_inverse(a);
  if (a * inv != IntMatrix::identity(tree.order())) {
    throw std::logic_error("exact inverse failed its A * X = I postcondition");
  }
  return inv;
}

SignedGraph signed_tree_image(const Tree& tree, const Matching& matching) {
  const Involution phi = involution(tree, matching);
  SignedGraph out(tree.order());
  for (const Edge& e : tree.edges()) out.set(phi(e), matching.contains(e) ? 1 : -1);
  return out;
}

bool Cut::contains(Vertex v) const { return std::binary_search(side.begin(), side.end(), v); }

std::vector<Edge> Cut::crossing_edges(const Graph& graph) const {
  std::vector<Edge> out;
  for (const Edge& e : graph.edges()) {
    if (crosses(e)) out.push_back(e);
  }
  return out;
}

Cut fundamental_cut(const Graph& graph, const Graph& spanning_tree, Edge tree_edge) {
  if (spanning_tree.order() != graph.order() || !spanning_tree.has_edge(tree_edge)) {
    throw Error(Errc::not_spanning_tree_edge, to_string(tree_edge) + " is not a spanning tree edge");
  }
  std::vector<char> seen(graph.order(), 0);
  std::vector<Vertex> stack{tree_edge.u};
  seen[tree_edge.u] = 1;
  Cut cut;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    cut.side.push_back(x);
    for (Vertex y : spanning_tree.neighbors(x)) {
      if (seen[y] || make_edge(x, y) == tree_edge) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  std::sort(cut.side.begin(), cut.side.end());
  return cut;
}

SignedGraph switch_on(const SignedGraph& graph, const Cut& cut) {
  SignedGraph out(graph.order());
  for (const auto& [e, s] : graph.signed_edges()) out.set(e, cut.crosses(e) ? -s : s);
  return out;
}

const char* to_string(GodsilClause clause) noexcept {
  switch (clause) {
    case GodsilClause::entries_in_range: return "(a) inverse entries in {0,+-1}";
    case GodsilClause::matches_exact_inverse: return "(b) alternating-path inverse matches exact inverse";
    case GodsilClause::signed_subgraph: return "(c) T+- is a signed subgraph of G+-";
    case GodsilClause::switching_positive: return "(d) switching on negative cuts gives all-positive signs";
    case GodsilClause::spanning_tree: return "(e) phi(T) is a spanning tree of the inverse graph";
    case GodsilClause::negative_cut_count: return "(f) non-tree edges lie in m-1 negative cuts";
  }
  return "?";
}

int negative_cut_count(const Tree& tree, const Matching& matching, Edge e) {
  // A non-tree edge lies in the fundamental cut of a tree edge f exactly when
  // f is on the spanning-tree path between its ends.
  const Involution phi = involution(tree, matching);
  const Tree image = apply_involution(tree, phi);
  const SignedGraph signs = signed_tree_image(tree, matching);
  int count = 0;
  for (const Edge& f : tree_path(image, e.u, e.v).edges()) {
    if (signs.sign(f) < 0) ++count;
  }
  return count;
}

GodsilReport verify_godsil(const Tree& tree) {
  const Matching matching = require_matching(tree);
  const int n = tree.order();
  GodsilReport report;
  auto fail = [&](GodsilClause clause, std::string detail) {
    report.first_failure = clause;
    report.detail = std::move(detail);
    return report;
  };

  const IntMatrix exact = exact_inverse(tree);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (abs(exact(i, j)) > 1) {
        return fail(GodsilClause::entries_in_range,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + exact(i, j).get_str());
      }
    }
  }

  const SignedGraph inverse = inverse_signed_graph(tree);
  if (signed_adjacency_matrix(inverse) != exact) {
    return fail(GodsilClause::matches_exact_inverse, "entrywise mismatch");
  }

  const SignedGraph image = signed_tree_image(tree, matching);
  for (const auto& [e, s] : image.signed_edges()) {
    if (inverse.sign(e) != s) {
      return fail(GodsilClause::signed_subgraph, "edge " + to_string(e) + " sign " +
                                                     std::to_string(inverse.sign(e)) + ", expected " +
                                                     std::to_string(s));
    }
  }

  const Graph underlying = underlying_graph(inverse);
  const Graph spanning = underlying_graph(image);
  SignedGraph switched = inverse;
  for (const auto& [f, s] : image.signed_edges()) {
    if (s < 0) switched = switch_on(switched, fundamental_cut(underlying, spanning, f));
  }
  if (switched.negative_count() != 0) {
    return fail(GodsilClause::switching_positive,
                std::to_string(switched.negative_count()) + " edges remain negative");
  }

  // (c) already placed every phi(T) edge inside G; a tree on all n vertices
  // is then spanning.
  if (spanning.size() != static_cast<std::size_t>(n - 1) || !spanning.is_connected()) {
    return fail(GodsilClause::spanning_tree, "phi(T) is not a spanning tree");
  }

  for (const auto& [e, s] : inverse.signed_edges()) {
    if (spanning.has_edge(e)) continue;
    const int distance = static_cast<int>(tree_path(tree, e.u, e.v).edge_count());
    const int m = (distance + 1) / 2;
    const int count = negative_cut_count(tree, matching, e);
    if (distance % 2 == 0 || count != m - 1 || (count % 2 == 0 ? 1 : -1) != s) {
      return fail(GodsilClause::negative_cut_count,
                  "edge " + to_string(e) + " lies in " + std::to_string(count) +
                      " negative cuts, T-distance " + std::to_string(distance));
    }
  }
  return report;
}

}  // namespace invtree
