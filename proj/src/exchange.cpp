#include "invtree/exchange.hpp"

#include <algorithm>
#include <stdexcept>

#include "invtree/error.hpp"
#include "invtree/inverse.hpp"
#include "invtree/spectral.hpp"

namespace invtree {

namespace {

Matching require_matching(const Tree& tree) {
  auto m = perfect_matching(tree);
  if (!m) throw Error(Errc::not_invertible, "no perfect matching");
  return *m;
}

[[noreturn]] void invalid(const std::string& why) { throw Error(Errc::invalid_move, why); }

}  // namespace

std::vector<Edge> fundamental_cycle(const Tree& tree, Edge extra) {
  if (tree.has_edge(extra)) {
    throw Error(Errc::edge_already_present, to_string(extra) + " is already a tree edge");
  }
  auto cycle = tree_path(tree, extra.u, extra.v).edges();
  cycle.push_back(extra);
  return cycle;
}

std::vector<ExchangeMove> exchange_candidates(const Tree& tree) {
  const Matching matching = require_matching(tree);
  const Involution phi = involution(tree, matching);
  const Graph inverse = inverse_graph(tree);
  std::vector<ExchangeMove> moves;
  for (const Edge& e : inverse.edges()) {
    const Edge add = phi(e);
    if (tree.has_edge(add)) continue;
    for (const Edge& f : fundamental_cycle(tree, add)) {
      if (f == add || matching.contains(f)) continue;
      moves.push_back(ExchangeMove{add, f, e});
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

ExchangeMove make_move(const Tree& tree, Edge add_or_source, Edge remove) {
  const Matching matching = require_matching(tree);
  const Involution phi = involution(tree, matching);
  const Graph inverse = inverse_graph(tree);
  if (!tree.has_edge(add_or_source) && inverse.has_edge(phi(add_or_source))) {
    return ExchangeMove{add_or_source, remove, phi(add_or_source)};
  }
  if (inverse.has_edge(add_or_source) && !tree.has_edge(phi(add_or_source))) {
    return ExchangeMove{phi(add_or_source), remove, add_or_source};
  }
  invalid(to_string(add_or_source) + " is neither phi(e) nor e for an inverse edge e outside phi(T)");
}

Tree tree_exchange(const Tree& tree, const ExchangeMove& move) {
  const Matching matching = require_matching(tree);
  const Involution phi = involution(tree, matching);
  const Edge e = move.source_inverse_edge;
  if (e.u < 0 || e.v >= tree.order() || inverse_entry(tree, matching, e.u, e.v) == 0) {
    invalid("source edge " + to_string(e) + " is not an edge of the inverse graph");
  }
  if (move.add != phi(e)) {
    invalid("added edge " + to_string(move.add) + " is not phi(" + to_string(e) + ")");
  }
  if (tree.has_edge(move.add)) {
    invalid("added edge " + to_string(move.add) + " is already in the tree");
  }
  const auto cycle = fundamental_cycle(tree, move.add);
  if (move.remove == move.add || std::find(cycle.begin(), cycle.end(), move.remove) == cycle.end()) {
    invalid("removed edge " + to_string(move.remove) + " is not on the fundamental cycle of " +
            to_string(move.add));
  }
  if (matching.contains(move.remove)) {
    invalid("removed edge " + to_string(move.remove) + " is a matching edge");
  }

  std::vector<Edge> edges;
  for (const Edge& f : tree.edges()) {
    if (f != move.remove) edges.push_back(f);
  }
  edges.push_back(move.add);
  Tree result = Tree::from_edges(tree.order(), std::move(edges));
  if (perfect_matching(result) != matching) {
    throw std::logic_error("tree exchange changed the perfect matching");
  }
  return result;
}

ExchangeReport verify_exchange_lemma(const Tree& tree, const ExchangeMove& move) {
  const Matching matching = require_matching(tree);
  const Involution phi = involution(tree, matching);
  const Tree exchanged = tree_exchange(tree, move);
  const Graph before = inverse_graph(tree);
  const Graph after = inverse_graph(exchanged);

  ExchangeReport report;
  report.inverse_edges_before = before.size();
  report.inverse_edges_after = after.size();
  auto fail = [&](std::string clause) {
    report.passed = false;
    report.failed_clause = std::move(clause);
    return report;
  };

  for (const Edge& e : after.edges()) {
    if (!before.has_edge(e)) return fail("inverse of T~ has edge " + to_string(e) + " not in T^-1");
  }
  if (after.size() >= before.size()) return fail("inverse of T~ is not a proper subgraph");
  const Edge lost = phi(move.remove);
  if (!before.has_edge(lost) || after.has_edge(lost)) {
    return fail("phi(f) = " + to_string(lost) + " is not in E(T^-1) \\ E(T~^-1)");
  }

  RealRoot lo = certified_median(tree);
  RealRoot hi = certified_median(exchanged);
  const bool increases = compare_roots(lo, hi) < 0;
  lo.refine_to(kDefaultTolerance);
  hi.refine_to(kDefaultTolerance);
  report.median_before = lo.midpoint();
  report.median_after = hi.midpoint();
  if (!increases) return fail("median eigenvalue does not strictly increase");
  return report;
}

bool is_self_inverse(const Tree& tree) {
  const Graph inverse = inverse_graph(tree);
  if (inverse.size() != tree.size()) return false;
  std::vector<Edge> edges(inverse.edges().begin(), inverse.edges().end());
  return is_isomorphic(tree, Tree::from_edges(tree.order(), std::move(edges)));
}

std::optional<Tree> rooted_product_base(const Tree& tree) {
  const Matching matching = require_matching(tree);
  std::vector<char> keep(tree.order(), 1);
  for (const Edge& e : matching.pairs()) {
    if (tree.degree(e.v) == 1) {
      keep[e.v] = 0;
    } else if (tree.degree(e.u) == 1) {
      keep[e.u] = 0;
    } else {
      return std::nullopt;
    }
  }
  return induced_components(tree, keep).front();
}

bool is_rooted_product_k2(const Tree& tree) { return rooted_product_base(tree).has_value(); }

std::optional<NonMinimalWitness> witness_non_minimal(const Tree& tree) {
  const Matching matching = require_matching(tree);
  Vertex v = 0;
  while (v < tree.order() && tree.degree(v) < 3) ++v;
  if (v == tree.order()) return std::nullopt;

  const Vertex w = matching.mate(v);
  std::vector<Vertex> others;
  for (Vertex z : tree.neighbors(v)) {
    if (z != w) others.push_back(z);
  }
  const Vertex x = others[0];
  const Vertex y = others[1];
  const Vertex a = matching.mate(x);
  const Vertex b = matching.mate(y);

  std::vector<Edge> edges;
  for (const Edge& f : tree.edges()) {
    if (f != make_edge(v, x)) edges.push_back(f);
  }
  edges.push_back(make_edge(x, b));
  NonMinimalWitness witness{Tree::from_edges(tree.order(), std::move(edges)),
                            ExchangeMove{make_edge(x, v), make_edge(x, b), make_edge(a, w)}};
  return witness;
}

}  // namespace invtree
