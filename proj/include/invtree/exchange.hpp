#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invtree/tree.hpp"

namespace invtree {

/// A tree-exchange step on T: insert `add` = phi(source_inverse_edge) and
/// delete the non-matching edge `remove` from the cycle this closes.
struct ExchangeMove {
  Edge add;
  Edge remove;
  Edge source_inverse_edge;

  auto operator<=>(const ExchangeMove&) const = default;
};

/// Edges of the unique cycle of T + extra: the tree path from extra.u to
/// extra.v, in order, followed by extra. Throws Errc::edge_already_present.
std::vector<Edge> fundamental_cycle(const Tree& tree, Edge extra);

/// Every valid move on T, sorted. Empty iff T^{-1} = phi(T).
std::vector<ExchangeMove> exchange_candidates(const Tree& tree);

/// Builds the move from the inserted edge phi(e) (or from e itself) and the
/// edge to delete. Throws Errc::invalid_move if neither reading is valid.
ExchangeMove make_move(const Tree& tree, Edge add_or_source, Edge remove);

/// T + add - remove. Throws Errc::invalid_move naming the violated
/// condition; the matching of T stays the unique perfect matching.
Tree tree_exchange(const Tree& tree, const ExchangeMove& move);

struct ExchangeReport {
  bool passed = true;
  std::string failed_clause;  // empty when passed
  std::size_t inverse_edges_before = 0;
  std::size_t inverse_edges_after = 0;
  double median_before = 0.0;
  double median_after = 0.0;
};

/// E(T~^{-1}) is a proper subset of E(T^{-1}), phi(remove) is among the lost
/// edges, and lambda_n(T) < lambda_n(T~) by certified comparison.
ExchangeReport verify_exchange_lemma(const Tree& tree, const ExchangeMove& move);

/// T isomorphic to its inverse graph. Throws Errc::not_invertible.
bool is_self_inverse(const Tree& tree);

/// When every matched edge has an endpoint of degree 1, the base tree Y with
/// T = Y(K2,...,K2) (leaves of matched edges deleted). Throws
/// Errc::not_invertible.
std::optional<Tree> rooted_product_base(const Tree& tree);
bool is_rooted_product_k2(const Tree& tree);

struct NonMinimalWitness {
  Tree predecessor;  // T' with tree_exchange(T', move) == T
  ExchangeMove move;
};

/// For T with a vertex v of degree >= 3: w = mate(v), x < y the two smallest
/// other neighbors, a = mate(x), b = mate(y), T' = T + xb - vx, and the move
/// on T' adds xv and removes xb. nullopt when T is a path.
std::optional<NonMinimalWitness> witness_non_minimal(const Tree& tree);

}  // namespace invtree
