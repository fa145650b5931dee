#pragma once

#include <functional>
#include <map>

#include "invtree/tree.hpp"

namespace invtree {

inline constexpr int kDefaultMaxVertices = 14;

/// Vertex bound for exhaustive work: INVTREE_MAX_VERTICES if set and valid,
/// otherwise kDefaultMaxVertices.
int max_vertices_bound();

/// One representative (the canonical form) per isomorphism class, keyed and
/// ordered by canonical code.
using TreeClassSet = std::map<CanonicalCode, Tree>;

/// Calls `visit` once per unlabeled tree on `order` vertices (level-sequence
/// generator of Wright, Richmond, Odlyzko and McKay). No bound check.
void for_each_free_tree(int order, const std::function<void(const Tree&)>& visit);

/// Throws Errc::bound_exceeded when order > bound.
TreeClassSet enumerate_trees(int order, int bound = max_vertices_bound());

/// Invertible trees (those with a perfect matching). Throws Errc::odd_order
/// for odd input and Errc::bound_exceeded past the bound.
TreeClassSet enumerate_invertible(int two_n, int bound = max_vertices_bound());

}  // namespace invtree
