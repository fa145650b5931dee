#pragma once

#include <utility>
#include <vector>

#include "invtree/enumeration.hpp"
#include "invtree/tree.hpp"

namespace invtree {

struct PosetNode {
  CanonicalCode code;
  Tree representative;
  double median = 0.0;
};

/// The invertible trees on 2n vertices ordered by tree exchange. Nodes are
/// sorted by (median, code); indices below refer to that order.
struct HassePoset {
  int n = 0;
  std::vector<PosetNode> nodes;
  /// Deduplicated one-step exchange edges between classes.
  std::vector<std::pair<int, int>> one_step;
  /// Transitive reduction of the relation, as (lower, upper).
  std::vector<std::pair<int, int>> covers;
  /// Reflexive transitive closure: leq[i][j] iff node i <=_t node j.
  std::vector<std::vector<char>> leq;
  /// False if two distinct classes reach each other (would break the order).
  bool antisymmetric = true;

  bool less_equal(int i, int j) const { return leq[i][j] != 0; }
};

/// Throws Errc::bound_exceeded when 2n exceeds the bound. `jobs` == 1 runs
/// the serial kernels, anything else the OpenMP ones.
HassePoset build_poset(int n, int jobs = 1, int bound = max_vertices_bound());

/// Nodes with no cover above / below them.
std::vector<int> maximal_elements(const HassePoset& poset);
std::vector<int> minimal_elements(const HassePoset& poset);

/// mu[x][y] with mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z) for x < y,
/// and 0 for incomparable pairs.
std::vector<std::vector<long>> mobius_function(const HassePoset& poset);

}  // namespace invtree
