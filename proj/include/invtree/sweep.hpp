#pragma once

#include <span>
#include <vector>

#include "invtree/exchange.hpp"
#include "invtree/tree.hpp"

namespace invtree {

// Per-tree kernels over a batch of trees. Each comes as a plain serial loop,
// kept as the reference, and an OpenMP version whose output is identical
// element for element regardless of thread count.

/// Sorted, deduplicated canonical codes of the classes reachable from each
/// tree by a single exchange move.
std::vector<std::vector<CanonicalCode>> one_step_targets_serial(std::span<const Tree> trees);
std::vector<std::vector<CanonicalCode>> one_step_targets_parallel(std::span<const Tree> trees, int jobs);

/// Certified median eigenvalue of each tree, rounded to within 1e-12.
std::vector<double> medians_serial(std::span<const Tree> trees);
std::vector<double> medians_parallel(std::span<const Tree> trees, int jobs);

struct MoveCheck {
  std::size_t tree_index = 0;
  ExchangeMove move;
  ExchangeReport report;
};

/// verify_exchange_lemma for every candidate move of every tree, ordered by
/// (tree index, move).
std::vector<MoveCheck> exchange_sweep_serial(std::span<const Tree> trees);
std::vector<MoveCheck> exchange_sweep_parallel(std::span<const Tree> trees, int jobs);

/// Thread count actually used for `jobs` (values < 1 mean "all cores").
int effective_jobs(int jobs);

}  // namespace invtree
