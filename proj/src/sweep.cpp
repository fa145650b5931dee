#include "invtree/sweep.hpp"

#include <algorithm>

#include "invtree/spectral.hpp"
#include "parallel_map.hpp"

namespace invtree {

using detail::map_parallel;
using detail::map_serial;

namespace {

std::vector<CanonicalCode> targets_of(const Tree& tree) {
  std::vector<CanonicalCode> codes;
  for (const ExchangeMove& move : exchange_candidates(tree)) {
    codes.push_back(canonical_code(tree_exchange(tree, move)));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<MoveCheck> checks_of(const Tree& tree, std::size_t index) {
  std::vector<MoveCheck> out;
  for (const ExchangeMove& move : exchange_candidates(tree)) {
    out.push_back(MoveCheck{index, move, verify_exchange_lemma(tree, move)});
  }
  return out;
}

std::vector<MoveCheck> flatten(std::vector<std::vector<MoveCheck>> nested) {
  std::vector<MoveCheck> out;
  for (auto& part : nested) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace

int effective_jobs(int jobs) { return detail::thread_count(jobs); }

std::vector<std::vector<CanonicalCode>> one_step_targets_serial(std::span<const Tree> trees) {
  return map_serial<std::vector<CanonicalCode>>(trees.size(), [&](std::size_t i) { return targets_of(trees[i]); });
}

std::vector<std::vector<CanonicalCode>> one_step_targets_parallel(std::span<const Tree> trees, int jobs) {
  return map_parallel<std::vector<CanonicalCode>>(trees.size(), jobs,
                                                  [&](std::size_t i) { return targets_of(trees[i]); });
}

std::vector<double> medians_serial(std::span<const Tree> trees) {
  return map_serial<double>(trees.size(), [&](std::size_t i) { return median_eigenvalue(trees[i]); });
}

std::vector<double> medians_parallel(std::span<const Tree> trees, int jobs) {
  return map_parallel<double>(trees.size(), jobs, [&](std::size_t i) { return median_eigenvalue(trees[i]); });
}

std::vector<MoveCheck> exchange_sweep_serial(std::span<const Tree> trees) {
  return flatten(map_serial<std::vector<MoveCheck>>(trees.size(),
                                                    [&](std::size_t i) { return checks_of(trees[i], i); }));
}

std::vector<MoveCheck> exchange_sweep_parallel(std::span<const Tree> trees, int jobs) {
  return flatten(map_parallel<std::vector<MoveCheck>>(trees.size(), jobs,
                                                      [&](std::size_t i) { return checks_of(trees[i], i); }));
}

}  // namespace invtree
