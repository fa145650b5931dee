#include "invtree/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invtree/sweep.hpp"

namespace invtree {

HassePoset build_poset(int n, int jobs, int bound) {
  const TreeClassSet classes = enumerate_invertible(2 * n, bound);
  std::vector<Tree> trees;
  std::vector<CanonicalCode> codes;
  for (const auto& [code, tree] : classes) {
    codes.push_back(code);
    trees.push_back(tree);
  }
  const auto medians = jobs == 1 ? medians_serial(trees) : medians_parallel(trees, jobs);
  const auto targets = jobs == 1 ? one_step_targets_serial(trees) : one_step_targets_parallel(trees, jobs);

  std::vector<int> order(trees.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return medians[a] != medians[b] ? medians[a] < medians[b] : codes[a] < codes[b];
  });

  HassePoset poset;
  poset.n = n;
  std::map<CanonicalCode, int> index;
  for (int i : order) {
    index[codes[i]] = static_cast<int>(poset.nodes.size());
    poset.nodes.push_back(PosetNode{codes[i], trees[i], medians[i]});
  }
  const int size = static_cast<int>(poset.nodes.size());

  std::vector<std::vector<int>> successors(size);
  for (int i : order) {
    const int from = index.at(codes[i]);
    for (const CanonicalCode& target : targets[i]) {
      const int to = index.at(target);
      successors[from].push_back(to);
      poset.one_step.emplace_back(from, to);
    }
  }
  std::sort(poset.one_step.begin(), poset.one_step.end());

  poset.leq.assign(size, std::vector<char>(size, 0));
  for (int s = 0; s < size; ++s) {
    std::vector<int> stack{s};
    poset.leq[s][s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : successors[x]) {
        if (!poset.leq[s][y]) {
          poset.leq[s][y] = 1;
          stack.push_back(y);
        }
      }
    }
  }

  auto strictly_below = [&](int i, int j) { return i != j && poset.leq[i][j] && !poset.leq[j][i]; };
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j && poset.leq[i][j] && poset.leq[j][i]) poset.antisymmetric = false;
      if (!strictly_below(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < size && covered; ++k) {
        if (strictly_below(i, k) && strictly_below(k, j)) covered = false;
      }
      if (covered) poset.covers.emplace_back(i, j);
    }
  }
  return poset;
}

std::vector<int> maximal_elements(const HassePoset& poset) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
    bool has_upper = std::any_of(poset.covers.begin(), poset.covers.end(),
                                 [i](const auto& c) { return c.first == i; });
    if (!has_upper) out.push_back(i);
  }
  return out;
}

std::vector<int> minimal_elements(const HassePoset& poset) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
    bool has_lower = std::any_of(poset.covers.begin(), poset.covers.end(),
                                 [i](const auto& c) { return c.second == i; });
    if (!has_lower) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<long>> mobius_function(const HassePoset& poset) {
  const int size = static_cast<int>(poset.nodes.size());
  std::vector<std::vector<long>> mu(size, std::vector<long>(size, 0));
  // Linear extension: count of elements below each node.
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(size, 0);
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) below[j] += poset.leq[i][j];
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] != below[b] ? below[a] < below[b] : a < b; });

  for (int x = 0; x < size; ++x) {
    mu[x][x] = 1;
    for (int y : order) {
      if (y == x || !poset.leq[x][y]) continue;
      long sum = 0;
      for (int z = 0; z < size; ++z) {
        if (z != y && poset.leq[x][z] && poset.leq[z][y]) sum += mu[x][z];
      }
      mu[x][y] = -sum;
    }
  }
  return mu;
}

}  // namespace invtree
