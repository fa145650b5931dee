#include "invtree/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "invtree/error.hpp"

namespace invtree {

int max_vertices_bound() {
  if (const char* env = std::getenv("INVTREE_MAX_VERTICES")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 64) {
      return static_cast<int>(value);
    }
  }
  return kDefaultMaxVertices;
}

namespace {

using Layout = std::vector<int>;

// One step of the Beyer-Hedetniemi rooted tree successor.
std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = {}) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Left subtree of the root, and the tree with the left subtree removed.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {std::move(left), std::move(rest)};
}

std::optional<Layout> next_free_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  int left_height = *std::max_element(left.begin(), left.end());
  int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

Tree layout_to_tree(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(stack.back())));
    }
    stack.push_back(i);
  }
  return Tree::from_edges(static_cast<int>(layout.size()), std::move(edges));
}

void check_bound(int order, int bound) {
  if (order > bound) {
    throw Error(Errc::bound_exceeded, std::to_string(order) + " vertices exceeds the bound of " +
                                          std::to_string(bound));
  }
}

}  // namespace

void for_each_free_tree(int order, const std::function<void(const Tree&)>& visit) {
  if (order < 1) return;
  if (order == 1) {
    visit(Tree{});
    return;
  }
  // Start from the path rooted at its center.
  Layout layout;
  for (int i = 0; i <= order / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (order + 1) / 2; ++i) layout.push_back(i);

  std::optional<Layout> current = layout;
  while (current) {
    current = next_free_tree(*current);
    if (!current) break;
    visit(layout_to_tree(*current));
    current = next_rooted_tree(*current);
  }
}

TreeClassSet enumerate_trees(int order, int bound) {
  check_bound(order, bound);
  if (order < 1) throw Error(Errc::invalid_vertex, "vertex count must be positive");
  TreeClassSet classes;
  for_each_free_tree(order, [&](const Tree& tree) {
    auto code = canonical_code(tree);
    classes.try_emplace(code, tree_from_code(code));
  });
  return classes;
}

TreeClassSet enumerate_invertible(int two_n, int bound) {
  if (two_n < 1) throw Error(Errc::invalid_vertex, "vertex count must be positive");
  if (two_n % 2 != 0) {
    throw Error(Errc::odd_order, "no tree on an odd number of vertices is invertible");
  }
  check_bound(two_n, bound);
  TreeClassSet classes;
  for_each_free_tree(two_n, [&](const Tree& tree) {
    if (!perfect_matching(tree)) return;
    auto code = canonical_code(tree);
    classes.try_emplace(code, tree_from_code(code));
  });
  return classes;
}

}  // namespace invtree
