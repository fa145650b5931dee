#include "invtree/charpoly.hpp"

#include <map>

namespace invtree {

namespace {

using Memo = std::map<CanonicalCode, IntPoly>;

IntPoly char_poly_memo(const Tree& tree, Memo& memo) {
  const int n = tree.order();
  if (n == 1) return IntPoly{0, 1};
  if (n == 2) return IntPoly{-1, 0, 1};

  auto code = canonical_code(tree);
  if (auto it = memo.find(code); it != memo.end()) return it->second;

  Vertex leaf = 0;
  while (tree.degree(leaf) != 1) ++leaf;
  const Vertex neighbor = tree.neighbors(leaf).front();

  std::vector<char> keep(n, 1);
  keep[leaf] = 0;
  const Tree without_leaf = induced_components(tree, keep).front();
  keep[neighbor] = 0;
  IntPoly forest{1};
  for (const Tree& part : induced_components(tree, keep)) forest = forest * char_poly_memo(part, memo);

  IntPoly result = char_poly_memo(without_leaf, memo).shifted(1) - forest;
  memo.emplace(std::move(code), result);
  return result;
}

}  // namespace

CharPoly char_poly(const Tree& tree) {
  Memo memo;
  return char_poly_memo(tree, memo);
}

}  // namespace invtree
