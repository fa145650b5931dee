#pragma once

#include "invtree/polynomial.hpp"
#include "invtree/tree.hpp"

namespace invtree {

using CharPoly = IntPoly;

/// Characteristic polynomial det(tI - A(T)) by the leaf recurrence
/// phi(T) = t phi(T - v) - phi(T - v - u), v a leaf with neighbor u,
/// memoized on canonical codes of the subtrees met along the way.
CharPoly char_poly(const Tree& tree);

}  // namespace invtree
