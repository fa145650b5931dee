#include <doctest.h>

#include <random>

#include "invtree/charpoly.hpp"
#include "invtree/enumeration.hpp"
#include "invtree/error.hpp"
#include "invtree/matrix.hpp"
#include "invtree/polynomial.hpp"
#include "oracles.hpp"

using namespace invtree;

TEST_CASE("polynomial arithmetic") {
  const IntPoly a{-1, 0, 1};  // t^2 - 1
  const IntPoly b{1, 1};      // t + 1
  CHECK((a * b) == IntPoly{-1, -1, 1, 1});
  CHECK((a + b) == IntPoly{0, 1, 1});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.shifted(2) == IntPoly{0, 0, -1, 0, 1});
  CHECK(power(b, 3) == IntPoly{1, 3, 3, 1});
  CHECK(derivative(IntPoly{5, 0, 0, 2}) == IntPoly{0, 0, 6});
  CHECK(a.evaluate(BigInt(3)) == 8);
  CHECK(a.to_string() == "t^2 - 1");
  CHECK(IntPoly{1, 0, -3, 0, 1}.to_string() == "t^4 - 3t^2 + 1");
  CHECK(content(IntPoly{4, -6, 8}) == 2);
  CHECK(primitive_part(IntPoly{4, -6, 8}) == IntPoly{2, -3, 4});
  CHECK(exact_quotient(a, b) == IntPoly{-1, 1});
  CHECK_THROWS_AS(exact_quotient(a, IntPoly{1, 2}), std::domain_error);
  CHECK(gcd(a * IntPoly{2, 1}, b * IntPoly{2, 1}) == IntPoly{2, 3, 1});
  CHECK(a.sign_at_dyadic(BigInt(1), 1) == -1);  // at 1/2
  CHECK(a.sign_at_dyadic(BigInt(2), 1) == 0);   // at 1
}

TEST_CASE("squarefree decomposition and Sturm counts") {
  // (t - 1)^3 (t + 2) t
  const IntPoly f = power(IntPoly{-1, 1}, 3) * IntPoly{2, 1} * IntPoly{0, 1};
  const auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == IntPoly{0, 2, 1});
  CHECK(parts[1].degree() == 0);
  CHECK(parts[2] == IntPoly{-1, 1});

  // t^4 - 3t^2 + 1 has four real roots, two in (0, 2].
  const auto chain = sturm_sequence(IntPoly{1, 0, -3, 0, 1});
  CHECK(sign_variations(chain, BigInt(-4), 0) - sign_variations(chain, BigInt(4), 0) == 4);
  CHECK(sign_variations(chain, BigInt(0), 0) - sign_variations(chain, BigInt(2), 0) == 2);
  // t^2 + 1 has none.
  const auto none = sturm_sequence(IntPoly{1, 0, 1});
  CHECK(sign_variations(none, BigInt(-8), 0) == sign_variations(none, BigInt(8), 0));
}

TEST_CASE("exact matrix algebra") {
  const IntMatrix a = adjacency_matrix(make_path(4));
  CHECK(determinant(a) == 1);
  CHECK(determinant(adjacency_matrix(make_star(4))) == 0);
  const IntMatrix inv = exact_inverse(a);
  CHECK(inv * a == IntMatrix::identity(4));
  CHECK(inv.is_symmetric());
  CHECK(inv(0, 3) == -1);
  CHECK(inv(1, 2) == 0);
  try {
    exact_inverse(adjacency_matrix(make_star(4)));
    FAIL("singular matrix inverted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular);
  }
  CHECK(matrix_char_poly(a) == IntPoly{1, 0, -3, 0, 1});
}

TEST_CASE("determinant of a tree is (-1)^(n/2) with a perfect matching, else 0") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& [_, t] : enumerate_trees(n, 14)) {
      const BigInt det = determinant(adjacency_matrix(t));
      if (perfect_matching(t)) {
        CHECK(det == ((n / 2) % 2 ? -1 : 1));
      } else {
        CHECK(det == 0);
      }
    }
  }
}

TEST_CASE("characteristic polynomials agree with the matching polynomial and Berkowitz") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& [_, t] : enumerate_trees(n, 14)) {
      const IntPoly phi = char_poly(t);
      CHECK(phi == oracle::matching_polynomial(t));
      CHECK(phi == matrix_char_poly(adjacency_matrix(t)));
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Tree t = oracle::random_tree(12 + trial % 3, rng);
    CHECK(char_poly(t) == matrix_char_poly(adjacency_matrix(t)));
  }
}
