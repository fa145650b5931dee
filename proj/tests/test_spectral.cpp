#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "invtree/charpoly.hpp"
#include "invtree/enumeration.hpp"
#include "invtree/error.hpp"
#include "invtree/spectral.hpp"
#include "oracles.hpp"

using namespace invtree;

TEST_CASE("medians of the two trees on six vertices") {
  const double pi = std::numbers::pi;
  CHECK(median_eigenvalue(make_path(6)) == doctest::Approx(2 * std::cos(3 * pi / 7)).epsilon(1e-12));
  CHECK(median_eigenvalue(elongated_caterpillar(3)) ==
        doctest::Approx((std::sqrt(6.0) - std::sqrt(2.0)) / 2).epsilon(1e-12));
  CHECK(compare_medians(make_path(6), elongated_caterpillar(3)) == std::strong_ordering::less);
  CHECK(compare_medians(elongated_caterpillar(3), make_path(6)) == std::strong_ordering::greater);
  CHECK(compare_medians(make_path(6), make_path(6)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(certified_median(make_path(5)), Error);
}

TEST_CASE("root isolation") {
  // (t^2 - 2)^2 t: roots -sqrt2, 0, sqrt2 with multiplicities 2, 1, 2.
  const IntPoly p = power(IntPoly{-2, 0, 1}, 2) * IntPoly{0, 1};
  auto roots = real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].multiplicity() == 2);
  CHECK(roots[1].multiplicity() == 1);
  CHECK(roots[1].is_exact());
  roots[2].refine_to(1e-14);
  CHECK(roots[2].lower() <= std::sqrt(2.0));
  CHECK(roots[2].upper() >= std::sqrt(2.0));

  // The same algebraic number from different polynomials compares equal.
  auto a = real_roots(IntPoly{-2, 0, 1});
  auto b = real_roots(IntPoly{0, -2, 0, 1});
  CHECK(compare_roots(a[1], b[2]) == std::strong_ordering::equal);
  CHECK(compare_roots(a[0], b[1]) == std::strong_ordering::less);

  // Roots closer than double precision are still ordered: sqrt2 vs a root
  // of 10^20 t^2 - 2 * 10^20 - 1.
  const BigInt big("100000000000000000000");
  auto c = real_roots(IntPoly(std::vector<BigInt>{-2 * big - 1, 0, big}));
  CHECK(compare_roots(a[1], c[1]) == std::strong_ordering::less);

  CHECK(real_roots(IntPoly{1, 0, 1}).empty());
}

TEST_CASE("Sturm spectra agree with a dense eigensolver") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = oracle::random_tree(2 + trial % 13, rng);
    const Spectrum s = spectrum(t);
    const auto dense = oracle::dense_eigenvalues(oracle::dense_adjacency(t));
    REQUIRE(s.values.size() == dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) CHECK(std::abs(s.values[i] - dense[i]) < 1e-9);
    CHECK(symmetry_defect(s) < 1e-11);
  }
}

TEST_CASE("path spectra") {
  for (int n = 1; n <= 14; ++n) {
    const Spectrum s = spectrum(make_path(n));
    const auto expected = path_eigenvalues(n);
    REQUIRE(s.values.size() == expected.size());
    for (int j = 0; j < n; ++j) CHECK(std::abs(s.values[j] - expected[j]) < 1e-9);
  }
  CHECK(path_eigenvalues(2)[0] == doctest::Approx(-1.0));
  CHECK(path_eigenvalues(2)[1] == doctest::Approx(1.0));
}

TEST_CASE("rooted product with K2") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [_, y] : enumerate_trees(n, 14)) {
      CHECK(char_poly(rooted_product_k2(y)) == rooted_product_char_poly(y));
      const Spectrum direct = spectrum(rooted_product_k2(y));
      const Spectrum derived = rooted_product_spectrum(y);
      REQUIRE(direct.values.size() == derived.values.size());
      for (std::size_t i = 0; i < derived.values.size(); ++i) {
        CHECK(std::abs(direct.values[i] - derived.values[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("caterpillar median bound") {
  for (int n = 1; n <= 10; ++n) {
    const MedianBound b = caterpillar_median_bound(n);
    CHECK(b.holds);
    CHECK(b.bound == doctest::Approx(std::sqrt(2.0) - 1));
    CHECK(b.median >= b.bound);
  }
}
