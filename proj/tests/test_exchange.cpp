#include <doctest.h>

#include "invtree/enumeration.hpp"
#include "invtree/error.hpp"
#include "invtree/exchange.hpp"
#include "invtree/inverse.hpp"
#include "oracles.hpp"

using namespace invtree;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

}  // namespace

TEST_CASE("P6 has exactly two moves, both reaching T6") {
  const Tree p6 = make_path(6);
  const auto moves = exchange_candidates(p6);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == ExchangeMove{Edge{1, 4}, Edge{1, 2}, Edge{0, 5}});
  CHECK(moves[1] == ExchangeMove{Edge{1, 4}, Edge{3, 4}, Edge{0, 5}});
  for (const auto& m : moves) {
    const Tree next = tree_exchange(p6, m);
    CHECK(is_isomorphic(next, elongated_caterpillar(3)));
    CHECK(perfect_matching(next) == perfect_matching(p6));
    const ExchangeReport r = verify_exchange_lemma(p6, m);
    CHECK(r.passed);
    CHECK(r.inverse_edges_before == 6);
    CHECK(r.inverse_edges_after == 5);
  }
  CHECK(exchange_candidates(elongated_caterpillar(3)).empty());
}

TEST_CASE("a move drops phi(f) from the inverse graph") {
  // M = {01, 23, 45, 67}; e = 57 is alternating (5-4-3-2-6-7), phi(e) = 46
  // closes the cycle 4-3-2-6 and f = 26 is removed.
  const Tree t = oracle::edges_tree(8, {{0, 1}, {1, 2}, {2, 3}, {2, 6}, {6, 7}, {3, 4}, {4, 5}});
  const Graph before = inverse_graph(t);
  CHECK(before.has_edge(Edge{5, 7}));
  const ExchangeMove move{Edge{4, 6}, Edge{2, 6}, Edge{5, 7}};
  const auto all = exchange_candidates(t);
  CHECK(std::find(all.begin(), all.end(), move) != all.end());

  const Tree next = tree_exchange(t, move);
  CHECK(next.has_edge(Edge{4, 6}));
  CHECK_FALSE(next.has_edge(Edge{2, 6}));
  const Graph after = inverse_graph(next);
  CHECK(before.has_edge(Edge{3, 7}));
  CHECK_FALSE(after.has_edge(Edge{3, 7}));
  for (const Edge& e : after.edges()) CHECK(before.has_edge(e));
  CHECK(verify_exchange_lemma(t, move).passed);
}

TEST_CASE("invalid moves are rejected") {
  const Tree p6 = make_path(6);
  // phi(e) already in T
  CHECK(code_of([&] { tree_exchange(p6, ExchangeMove{Edge{0, 1}, Edge{1, 2}, Edge{0, 1}}); }) ==
        Errc::invalid_move);
  // removing a matching edge
  CHECK(code_of([&] { tree_exchange(p6, ExchangeMove{Edge{1, 4}, Edge{2, 3}, Edge{0, 5}}); }) ==
        Errc::invalid_move);
  // f off the cycle
  CHECK(code_of([&] { tree_exchange(p6, ExchangeMove{Edge{1, 4}, Edge{0, 1}, Edge{0, 5}}); }) ==
        Errc::invalid_move);
  // 1-3 is not phi of an inverse edge (P_{0,2} is not alternating)
  CHECK(code_of([&] { tree_exchange(p6, ExchangeMove{Edge{1, 3}, Edge{1, 2}, Edge{0, 2}}); }) ==
        Errc::invalid_move);
  CHECK(code_of([] { tree_exchange(make_star(4), ExchangeMove{}); }) == Errc::not_invertible);
  CHECK(code_of([&] { fundamental_cycle(p6, Edge{0, 1}); }) == Errc::edge_already_present);
  CHECK(fundamental_cycle(p6, Edge{1, 4}) == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

TEST_CASE("make_move accepts e or phi(e)") {
  const Tree p6 = make_path(6);
  const ExchangeMove expected{Edge{1, 4}, Edge{1, 2}, Edge{0, 5}};
  CHECK(make_move(p6, Edge{1, 4}, Edge{1, 2}) == expected);
  CHECK(make_move(p6, Edge{0, 5}, Edge{1, 2}) == expected);
  CHECK(code_of([&] { make_move(p6, Edge{0, 2}, Edge{1, 2}); }) == Errc::invalid_move);
}

TEST_CASE("self-inverse trees are the rooted products with K2") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [_, t] : enumerate_invertible(2 * n, 14)) {
      const bool self = is_self_inverse(t);
      CHECK(self == is_rooted_product_k2(t));
      CHECK(self == exchange_candidates(t).empty());
      if (auto base = rooted_product_base(t)) CHECK(is_isomorphic(rooted_product_k2(*base), t));
    }
  }
  CHECK(is_rooted_product_k2(make_path(2)));
  CHECK_FALSE(is_rooted_product_k2(make_path(6)));
}

TEST_CASE("non-minimality witness") {
  CHECK_FALSE(witness_non_minimal(make_path(8)));
  for (int n = 3; n <= 5; ++n) {
    for (const auto& [_, t] : enumerate_invertible(2 * n, 14)) {
      const auto w = witness_non_minimal(t);
      REQUIRE(w.has_value() != is_path(t));
      if (!w) continue;
      CHECK(tree_exchange(w->predecessor, w->move) == t);
      CHECK(verify_exchange_lemma(w->predecessor, w->move).passed);
    }
  }
}

TEST_CASE("every move on up to 10 vertices satisfies the exchange lemma") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [_, t] : enumerate_invertible(2 * n, 14)) {
      for (const auto& m : exchange_candidates(t)) {
        const ExchangeReport r = verify_exchange_lemma(t, m);
        CHECK_MESSAGE(r.passed, r.failed_clause);
        CHECK(r.inverse_edges_after < r.inverse_edges_before);
        CHECK(r.median_before < r.median_after);
      }
    }
  }
}
