#include <doctest.h>

#include <random>

#include "invtree/enumeration.hpp"
#include "invtree/exchange.hpp"
#include "invtree/io.hpp"
#include "oracles.hpp"

using namespace invtree;

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("format_real uses seven decimals") {
  CHECK(format_real(0.44504186791) == "0.4450419");
  CHECK(format_real(-1.0) == "-1.0000000");
}

TEST_CASE("elist output re-parses to the same graph") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Tree t = oracle::random_tree(1 + trial % 14, rng);
    CHECK(parse_tree(to_elist(t)) == t);
  }
  const Graph g = inverse_graph(make_path(6));
  CHECK(parse_graph(to_elist(g)) == g);
  CHECK(to_elist(make_path(3)) == "3\n0 1\n1 2\n");
  CHECK(to_signed_elist(inverse_signed_graph(make_path(4))) == "4\n0 1 +1\n0 3 -1\n2 3 +1\n");
}

TEST_CASE("JSON shapes") {
  const auto classes = enumerate_invertible(6, 14);
  const auto j = to_json(classes);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  for (const auto& item : j) {
    CHECK(item["n"] == 6);
    CHECK(item["edges"].size() == 5);
    CHECK(item["code"].is_string());
  }
  const auto s = to_json(inverse_signed_graph(make_path(4)));
  CHECK(s["n"] == 4);
  CHECK(s["edges"].size() == 3);
  CHECK(s["edges"][1]["sign"] == -1);

  const auto spectrum_json = to_json(spectrum(make_path(6)));
  CHECK(spectrum_json["values"].size() == 6);
  CHECK(spectrum_json["median"].get<double>() == doctest::Approx(0.4450419).epsilon(1e-6));
  CHECK(to_json(spectrum(make_path(3)))["median"].is_null());

  const auto poset = to_json(build_poset(4));
  CHECK(poset["n"] == 4);
  CHECK(poset["nodes"].size() == 5);
  CHECK(poset["covers"].size() == 4);
  CHECK(poset["mobius"].size() == 14);
  CHECK(poset["nodes"][0]["minimal"] == true);
  CHECK(poset["nodes"][3]["maximal"] == true);
  CHECK(to_json(adjacency_matrix(make_path(2))) == nlohmann::json::parse("[[0,1],[1,0]]"));
}

TEST_CASE("DOT output") {
  const std::string plain = to_dot(inverse_graph(make_path(6)), "inverse");
  CHECK(plain.rfind("graph inverse {", 0) == 0);
  CHECK(count_of(plain, " -- ") == 6);

  const Tree p4 = make_path(4);
  const Matching m = *perfect_matching(p4);
  const std::string signed_dot = to_dot(inverse_signed_graph(p4), &m);
  CHECK(count_of(signed_dot, " -- ") == 3);
  CHECK(count_of(signed_dot, "dashed") == 1);
  CHECK(count_of(signed_dot, "bold") == 2);

  const std::string hasse = to_dot(build_poset(3));
  CHECK(count_of(hasse, " -> ") == 1);
  CHECK(hasse.find("rankdir=BT") != std::string::npos);
  CHECK(hasse.find("0.4450419") != std::string::npos);
  CHECK(hasse.find("0.5176381") != std::string::npos);
}
