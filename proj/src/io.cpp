#include "invtree/io.hpp"

#include <cstdio>
#include <algorithm>
#include <sstream>

namespace invtree {

using nlohmann::json;

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", value);
  std::string out = buf;
  if (out == "-0.0000000") out = "0.0000000";
  return out;
}

std::string to_elist(const Graph& graph) {
  std::ostringstream out;
  out << graph.order() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_signed_elist(const SignedGraph& graph) {
  std::ostringstream out;
  out << graph.order() << '\n';
  for (const auto& [e, s] : graph.signed_edges()) out << e.u << ' ' << e.v << ' ' << (s > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

namespace {

json edge_array(const Graph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json big_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

json to_json(const Graph& graph) { return json{{"n", graph.order()}, {"edges", edge_array(graph)}}; }

json to_json(const CanonicalCode& code, const Tree& tree) {
  return json{{"code", code.code}, {"n", tree.order()}, {"edges", edge_array(tree)}};
}

json to_json(const TreeClassSet& classes) {
  json out = json::array();
  for (const auto& [code, tree] : classes) out.push_back(to_json(code, tree));
  return out;
}

json to_json(const SignedGraph& graph) {
  json edges = json::array();
  for (const auto& [e, s] : graph.signed_edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", s}});
  return json{{"n", graph.order()}, {"edges", edges}};
}

json to_json(const IntMatrix& matrix) {
  json rows = json::array();
  for (int i = 0; i < matrix.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < matrix.cols(); ++j) row.push_back(big_to_json(matrix(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Spectrum& spectrum) {
  json out{{"values", spectrum.values}, {"tol", spectrum.tol}};
  const std::size_t size = spectrum.values.size();
  out["median"] = size % 2 == 0 && size > 0 ? json(spectrum.values[size / 2]) : json(nullptr);
  return out;
}

json to_json(const HassePoset& poset) {
  const auto maxima = maximal_elements(poset);
  const auto minima = minimal_elements(poset);
  auto member = [](const std::vector<int>& v, int i) { return std::find(v.begin(), v.end(), i) != v.end(); };

  json nodes = json::array();
  for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
    const auto& node = poset.nodes[i];
    nodes.push_back({{"code", node.code.code},
                     {"edges", edge_array(node.representative)},
                     {"median", node.median},
                     {"maximal", member(maxima, i)},
                     {"minimal", member(minima, i)}});
  }
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back({lo, hi});
  json mobius = json::array();
  const auto mu = mobius_function(poset);
  for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
    for (int j = 0; j < static_cast<int>(mu.size()); ++j) {
      if (poset.less_equal(i, j)) mobius.push_back({i, j, mu[i][j]});
    }
  }
  return json{{"n", poset.n}, {"nodes", nodes}, {"covers", covers}, {"mobius", mobius}};
}

std::string to_dot(const SignedGraph& graph, const Matching* matching) {
  std::ostringstream out;
  out << "graph inverse {\n";
  for (int v = 0; v < graph.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [e, s] : graph.signed_edges()) {
    std::string style = s < 0 ? "dashed" : "solid";
    if (matching && matching->contains(e)) style += ",bold";
    out << "  " << e.u << " -- " << e.v << " [style=\"" << style << "\", label=\"" << (s > 0 ? "+" : "-")
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& graph, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < graph.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const HassePoset& poset) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
    const auto& node = poset.nodes[i];
    out << "  n" << i << " [label=\"" << node.code.code << "\\n" << format_real(node.median) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace invtree
