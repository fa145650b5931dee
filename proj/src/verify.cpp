#include "invtree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "invtree/exchange.hpp"
#include "invtree/inverse.hpp"
#include "invtree/io.hpp"
#include "invtree/poset.hpp"
#include "invtree/spectral.hpp"
#include "invtree/sweep.hpp"
#include "parallel_map.hpp"

namespace invtree {

namespace {

constexpr double kReciprocityTolerance = 1e-9;

bool forest_has_perfect_matching(const Tree& tree, const std::vector<char>& keep) {
  for (const Tree& part : induced_components(tree, keep)) {
    if (!perfect_matching(part)) return false;
  }
  return true;
}

std::string check_alternating_lemma(const Tree& tree, const Matching& matching) {
  const int n = tree.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const VertexPath path = tree_path(tree, a, b);
      std::vector<char> keep(n, 1);
      for (Vertex x : path.vertices) keep[x] = 0;
      if (forest_has_perfect_matching(tree, keep) != is_alternating(path, matching)) {
        return "pair " + to_string(Edge{a, b});
      }
    }
  }
  return {};
}

std::string check_edge_criterion(const Tree& tree, const Matching& matching, const Graph& inverse) {
  const Involution phi = involution(tree, matching);
  const int n = tree.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool alternating = is_alternating(tree_path(tree, u, v), matching);
      if (inverse.has_edge(Edge{u, v}) != alternating) return "pair " + to_string(Edge{u, v});
      const bool image_alternating = is_alternating(tree_path(tree, phi(u), phi(v)), matching);
      if (inverse.has_edge(make_edge(phi(u), phi(v))) != image_alternating) {
        return "image of pair " + to_string(Edge{u, v});
      }
    }
  }
  return {};
}

std::string check_length_three(const Tree& tree, const Matching& matching) {
  std::set<Edge> from_paths;
  const int n = tree.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const VertexPath path = tree_path(tree, a, b);
      if (path.edge_count() == 3 && is_alternating(path, matching)) from_paths.insert(Edge{a, b});
    }
  }
  std::set<Edge> negative;
  const SignedGraph image = signed_tree_image(tree, matching);
  for (const auto& [e, s] : image.signed_edges()) {
    if (s < 0) negative.insert(e);
  }
  if (from_paths != negative) return "negative edges of phi(T) differ from alternating 3-paths";
  return {};
}

std::string check_reciprocity(const Tree& tree) {
  const Spectrum direct = spectrum(tree);
  std::vector<double> reciprocal;
  for (double x : direct.values) reciprocal.push_back(1.0 / x);
  std::sort(reciprocal.begin(), reciprocal.end());
  const IntMatrix inverse = signed_adjacency_matrix(inverse_signed_graph(tree));
  const Spectrum of_inverse = spectrum_of(matrix_char_poly(inverse));
  if (of_inverse.values.size() != reciprocal.size()) return "eigenvalue count mismatch";
  for (std::size_t i = 0; i < reciprocal.size(); ++i) {
    if (std::abs(reciprocal[i] - of_inverse.values[i]) > kReciprocityTolerance) {
      return "1/lambda = " + format_real(reciprocal[i]) + " vs " + format_real(of_inverse.values[i]);
    }
  }
  return {};
}

std::string check_witness(const Tree& tree) {
  const auto witness = witness_non_minimal(tree);
  if (is_path(tree)) return witness ? "path tree produced a witness" : "";
  if (!witness) return "no witness for a tree with a vertex of degree >= 3";
  const Tree back = tree_exchange(witness->predecessor, witness->move);
  if (!is_isomorphic(back, tree)) return "round trip is not isomorphic to the input";
  return {};
}

LemmaRecord record(const Tree& tree, const CanonicalCode& code, std::string lemma, std::string failure) {
  LemmaRecord r;
  r.vertices = tree.order();
  r.code = code.code;
  r.lemma = std::move(lemma);
  r.passed = failure.empty();
  r.detail = std::move(failure);
  return r;
}

LemmaRecord class_record(int vertices, std::string lemma, std::string failure) {
  LemmaRecord r;
  r.vertices = vertices;
  r.code = "*";
  r.lemma = std::move(lemma);
  r.passed = failure.empty();
  r.detail = std::move(failure);
  return r;
}

std::vector<int> indices_where(const HassePoset& poset, bool (*pred)(const Tree&)) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(poset.nodes.size()); ++i) {
    if (pred(poset.nodes[i].representative)) out.push_back(i);
  }
  return out;
}

std::vector<LemmaRecord> verify_classes(const HassePoset& poset) {
  const int vertices = 2 * poset.n;
  std::vector<LemmaRecord> out;
  const int size = static_cast<int>(poset.nodes.size());

  out.push_back(class_record(vertices, "partial order (antisymmetry)",
                             poset.antisymmetric ? "" : "two classes reach each other"));

  std::vector<RealRoot> medians;
  std::vector<std::size_t> inverse_edges;
  for (const auto& node : poset.nodes) {
    medians.push_back(certified_median(node.representative));
    inverse_edges.push_back(inverse_graph(node.representative).size());
  }

  std::string monotone, chain;
  for (const auto& [lo, hi] : poset.one_step) {
    if (monotone.empty() && compare_roots(medians[lo], medians[hi]) >= 0) {
      monotone = "median does not increase from node " + std::to_string(lo) + " to " + std::to_string(hi);
    }
    if (chain.empty() && inverse_edges[hi] >= inverse_edges[lo]) {
      chain = "|E(T^-1)| does not decrease from node " + std::to_string(lo) + " to " + std::to_string(hi);
    }
  }
  for (const auto& [lo, hi] : poset.covers) {
    if (monotone.empty() && compare_roots(medians[lo], medians[hi]) >= 0) {
      monotone = "median does not increase along cover " + std::to_string(lo) + " -> " + std::to_string(hi);
    }
  }
  out.push_back(class_record(vertices, "median strictly increases along the order", monotone));
  out.push_back(class_record(vertices, "inverse edge count strictly decreases", chain));

  const auto maxima = maximal_elements(poset);
  const auto self_inverse = indices_where(poset, [](const Tree& t) { return is_self_inverse(t); });
  const auto products = indices_where(poset, [](const Tree& t) { return is_rooted_product_k2(t); });
  out.push_back(class_record(vertices, "maximal = self-inverse = rooted product with K2",
                             maxima == self_inverse && self_inverse == products ? "" : "sets differ"));

  const auto minima = minimal_elements(poset);
  const auto paths = indices_where(poset, [](const Tree& t) { return is_path(t); });
  out.push_back(class_record(vertices, "minimal elements are exactly the path",
                             minima == paths && paths.size() == 1 ? "" : "sets differ"));

  // Unique extremes by certified comparison.
  auto extreme = [&](auto better) {
    int best = 0;
    for (int i = 1; i < size; ++i) {
      if (better(compare_roots(medians[i], medians[best]))) best = i;
    }
    for (int i = 0; i < size; ++i) {
      if (i != best && compare_roots(medians[i], medians[best]) == 0) return -1;
    }
    return best;
  };
  const int argmax = extreme([](std::strong_ordering c) { return c > 0; });
  const int argmin = extreme([](std::strong_ordering c) { return c < 0; });
  const CanonicalCode caterpillar = canonical_code(elongated_caterpillar(poset.n));
  const CanonicalCode path = canonical_code(make_path(vertices));
  out.push_back(class_record(
      vertices, "median maximized only by the elongated caterpillar",
      argmax >= 0 && poset.nodes[argmax].code == caterpillar ? "" : "maximizer is not unique T_2n"));
  out.push_back(class_record(vertices, "median minimized only by the path",
                             argmin >= 0 && poset.nodes[argmin].code == path ? "" : "minimizer is not unique P_2n"));

  const MedianBound bound = caterpillar_median_bound(poset.n);
  out.push_back(class_record(vertices, "caterpillar median >= 1/(1+sqrt 2)",
                             bound.holds ? "" : "median " + format_real(bound.median)));
  return out;
}

}  // namespace

std::vector<LemmaRecord> verify_tree(const Tree& tree) {
  const CanonicalCode code = canonical_code(tree);
  std::vector<LemmaRecord> out;
  const auto matching = perfect_matching(tree);
  if (!matching) {
    out.push_back(record(tree, code, "invertible", "no perfect matching"));
    return out;
  }
  const Graph inverse = inverse_graph(tree);

  out.push_back(record(tree, code, "alternating-path lemma", check_alternating_lemma(tree, *matching)));

  const GodsilReport godsil = verify_godsil(tree);
  out.push_back(record(tree, code, "Godsil reconstruction (a)-(f)",
                       godsil.passed() ? "" : std::string(to_string(*godsil.first_failure)) + ": " + godsil.detail));

  const IntMatrix product = signed_adjacency_matrix(inverse_signed_graph(tree)) * adjacency_matrix(tree);
  out.push_back(record(tree, code, "alternating-path inverse times A is I",
                       product == IntMatrix::identity(tree.order()) ? "" : "product is not the identity"));

  out.push_back(record(tree, code, "inverse edge criterion", check_edge_criterion(tree, *matching, inverse)));
  out.push_back(record(tree, code, "negative edges = alternating 3-paths", check_length_three(tree, *matching)));
  out.push_back(record(tree, code, "eigenvalue reciprocity", check_reciprocity(tree)));
  out.push_back(record(tree, code, "self-inverse iff rooted product with K2",
                       is_self_inverse(tree) == is_rooted_product_k2(tree) ? "" : "classifiers disagree"));
  out.push_back(record(tree, code, "non-minimality witness round trip", check_witness(tree)));
  return out;
}

VerifyReport run_verification(int max_n, int jobs, int bound) {
  VerifyReport report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    const HassePoset poset = build_poset(n, jobs, bound);
    std::vector<Tree> trees;
    for (const auto& node : poset.nodes) trees.push_back(node.representative);
    report.classes_checked += trees.size();

    auto per_tree = jobs == 1
                        ? detail::map_serial<std::vector<LemmaRecord>>(
                              trees.size(), [&](std::size_t i) { return verify_tree(trees[i]); })
                        : detail::map_parallel<std::vector<LemmaRecord>>(
                              trees.size(), jobs, [&](std::size_t i) { return verify_tree(trees[i]); });
    const auto moves = jobs == 1 ? exchange_sweep_serial(trees) : exchange_sweep_parallel(trees, jobs);
    report.moves_checked += moves.size();

    for (std::size_t i = 0; i < trees.size(); ++i) {
      auto& records = per_tree[i];
      std::size_t total = 0;
      std::string failure;
      for (const MoveCheck& check : moves) {
        if (check.tree_index != i) continue;
        ++total;
        if (failure.empty() && !check.report.passed) {
          failure = "move +" + to_string(check.move.add) + " -" + to_string(check.move.remove) + ": " +
                    check.report.failed_clause;
        }
      }
      LemmaRecord r = record(trees[i], poset.nodes[i].code, "exchange lemma", failure);
      if (failure.empty()) r.detail = std::to_string(total) + " moves";
      records.push_back(std::move(r));
      for (auto& rec : records) {
        if (!rec.passed && !report.first_counterexample) report.first_counterexample = to_elist(trees[i]);
        report.records.push_back(std::move(rec));
      }
    }
    for (auto& rec : verify_classes(poset)) report.records.push_back(std::move(rec));
  }
  for (const auto& rec : report.records) (rec.passed ? report.passed : report.failed) += 1;
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    records.push_back({{"vertices", r.vertices},
                       {"code", r.code},
                       {"lemma", r.lemma},
                       {"passed", r.passed},
                       {"detail", r.detail}});
  }
  nlohmann::json out{{"max_n", report.max_n},
                     {"classes_checked", report.classes_checked},
                     {"moves_checked", report.moves_checked},
                     {"passed", report.passed},
                     {"failed", report.failed},
                     {"ok", report.ok()},
                     {"records", records}};
  out["first_counterexample"] =
      report.first_counterexample ? nlohmann::json(*report.first_counterexample) : nlohmann::json(nullptr);
  return out;
}

std::string summarize(const VerifyReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_lemma;  // pass, fail
  std::vector<std::string> order;
  for (const auto& r : report.records) {
    if (!by_lemma.count(r.lemma)) order.push_back(r.lemma);
    auto& [pass, fail] = by_lemma[r.lemma];
    (r.passed ? pass : fail) += 1;
  }
  std::ostringstream out;
  out << "checked " << report.classes_checked << " classes of invertible trees on 2.." << 2 * report.max_n
      << " vertices, " << report.moves_checked << " exchange moves\n";
  for (const auto& lemma : order) {
    const auto& [pass, fail] = by_lemma[lemma];
    out << "  " << (fail == 0 ? "PASS " : "FAIL ") << lemma << " (" << pass << "/" << pass + fail << ")\n";
  }
  for (const auto& r : report.records) {
    if (r.passed) continue;
    out << "first failure: " << r.lemma << " on " << r.vertices << " vertices [" << r.code << "]: " << r.detail
        << '\n';
    break;
  }
  if (report.first_counterexample) out << "counterexample:\n" << *report.first_counterexample;
  out << (report.ok() ? "PASS" : "FAIL") << ": " << report.passed << " passed, " << report.failed << " failed\n";
  return out.str();
}

}  // namespace invtree
