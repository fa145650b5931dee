#pragma once

#include <string>

#include <json.hpp>

#include "invtree/enumeration.hpp"
#include "invtree/inverse.hpp"
#include "invtree/poset.hpp"
#include "invtree/spectral.hpp"

namespace invtree {

/// Fixed 7-decimal rendering used for every printed real.
std::string format_real(double value);

/// `.elist` text: vertex count, then one "u v" line per edge.
std::string to_elist(const Graph& graph);
/// As to_elist with a trailing sign column ("+1" / "-1").
std::string to_signed_elist(const SignedGraph& graph);

nlohmann::json to_json(const Graph& graph);
/// {code, n, edges}
nlohmann::json to_json(const CanonicalCode& code, const Tree& tree);
/// Array of {code, n, edges} in code order.
nlohmann::json to_json(const TreeClassSet& classes);
/// {n, edges: [{u, v, sign}]}
nlohmann::json to_json(const SignedGraph& graph);
/// Row arrays.
nlohmann::json to_json(const IntMatrix& matrix);
/// {values, median, tol}; median is null for an odd vertex count.
nlohmann::json to_json(const Spectrum& spectrum);
/// {n, nodes: [{code, edges, median, maximal, minimal}], covers, mobius}
nlohmann::json to_json(const HassePoset& poset);

/// Negative edges dashed, positive solid; edges of `matching` (the images of
/// matched edges, which phi fixes) also bold.
std::string to_dot(const SignedGraph& graph, const Matching* matching = nullptr);
std::string to_dot(const Graph& graph, const std::string& name = "G");
/// Hasse diagram drawn bottom-up; nodes labeled with code and median.
std::string to_dot(const HassePoset& poset);

}  // namespace invtree
