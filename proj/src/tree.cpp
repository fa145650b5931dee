#include "invtree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "invtree/error.hpp"

namespace invtree {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw Error(Errc::same_vertex, "loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)), adjacency_(order < 0 ? 0 : order) {
  if (order < 0) {
    throw Error(Errc::invalid_vertex, "negative vertex count");
  }
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw Error(Errc::invalid_vertex, "edge " + to_string(e) + " out of range for n=" +
                                            std::to_string(order));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(Errc::parse_error, "duplicate edge");
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::has_edge(Edge e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Graph::is_connected() const {
  if (order_ == 0) return true;
  std::vector<char> seen(order_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == order_;
}

Tree Tree::from_edges(int order, std::vector<Edge> edges) {
  if (order < 1) {
    throw Error(Errc::not_a_tree, "a tree needs at least one vertex");
  }
  if (static_cast<int>(edges.size()) != order - 1) {
    throw Error(Errc::not_a_tree, "expected " + std::to_string(order - 1) + " edges, got " +
                                      std::to_string(edges.size()));
  }
  Graph g = [&] {
    try {
      return Graph(order, std::move(edges));
    } catch (const Error& err) {
      if (err.code() == Errc::invalid_vertex) throw;
      throw Error(Errc::not_a_tree, err.what());
    }
  }();
  if (!g.is_connected()) {
    throw Error(Errc::not_a_tree, "graph is disconnected");
  }
  return Tree(std::move(g));
}

// --- Matching ----------------------------------------------------------------

Matching::Matching(int order, std::vector<Edge> pairs) : pairs_(std::move(pairs)), mate_(order, -1) {
  for (auto& e : pairs_) {
    e = make_edge(e.u, e.v);
    if (e.v >= order || e.u < 0) {
      throw Error(Errc::invalid_vertex, "matched pair " + to_string(e) + " out of range");
    }
    if (mate_[e.u] != -1 || mate_[e.v] != -1) {
      throw Error(Errc::parse_error, "matching pairs are not disjoint at " + to_string(e));
    }
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

bool Matching::contains(Edge e) const noexcept {
  return e.u >= 0 && e.u < order() && mate_[e.u] == e.v;
}

bool Matching::is_perfect() const noexcept {
  return std::none_of(mate_.begin(), mate_.end(), [](Vertex m) { return m < 0; });
}

std::vector<Edge> VertexPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    out.push_back(make_edge(vertices[i - 1], vertices[i]));
  }
  return out;
}

// --- parsing -----------------------------------------------------------------

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::pair<int, std::vector<Edge>> parse_elist(std::string_view text) {
  std::optional<int> order;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    line = line.substr(0, line.find('#'));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
    };
    if (!order) {
      int n = 0;
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 1) fail("expected vertex count");
      order = n;
      continue;
    }
    int a = 0, b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      fail("expected \"u v\"");
    }
    if (a < 0 || b < 0 || a >= *order || b >= *order) fail("vertex out of range");
    if (a == b) throw Error(Errc::not_a_tree, "line " + std::to_string(line_no) + ": self-loop");
    edges.push_back(make_edge(a, b));
  }
  if (!order) throw Error(Errc::parse_error, "missing vertex count");
  return {*order, std::move(edges)};
}

}  // namespace

Tree parse_tree(std::string_view text) {
  auto [order, edges] = parse_elist(text);
  return Tree::from_edges(order, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  auto [order, edges] = parse_elist(text);
  return Graph(order, std::move(edges));
}

// --- matchings ---------------------------------------------------------------

std::optional<Matching> perfect_matching(const Tree& tree) {
  const int n = tree.order();
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = tree.degree(v);
  std::vector<Edge> pairs;
  int remaining = n;

  auto kill = [&](Vertex x) {
    alive[x] = 0;
    --remaining;
    for (Vertex y : tree.neighbors(x)) {
      if (alive[y]) --degree[y];
    }
  };

  while (remaining > 0) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (degree[v] == 0) return std::nullopt;
      if (degree[v] == 1) leaves.push_back(v);
    }
    for (Vertex leaf : leaves) {
      if (!alive[leaf]) continue;
      Vertex partner = -1;
      for (Vertex y : tree.neighbors(leaf)) {
        if (alive[y]) partner = y;
      }
      if (partner < 0) return std::nullopt;  // its neighbor was taken this round
      pairs.push_back(make_edge(leaf, partner));
      kill(leaf);
      kill(partner);
    }
  }
  return Matching(n, std::move(pairs));
}

Involution involution(const Tree& tree, const Matching& matching) {
  if (matching.order() != tree.order() || !matching.is_perfect()) {
    throw Error(Errc::not_perfect, "matching does not cover every vertex");
  }
  Involution phi;
  phi.perm_.resize(tree.order());
  for (const Edge& e : matching.pairs()) {
    if (!tree.has_edge(e)) {
      throw Error(Errc::not_perfect, "matched pair " + to_string(e) + " is not a tree edge");
    }
    phi.perm_[e.u] = e.v;
    phi.perm_[e.v] = e.u;
  }
  return phi;
}

Graph apply_involution(const Graph& graph, const Involution& phi) {
  std::vector<Edge> edges;
  edges.reserve(graph.size());
  for (const Edge& e : graph.edges()) edges.push_back(phi(e));
  return Graph(graph.order(), std::move(edges));
}

Tree apply_involution(const Tree& tree, const Involution& phi) {
  std::vector<Edge> edges;
  edges.reserve(tree.size());
  for (const Edge& e : tree.edges()) edges.push_back(phi(e));
  return Tree::from_edges(tree.order(), std::move(edges));
}

// --- paths -------------------------------------------------------------------

VertexPath tree_path(const Tree& tree, Vertex a, Vertex b) {
  const int n = tree.order();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error(Errc::invalid_vertex, "path endpoint out of range");
  }
  if (a == b) throw Error(Errc::same_vertex, "path endpoints coincide");

  std::vector<Vertex> parent(n, -1);
  parent[b] = b;
  std::vector<Vertex> stack{b};
  while (!stack.empty() && parent[a] < 0) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : tree.neighbors(x)) {
      if (parent[y] < 0) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  VertexPath path;
  for (Vertex x = a; x != b; x = parent[x]) path.vertices.push_back(x);
  path.vertices.push_back(b);
  return path;
}

bool is_alternating(const VertexPath& path, const Matching& matching) {
  const std::size_t m = path.edge_count();
  if (m % 2 == 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    bool matched = matching.contains(make_edge(path.vertices[i], path.vertices[i + 1]));
    if (matched != (i % 2 == 0)) return false;
  }
  return true;
}

// --- canonical codes ---------------------------------------------------------

namespace {

std::vector<Vertex> centers(const Tree& tree) {
  const int n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex y : tree.neighbors(leaf)) {
        if (--degree[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& tree, Vertex root) {
  const int n = tree.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, -1);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : tree.neighbors(order[i])) {
      if (parent[y] < 0) {
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code.assign("(");
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    if (*it != root) child_codes[parent[*it]].push_back(std::move(code));
  }
  return code;
}

}  // namespace

CanonicalCode canonical_code(const Tree& tree) {
  auto c = centers(tree);
  std::string best = rooted_code(tree, c.front());
  if (c.size() == 2) best = std::min(best, rooted_code(tree, c.back()));
  return CanonicalCode{std::move(best)};
}

Tree tree_from_code(const CanonicalCode& code) {
  std::vector<Vertex> stack;
  std::vector<Edge> edges;
  int next = 0;
  for (char ch : code.code) {
    if (ch == '(') {
      if (!stack.empty()) edges.push_back(Edge{stack.back(), next});
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw Error(Errc::parse_error, "unbalanced canonical code");
      stack.pop_back();
    } else {
      throw Error(Errc::parse_error, "unexpected character in canonical code");
    }
  }
  if (!stack.empty() || next == 0) throw Error(Errc::parse_error, "unbalanced canonical code");
  return Tree::from_edges(next, std::move(edges));
}

Tree canonical_form(const Tree& tree) { return tree_from_code(canonical_code(tree)); }

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && a.max_degree() == b.max_degree() &&
         canonical_code(a) == canonical_code(b);
}

// --- constructors ------------------------------------------------------------

Tree make_path(int order) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < order; ++v) edges.push_back(Edge{v - 1, v});
  return Tree::from_edges(order, std::move(edges));
}

Tree make_star(int order) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < order; ++v) edges.push_back(Edge{0, v});
  return Tree::from_edges(order, std::move(edges));
}

Tree rooted_product_k2(const Tree& base) {
  const int n = base.order();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{v, n + v});
  return Tree::from_edges(2 * n, std::move(edges));
}

Tree elongated_caterpillar(int n) {
  if (n < 1) throw Error(Errc::invalid_vertex, "elongated caterpillar needs n >= 1");
  return rooted_product_k2(make_path(n));
}

bool is_path(const Tree& tree) noexcept { return tree.max_degree() <= 2; }

std::vector<Tree> induced_components(const Tree& tree, const std::vector<char>& keep) {
  const int n = tree.order();
  std::vector<int> component(n, -1);
  std::vector<Tree> out;
  for (Vertex start = 0; start < n; ++start) {
    if (!keep[start] || component[start] >= 0) continue;
    std::vector<Vertex> members{start};
    component[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex y : tree.neighbors(members[i])) {
        if (keep[y] && component[y] < 0) {
          component[y] = component[start];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Edge> edges;
    auto local = [&](Vertex x) {
      return static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
    };
    for (Vertex x : members) {
      for (Vertex y : tree.neighbors(x)) {
        if (x < y && keep[y]) edges.push_back(Edge{local(x), local(y)});
      }
    }
    out.push_back(Tree::from_edges(static_cast<int>(members.size()), std::move(edges)));
  }
  return out;
}

}  // namespace invtree
