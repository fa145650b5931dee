// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 invalid input, 3 bound exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "invtree/charpoly.hpp"
#include "invtree/enumeration.hpp"
#include "invtree/error.hpp"
#include "invtree/exchange.hpp"
#include "invtree/inverse.hpp"
#include "invtree/io.hpp"
#include "invtree/poset.hpp"
#include "invtree/spectral.hpp"
#include "invtree/verify.hpp"

namespace fs = std::filesystem;
using namespace invtree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

Tree load_tree(const std::string& path) { return parse_tree(read_file(path)); }

// "u,v" -> edge
Edge parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::parse_error, "expected u,v but got '" + text + "'");
  try {
    std::size_t used_u = 0, used_v = 0;
    const int u = std::stoi(text.substr(0, comma), &used_u);
    const std::string rest = text.substr(comma + 1);
    const int v = std::stoi(rest, &used_v);
    if (used_u != comma || used_v != rest.size()) throw std::invalid_argument(text);
    return make_edge(u, v);
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, "expected u,v but got '" + text + "'");
  }
}

void check_bound(int vertices, int bound) {
  if (vertices > bound) {
    throw Error(Errc::bound_exceeded, std::to_string(vertices) + " vertices exceeds the bound of " +
                                          std::to_string(bound) + " (set INVTREE_MAX_VERTICES to raise it)");
  }
}

std::string move_line(const ExchangeMove& m) {
  return "add " + to_string(m.add) + " remove " + to_string(m.remove) + " (inverse edge " +
         to_string(m.source_inverse_edge) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverses of trees with perfect matchings"};
  app.require_subcommand(1);
  int bound = max_vertices_bound();
  app.add_option("--max-vertices", bound, "Largest vertex count enumerated (default 14 or INVTREE_MAX_VERTICES)")
      ->check(CLI::Range(1, 64));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of trees on N vertices");
  int vertices = 0;
  bool invertible_only = false;
  std::string enum_out, enum_format = "elist";
  enumerate->add_option("--vertices", vertices, "Vertex count")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--invertible-only", invertible_only, "Keep only trees with a perfect matching");
  enumerate->add_option("--out", enum_out, "Directory for the output files");
  enumerate->add_option("--format", enum_format, "elist (one file per class) or json")
      ->check(CLI::IsMember({"elist", "json"}));

  // invert
  auto* invert = app.add_subcommand("invert", "Inverse graph of an invertible tree");
  std::string invert_file, invert_format = "elist";
  bool invert_signed = false;
  invert->add_option("file", invert_file, "Tree in .elist format")->required();
  invert->add_flag("--signed", invert_signed, "Keep edge signs");
  invert->add_option("--format", invert_format, "elist, dot, json or matrix")
      ->check(CLI::IsMember({"elist", "dot", "json", "matrix"}));

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Certified eigenvalues of a tree");
  std::string spectrum_file;
  bool median_only = false, spectrum_json = false;
  double tol = kDefaultTolerance;
  spectrum_cmd->add_option("file", spectrum_file, "Tree in .elist format")->required();
  spectrum_cmd->add_flag("--median", median_only, "Print only the median eigenvalue");
  spectrum_cmd->add_flag("--json", spectrum_json, "Emit {values, median, tol}");
  spectrum_cmd->add_option("--tol", tol, "Isolating interval width")->check(CLI::PositiveNumber);

  // exchange
  auto* exchange = app.add_subcommand("exchange", "Apply a tree-exchange move, or list the valid ones");
  std::string exchange_file, add_text, remove_text;
  exchange->add_option("file", exchange_file, "Tree in .elist format")->required();
  auto* add_opt = exchange->add_option("--add", add_text, "Inverse edge e, or phi(e), as u,v");
  auto* remove_opt = exchange->add_option("--remove", remove_text, "Non-matching tree edge f as x,y");
  add_opt->needs(remove_opt);
  remove_opt->needs(add_opt);

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of the exchange order on 2n vertices");
  int poset_n = 0, poset_jobs = 1;
  std::string poset_format = "dot", poset_out;
  poset_cmd->add_option("--n", poset_n, "Half the vertex count")->required()->check(CLI::PositiveNumber);
  poset_cmd->add_option("--format", poset_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  poset_cmd->add_option("--out", poset_out, "Output file (default stdout)");
  poset_cmd->add_option("--jobs", poset_jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Machine-check every lemma on all invertible trees");
  int max_n = 0, verify_jobs = 1;
  bool verify_json = false;
  verify->add_option("--max-n", max_n, "Check 2, 4, ..., 2 max-n vertices")->required()->check(CLI::PositiveNumber);
  verify->add_option("--jobs", verify_jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_json, "Emit the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*enumerate) {
      check_bound(vertices, bound);
      const TreeClassSet classes =
          invertible_only ? enumerate_invertible(vertices, bound) : enumerate_trees(vertices, bound);
      if (!enum_out.empty()) {
        std::error_code ec;
        fs::create_directories(enum_out, ec);
        if (ec) throw Error(Errc::io_error, "cannot create " + enum_out);
        if (enum_format == "json") {
          write_file(fs::path(enum_out) / ("trees_" + std::to_string(vertices) + ".json"),
                     to_json(classes).dump(2) + "\n");
        } else {
          int index = 0;
          for (const auto& [code, tree] : classes) {
            std::ostringstream name;
            name << "tree_" << vertices << "_" << std::setw(4) << std::setfill('0') << index++ << ".elist";
            write_file(fs::path(enum_out) / name.str(), "# code " + code.code + "\n" + to_elist(tree));
          }
        }
      } else if (enum_format == "json") {
        std::cout << to_json(classes).dump(2) << "\n";
        std::cerr << classes.size() << (classes.size() == 1 ? " class\n" : " classes\n");
        return kExitOk;
      }
      std::cout << classes.size() << (classes.size() == 1 ? " class\n" : " classes\n");
      return kExitOk;
    }

    if (*invert) {
      const Tree tree = load_tree(invert_file);
      const SignedGraph inverse = inverse_signed_graph(tree);
      if (invert_format == "matrix") {
        std::ostringstream out;
        const IntMatrix m = signed_adjacency_matrix(inverse);
        for (int i = 0; i < m.rows(); ++i) {
          for (int j = 0; j < m.cols(); ++j) {
            const BigInt& x = m(i, j);
            out << (j ? " " : "") << (invert_signed ? x : BigInt(abs(x))).get_str();
          }
          out << '\n';
        }
        std::cout << out.str();
      } else if (invert_format == "dot") {
        const auto matching = perfect_matching(tree);
        std::cout << (invert_signed ? to_dot(inverse, &*matching) : to_dot(underlying_graph(inverse), "inverse"));
      } else if (invert_format == "json") {
        std::cout << (invert_signed ? to_json(inverse) : to_json(underlying_graph(inverse))).dump(2) << "\n";
      } else {
        std::cout << (invert_signed ? to_signed_elist(inverse) : to_elist(underlying_graph(inverse)));
      }
      return kExitOk;
    }

    if (*spectrum_cmd) {
      const Tree tree = load_tree(spectrum_file);
      const Spectrum s = spectrum_of(char_poly(tree), tol);
      if (spectrum_json) {
        std::cout << to_json(s).dump(2) << "\n";
      } else if (median_only) {
        if (tree.order() % 2 != 0) throw Error(Errc::odd_order, "median needs an even vertex count");
        std::cout << format_real(s.values[tree.order() / 2]) << "\n";
      } else {
        for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) std::cout << format_real(*it) << "\n";
      }
      return kExitOk;
    }

    if (*exchange) {
      const Tree tree = load_tree(exchange_file);
      if (add_text.empty()) {
        for (const auto& m : exchange_candidates(tree)) std::cout << move_line(m) << "\n";
        return kExitOk;
      }
      const ExchangeMove move = make_move(tree, parse_pair(add_text), parse_pair(remove_text));
      const Tree result = tree_exchange(tree, move);
      const ExchangeReport report = verify_exchange_lemma(tree, move);
      std::cout << "# " << move_line(move) << "\n"
                << "# inverse edges " << report.inverse_edges_before << " -> " << report.inverse_edges_after
                << ", median " << format_real(report.median_before) << " -> " << format_real(report.median_after)
                << "\n"
                << to_elist(result);
      return report.passed ? kExitOk : kExitFailed;
    }

    if (*poset_cmd) {
      check_bound(2 * poset_n, bound);
      const HassePoset poset = build_poset(poset_n, poset_jobs, bound);
      emit(poset_out, poset_format == "json" ? to_json(poset).dump(2) + "\n" : to_dot(poset));
      return kExitOk;
    }

    if (*verify) {
      check_bound(2 * max_n, bound);
      const VerifyReport report = run_verification(max_n, verify_jobs, bound);
      std::cout << (verify_json ? to_json(report).dump(2) + "\n" : summarize(report));
      return report.ok() ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::bound_exceeded ? kExitBound : kExitInput;
  }
  return kExitOk;
}
