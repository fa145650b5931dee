#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invtree/enumeration.hpp"

namespace invtree {

struct LemmaRecord {
  int vertices = 0;
  std::string code;   // "*" for checks over a whole class
  std::string lemma;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  int max_n = 0;
  std::size_t classes_checked = 0;
  std::size_t moves_checked = 0;
  std::vector<LemmaRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// `.elist` text of the first failing tree, if any.
  std::optional<std::string> first_counterexample;

  bool ok() const noexcept { return failed == 0; }
};

/// Every per-tree lemma check on one invertible tree: alternating-path
/// lemma, Godsil clauses, inverse identity, edge criterion, length-3
/// correspondence, reciprocity, self-inverse vs rooted product, and the
/// non-minimality witness.
std::vector<LemmaRecord> verify_tree(const Tree& tree);

/// All checks over the invertible trees on 2, 4, ..., 2 max_n vertices,
/// including exchange moves and the poset-level classifications. The report
/// is identical for every `jobs` value. Throws Errc::bound_exceeded.
VerifyReport run_verification(int max_n, int jobs = 1, int bound = max_vertices_bound());

nlohmann::json to_json(const VerifyReport& report);
/// Human-readable summary: per-lemma counts and the first failure.
std::string summarize(const VerifyReport& report);

}  // namespace invtree
