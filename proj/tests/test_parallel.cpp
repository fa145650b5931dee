#include <doctest.h>

#include "invtree/enumeration.hpp"
#include "invtree/io.hpp"
#include "invtree/poset.hpp"
#include "invtree/sweep.hpp"
#include "invtree/verify.hpp"

using namespace invtree;

namespace {

std::vector<Tree> invertible(int two_n) {
  std::vector<Tree> out;
  for (const auto& [_, t] : enumerate_invertible(two_n, 14)) out.push_back(t);
  return out;
}

bool same_checks(const std::vector<MoveCheck>& a, const std::vector<MoveCheck>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].tree_index != b[i].tree_index || !(a[i].move == b[i].move) ||
        a[i].report.passed != b[i].report.passed ||
        a[i].report.inverse_edges_after != b[i].report.inverse_edges_after ||
        a[i].report.median_after != b[i].report.median_after) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference") {
  const auto trees = invertible(12);
  const auto targets = one_step_targets_serial(trees);
  const auto medians = medians_serial(trees);
  const auto sweep = exchange_sweep_serial(trees);
  for (int jobs : {0, 1, 2, 3, 8}) {
    CAPTURE(jobs);
    CHECK(one_step_targets_parallel(trees, jobs) == targets);
    CHECK(medians_parallel(trees, jobs) == medians);
    CHECK(same_checks(exchange_sweep_parallel(trees, jobs), sweep));
  }
  CHECK(effective_jobs(3) == 3);
  CHECK(effective_jobs(0) >= 1);
}

TEST_CASE("poset and verification output is independent of the job count") {
  const std::string serial = to_json(build_poset(5, 1)).dump();
  CHECK(to_json(build_poset(5, 4)).dump() == serial);
  const std::string report = to_json(run_verification(5, 1)).dump();
  CHECK(to_json(run_verification(5, 3)).dump() == report);
}
