#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "rcp/lp.hpp"

// Builtin simplex / branch-and-bound vs the external bridge (scipy HiGHS)
// on a fixed suite of random problems.
using namespace rcp::lp;

namespace {

std::string external_cmd() {
  if (const char* env = std::getenv("RCPCUT_EXTERNAL_SOLVER")) return env;
  return std::string("python3 ") + RCP_TOOLS_DIR + "/external_solve.py {in} {out}";
}

Problem random_problem(std::mt19937& rng, bool with_integers) {
  std::uniform_real_distribution<double> cd(-5.0, 5.0);
  std::uniform_real_distribution<double> ad(-3.0, 3.0);
  std::uniform_int_distribution<int> nd(3, 20);
  std::uniform_int_distribution<int> md(2, 12);
  Problem p;
  int n = nd(rng), m = md(rng);
  for (int j = 0; j < n; ++j) {
    bool integer = with_integers && (rng() % 2 == 0);
    if (integer)
      p.add_column(0, 1 + static_cast<double>(rng() % 4), cd(rng), true);
    else
      p.add_column(0, 8, cd(rng), false);
  }
  for (int i = 0; i < m; ++i) {
    Row r;
    for (int j = 0; j < n; ++j) {
      double a = ad(rng);
      if (std::abs(a) > 1.2) r.coeffs.emplace_back(j, a);
    }
    if (r.coeffs.empty()) r.coeffs.emplace_back(static_cast<int>(rng() % n), 1.0);
    r.sense = (rng() % 4 == 0) ? Sense::ge : Sense::le;
    // keep rows satisfiable around the origin
    r.rhs = r.sense == Sense::le ? 4.0 + static_cast<double>(rng() % 6)
                                 : -4.0 - static_cast<double>(rng() % 6);
    p.add_row(r);
  }
  p.maximize = rng() % 2 == 0;
  return p;
}

}  // namespace

TEST_CASE("builtin and external backends agree on 20 LPs and 20 MILPs") {
  SolverHandle b;
  SolverHandle e;
  e.backend = SolverHandle::Backend::external;
  e.command_template = external_cmd();

  std::mt19937 rng(20240917);
  int lp_compared = 0, milp_compared = 0;
  for (int rep = 0; rep < 20; ++rep) {
    Problem p = random_problem(rng, false);
    auto sb = solve_lp(p, b);
    auto se = solve_lp(p, e);
    REQUIRE(se.status != Status::error);
    CHECK(sb.status == se.status);
    if (sb.status == Status::optimal && se.status == Status::optimal) {
      double scale = std::max({1.0, std::abs(sb.objective), std::abs(se.objective)});
      CHECK(std::abs(sb.objective - se.objective) / scale <= 1e-5);
      ++lp_compared;
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    Problem p = random_problem(rng, true);
    auto sb = solve_milp(p, b);
    auto se = solve_milp(p, e);
    REQUIRE(se.status != Status::error);
    CHECK(sb.status == se.status);
    if (sb.status == Status::optimal && se.status == Status::optimal) {
      double scale = std::max({1.0, std::abs(sb.objective), std::abs(se.objective)});
      CHECK(std::abs(sb.objective - se.objective) / scale <= 1e-5);
      ++milp_compared;
    }
  }
  CHECK(lp_compared >= 15);
  CHECK(milp_compared >= 15);
}
