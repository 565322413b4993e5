#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <vector>

#include "rcp/lp.hpp"

// Best-bound branch and bound on top of the builtin simplex. Branching
// variable: most fractional integer column, lowest id on ties.
namespace rcp::lp {

namespace {

constexpr double kIntTol = 1e-6;

struct Node {
  double bound;  // LP bound in minimize orientation
  long seq;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

int most_fractional(const Problem& p, const std::vector<double>& x) {
  int best = -1;
  double best_score = kIntTol;  // strict > keeps the lowest id on ties
  for (int j = 0; j < p.num_cols(); ++j) {
    if (!p.integer[j]) continue;
    double f = x[j] - std::floor(x[j]);
    double frac = std::min(f, 1.0 - f);
    if (frac > best_score) {
      best_score = frac;
      best = j;
    }
  }
  return best;
}

}  // namespace

Solution solve_milp(const Problem& problem, const SolverHandle& handle) {
  if (handle.backend == SolverHandle::Backend::external)
    return solve_external(problem, handle, /*as_milp=*/true);

  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const double sign = problem.maximize ? -1.0 : 1.0;
  SolverHandle lp_handle = handle;
  lp_handle.backend = SolverHandle::Backend::builtin;

  Problem work = problem;
  Solution best;
  best.status = Status::infeasible;
  bool have_incumbent = false;
  double incumbent = kInf;  // minimize orientation

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long seq = 0;
  long nodes = 0;

  {
    Node root{-kInf, seq++, problem.lower, problem.upper};
    root.bound = -kInf;
    open.push(std::move(root));
  }

  bool hit_limit = false;
  while (!open.empty()) {
    if (nodes >= handle.limits.max_nodes || elapsed() > handle.limits.time_sec) {
      hit_limit = true;
      break;
    }
    Node node = open.top();
    open.pop();
    if (have_incumbent && node.bound >= incumbent - handle.limits.mip_abs_gap) break;

    work.lower = node.lower;
    work.upper = node.upper;
    lp_handle.limits.time_sec = handle.limits.time_sec - elapsed();
    Solution rel = solve_lp(work, lp_handle);
    ++nodes;
    if (rel.status == Status::limit) {
      hit_limit = true;
      break;
    }
    if (rel.status == Status::infeasible) continue;
    if (rel.status == Status::unbounded) {
      if (!have_incumbent) {
        Solution s;
        s.status = Status::unbounded;
        s.nodes = nodes;
        return s;
      }
      continue;
    }
    if (rel.status != Status::optimal) {
      Solution s;
      s.status = Status::error;
      s.message = rel.message;
      return s;
    }
    double bound = sign * rel.objective;
    if (have_incumbent && bound >= incumbent - handle.limits.mip_abs_gap) continue;

    int frac = most_fractional(problem, rel.values);
    if (frac < 0) {
      if (!have_incumbent || bound < incumbent) {
        incumbent = bound;
        have_incumbent = true;
        best = rel;
        for (int j = 0; j < problem.num_cols(); ++j)
          if (problem.integer[j]) best.values[j] = std::round(best.values[j]);
        best.objective = 0.0;
        for (int j = 0; j < problem.num_cols(); ++j)
          best.objective += problem.objective[j] * best.values[j];
      }
      continue;
    }

    double v = rel.values[frac];
    Node down{bound, seq++, node.lower, node.upper};
    down.upper[frac] = std::floor(v);
    Node up{bound, seq++, node.lower, node.upper};
    up.lower[frac] = std::ceil(v);
    open.push(std::move(down));
    open.push(std::move(up));
  }

  best.nodes = nodes;
  if (have_incumbent)
    best.status = hit_limit ? Status::limit : Status::optimal;
  else
    best.status = hit_limit ? Status::limit : Status::infeasible;
  return best;
}

}  // namespace rcp::lp
