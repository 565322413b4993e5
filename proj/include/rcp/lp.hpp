#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

// Solver layer: a built-in exact LP/MILP solver for desk-scale problems plus
// a bridge to an external solver exchanging LP-format files.
namespace rcp::lp {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { le, eq, ge };

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // (column id, coefficient)
  Sense sense = Sense::le;
  double rhs = 0.0;
};

struct Problem {
  bool maximize = false;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<char> integer;
  std::vector<std::string> names;
  std::vector<Row> rows;

  int add_column(double lb, double ub, double obj, bool is_integer,
                 std::string name = {});
  void add_row(Row row);
  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class Status { optimal, infeasible, unbounded, limit, error };

struct Solution {
  Status status = Status::error;
  double objective = 0.0;
  std::vector<double> values;
  std::vector<double> reduced_costs;  // filled by the builtin LP solve
  long nodes = 0;
  long iterations = 0;
  std::string message;
};

struct Limits {
  double time_sec = 1e30;
  long max_nodes = 1000000;  // branch-and-bound node cap
  double mip_abs_gap = 1e-9;
};

struct SolverHandle {
  enum class Backend { builtin, external };
  Backend backend = Backend::builtin;
  // Command template with {in} and {out} placeholders, e.g.
  //   python3 tools/external_solve.py {in} {out}
  std::string command_template;
  Limits limits;
};

// Builtin: bounded revised simplex (Bland fallback after 1000 degenerate
// pivots, ties broken by lowest column id).
Solution solve_lp(const Problem& problem, const SolverHandle& handle);

// Builtin: best-bound branch and bound, branching on the most fractional
// integer column.
Solution solve_milp(const Problem& problem, const SolverHandle& handle);

// CPLEX LP text format (documented subset: objective, constraints, bounds,
// generals/binaries sections).
void write_lp(const Problem& problem, std::ostream& os);
void write_lp_file(const Problem& problem, const std::string& path);

// External bridge: writes the LP file, runs the command template, reads the
// solution file ("status"/"objective"/"<name> <value>" lines).
Solution solve_external(const Problem& problem, const SolverHandle& handle,
                        bool as_milp);

}  // namespace rcp::lp
