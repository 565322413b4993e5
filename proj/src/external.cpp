#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "rcp/lp.hpp"

// External solver bridge. The command template must contain {in} and {out}
// placeholders; the solution file format is:
//   status optimal|infeasible|unbounded|limit
//   objective <value>
//   <column name> <value>            (one line per nonzero or all columns)
namespace rcp::lp {

namespace {

std::string substitute(std::string tmpl, const std::string& key, const std::string& val) {
  auto pos = tmpl.find(key);
  while (pos != std::string::npos) {
    tmpl.replace(pos, key.size(), val);
    pos = tmpl.find(key, pos + val.size());
  }
  return tmpl;
}

std::string temp_path(const char* suffix) {
  static int counter = 0;
  const char* dir = std::getenv("TMPDIR");
  std::ostringstream os;
  os << (dir ? dir : "/tmp") << "/rcpcut_" << getpid() << "_" << counter++ << suffix;
  return os.str();
}

}  // namespace

Solution solve_external(const Problem& problem, const SolverHandle& handle, bool as_milp) {
  Solution sol;
  if (handle.command_template.empty()) {
    sol.status = Status::error;
    sol.message = "external backend selected but no command template configured";
    return sol;
  }
  Problem p = problem;
  if (!as_milp) std::fill(p.integer.begin(), p.integer.end(), 0);
  std::string in = temp_path(".lp");
  std::string out = temp_path(".sol");
  write_lp_file(p, in);

  std::string cmd = substitute(substitute(handle.command_template, "{in}", in), "{out}", out);
  int rc = std::system(cmd.c_str());
  if (rc != 0) {
    sol.status = Status::error;
    sol.message = "external solver command failed: " + cmd;
    std::remove(in.c_str());
    return sol;
  }
  std::ifstream f(out);
  if (!f) {
    sol.status = Status::error;
    sol.message = "external solver produced no solution file";
    std::remove(in.c_str());
    return sol;
  }
  std::unordered_map<std::string, int> name_to_col;
  for (int j = 0; j < p.num_cols(); ++j) name_to_col[p.names[j]] = j;
  sol.values.assign(p.num_cols(), 0.0);
  std::string key;
  while (f >> key) {
    if (key == "status") {
      std::string st;
      f >> st;
      if (st == "optimal") sol.status = Status::optimal;
      else if (st == "infeasible") sol.status = Status::infeasible;
      else if (st == "unbounded") sol.status = Status::unbounded;
      else if (st == "limit") sol.status = Status::limit;
      else sol.status = Status::error;
    } else if (key == "objective") {
      f >> sol.objective;
    } else {
      double v;
      if (!(f >> v)) break;
      auto it = name_to_col.find(key);
      if (it != name_to_col.end()) sol.values[it->second] = v;
    }
  }
  std::remove(in.c_str());
  std::remove(out.c_str());
  return sol;
}

}  // namespace rcp::lp
