#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcp {

struct Mode {
  int duration = 0;
  std::vector<int> renewable_use;     // one entry per renewable pool
  std::vector<int> nonrenewable_use;  // one entry per nonrenewable pool
};

struct Job {
  int id = -1;
  int project_id = 0;
  std::vector<Mode> modes;
  std::vector<int> successors;  // direct successors, global job ids
};

struct ResourcePool {
  std::string name;
  int capacity = 0;
};

struct Project {
  int id = 0;
  int release_date = 0;            // sigma_p
  std::vector<int> job_ids;
  int source_job = -1;
  int sink_job = -1;               // a_p
  int cpd = 0;                     // lambda_p, filled by the precedence pass
  int upper_bound = -1;            // beta_p, -1 until supplied or defaulted
};

struct Instance {
  std::string name;
  std::vector<Project> projects;
  std::vector<Job> jobs;
  std::vector<ResourcePool> renewables;
  std::vector<ResourcePool> nonrenewables;

  int num_jobs() const { return static_cast<int>(jobs.size()); }
  std::vector<std::pair<int, int>> precedence_arcs() const;
};

enum class Format { psplib_sm, psplib_mm, mmlib, mista };

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

Instance parse_instance(const std::string& path, Format format);

// Extension plus header sniffing; throws when the file matches nothing known.
Format sniff_format(const std::string& path);

struct Diagnostic {
  std::string invariant;
  std::string entity;
  std::string detail;
};

std::vector<Diagnostic> validate(const Instance& instance);

// Canonical JSON dump with stable key order; parse(dump(x)) == x.
void write_canonical_json(const Instance& instance, std::ostream& os);
std::string canonical_json(const Instance& instance);
Instance parse_canonical_json(std::istream& is);

namespace detail {
Instance parse_psplib(const std::string& path, bool multi_mode, bool mmlib);
Instance parse_mista(const std::string& path);
}  // namespace detail

}  // namespace rcp
