#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcp/instance.hpp"

// PSPLIB .sm / .mm and MMLIB .mm readers. The two libraries share the same
// section layout; MMLIB files may omit the PROJECT INFORMATION block.
namespace rcp::detail {

namespace {

struct Cursor {
  std::vector<std::string> lines;
  int pos = 0;

  int line_no() const { return pos; }  // 1-based for the line just read
  bool done() const { return pos >= static_cast<int>(lines.size()); }
  const std::string& peek() const { return lines[pos]; }
  const std::string& next() { return lines[pos++]; }
};

bool contains_ci(const std::string& haystack, const char* needle) {
  std::string h = haystack, n = needle;
  std::transform(h.begin(), h.end(), h.begin(), ::tolower);
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  return h.find(n) != std::string::npos;
}

bool is_separator(const std::string& s) {
  return s.find("****") != std::string::npos || s.find("----") != std::string::npos;
}

std::vector<long> numbers_on(const std::string& s) {
  std::vector<long> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used == tok.size()) out.push_back(v);
    } catch (...) {
    }
  }
  return out;
}

int first_number_after_colon(const std::string& s, int line, const char* what) {
  auto колон = s.find(':');
  auto nums = numbers_on(колон == std::string::npos ? s : s.substr(колон + 1));
  if (nums.empty()) throw ParseError(std::string("expected a number for ") + what, line);
  return static_cast<int>(nums[0]);
}

}  // namespace

Instance parse_psplib(const std::string& path, bool multi_mode, bool mmlib) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  Cursor cur;
  for (std::string line; std::getline(f, line);) cur.lines.push_back(line);

  int total_jobs = -1, n_renew = -1, n_nonrenew = -1, release = 0;
  int horizon = -1;
  (void)horizon;

  while (!cur.done()) {
    const std::string& line = cur.peek();
    if (contains_ci(line, "jobs (incl.")) {
      total_jobs = first_number_after_colon(line, cur.line_no() + 1, "job count");
      cur.next();
    } else if (contains_ci(line, "horizon")) {
      horizon = first_number_after_colon(line, cur.line_no() + 1, "horizon");
      cur.next();
    } else if (contains_ci(line, "- renewable")) {
      n_renew = first_number_after_colon(line, cur.line_no() + 1, "renewable count");
      cur.next();
    } else if (contains_ci(line, "- nonrenewable")) {
      n_nonrenew = first_number_after_colon(line, cur.line_no() + 1, "nonrenewable count");
      cur.next();
    } else if (contains_ci(line, "PRECEDENCE RELATIONS")) {
      break;
    } else if (contains_ci(line, "pronr.")) {
      cur.next();
      if (!cur.done()) {
        auto nums = numbers_on(cur.peek());
        if (nums.size() >= 3) release = static_cast<int>(nums[2]);
      }
      cur.next();
    } else {
      cur.next();
    }
  }
  if (total_jobs <= 0) throw ParseError("missing job count header", 1);
  if (n_renew < 0) n_renew = 0;
  if (n_nonrenew < 0) n_nonrenew = 0;
  if (!multi_mode && n_nonrenew != 0)
    throw ParseError("single mode file declares nonrenewable resources", 1);

  Instance ins;
  ins.name = path;
  ins.jobs.resize(total_jobs);
  for (int j = 0; j < total_jobs; ++j) ins.jobs[j].id = j;

  // PRECEDENCE RELATIONS
  std::vector<int> declared_modes(total_jobs, 1);
  while (!cur.done() && !contains_ci(cur.peek(), "PRECEDENCE RELATIONS")) cur.next();
  if (cur.done()) throw ParseError("missing PRECEDENCE RELATIONS section", cur.line_no());
  cur.next();
  if (!cur.done() && contains_ci(cur.peek(), "jobnr")) cur.next();
  int seen_jobs = 0;
  while (!cur.done() && seen_jobs < total_jobs) {
    const std::string& line = cur.next();
    if (is_separator(line) || line.empty()) {
      if (seen_jobs == 0) continue;
      break;
    }
    auto nums = numbers_on(line);
    if (nums.size() < 3) throw ParseError("malformed precedence row", cur.line_no());
    int jobnr = static_cast<int>(nums[0]);
    if (jobnr < 1 || jobnr > total_jobs) throw ParseError("job number out of range", cur.line_no());
    int j = jobnr - 1;
    declared_modes[j] = static_cast<int>(nums[1]);
    int nsucc = static_cast<int>(nums[2]);
    if (static_cast<int>(nums.size()) != 3 + nsucc)
      throw ParseError("successor count does not match row", cur.line_no());
    for (int k = 0; k < nsucc; ++k) {
      int s = static_cast<int>(nums[3 + k]);
      if (s < 1 || s > total_jobs) throw ParseError("successor id out of range", cur.line_no());
      ins.jobs[j].successors.push_back(s - 1);
    }
    ++seen_jobs;
  }
  if (seen_jobs != total_jobs)
    throw ParseError("precedence section ended early", cur.line_no());

  // REQUESTS/DURATIONS
  while (!cur.done() && !contains_ci(cur.peek(), "REQUESTS/DURATIONS") &&
         !contains_ci(cur.peek(), "REQUESTS / DURATIONS"))
    cur.next();
  if (cur.done()) throw ParseError("missing REQUESTS/DURATIONS section", cur.line_no());
  cur.next();
  const int nres = n_renew + n_nonrenew;
  int current_job = -1;
  int modes_read = 0;
  int jobs_done = 0;
  while (!cur.done()) {
    const std::string& line = cur.next();
    if (contains_ci(line, "jobnr") || is_separator(line) || line.empty()) {
      if (jobs_done == total_jobs) break;
      continue;
    }
    auto nums = numbers_on(line);
    if (nums.empty()) continue;
    int job_field;
    int base;
    if (static_cast<int>(nums.size()) == 3 + nres) {
      job_field = static_cast<int>(nums[0]);
      base = 2;
      if (job_field < 1 || job_field > total_jobs)
        throw ParseError("job number out of range in requests", cur.line_no());
      current_job = job_field - 1;
      modes_read = 0;
    } else if (static_cast<int>(nums.size()) == 2 + nres && current_job >= 0) {
      base = 1;
    } else {
      throw ParseError("malformed requests/durations row", cur.line_no());
    }
    Mode mode;
    mode.duration = static_cast<int>(nums[base]);
    for (int r = 0; r < n_renew; ++r)
      mode.renewable_use.push_back(static_cast<int>(nums[base + 1 + r]));
    for (int k = 0; k < n_nonrenew; ++k)
      mode.nonrenewable_use.push_back(static_cast<int>(nums[base + 1 + n_renew + k]));
    ins.jobs[current_job].modes.push_back(std::move(mode));
    if (++modes_read == declared_modes[current_job]) {
      ++jobs_done;
      if (jobs_done == total_jobs) break;
    }
  }
  for (int j = 0; j < total_jobs; ++j)
    if (static_cast<int>(ins.jobs[j].modes.size()) != declared_modes[j])
      throw ParseError("job " + std::to_string(j + 1) + " modes differ from declaration",
                       cur.line_no());

  // RESOURCEAVAILABILITIES
  while (!cur.done() && !contains_ci(cur.peek(), "RESOURCEAVAILABILIT") &&
         !contains_ci(cur.peek(), "RESOURCE AVAILABILIT"))
    cur.next();
  if (cur.done()) throw ParseError("missing RESOURCEAVAILABILITIES section", cur.line_no());
  cur.next();
  std::vector<long> caps;
  while (!cur.done() && static_cast<int>(caps.size()) < nres) {
    auto nums = numbers_on(cur.next());
    caps.insert(caps.end(), nums.begin(), nums.end());
  }
  if (static_cast<int>(caps.size()) < nres)
    throw ParseError("missing resource capacities", cur.line_no());
  for (int r = 0; r < n_renew; ++r)
    ins.renewables.push_back({"R" + std::to_string(r + 1), static_cast<int>(caps[r])});
  for (int k = 0; k < n_nonrenew; ++k)
    ins.nonrenewables.push_back({"N" + std::to_string(k + 1), static_cast<int>(caps[n_renew + k])});

  bool warned = false;
  while (!cur.done()) {
    const std::string& line = cur.next();
    if (!is_separator(line) && !line.empty() && !warned && numbers_on(line).empty()) {
      std::fprintf(stderr, "warning: ignoring trailing section '%s' in %s\n", line.c_str(),
                   path.c_str());
      warned = true;
    }
  }

  Project p;
  p.id = 0;
  p.release_date = mmlib ? 0 : release;
  for (int j = 0; j < total_jobs; ++j) p.job_ids.push_back(j);
  p.source_job = 0;
  p.sink_job = total_jobs - 1;
  ins.projects.push_back(std::move(p));
  return ins;
}

}  // namespace rcp::detail
