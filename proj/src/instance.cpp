#include <algorithm>
#include <fstream>
#include <set>

#include "rcp/instance.hpp"

namespace rcp {

std::vector<std::pair<int, int>> Instance::precedence_arcs() const {
  std::vector<std::pair<int, int>> arcs;
  for (const Job& j : jobs)
    for (int s : j.successors) arcs.emplace_back(j.id, s);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

Instance parse_instance(const std::string& path, Format format) {
  switch (format) {
    case Format::psplib_sm: return detail::parse_psplib(path, false, false);
    case Format::psplib_mm: return detail::parse_psplib(path, true, false);
    case Format::mmlib: return detail::parse_psplib(path, true, true);
    case Format::mista: return detail::parse_mista(path);
  }
  throw std::runtime_error("unknown format");
}

Format sniff_format(const std::string& path) {
  auto ends_with = [&](const char* suf) {
    std::string s(suf);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string head(2048, '\0');
  f.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(f.gcount()));
  bool psplib_header = head.find("PRECEDENCE RELATIONS") != std::string::npos ||
                       head.find("jobs (incl.") != std::string::npos;
  if (ends_with(".sm")) return Format::psplib_sm;
  if (ends_with(".mm")) {
    if (head.find("PROJECT INFORMATION") != std::string::npos) return Format::psplib_mm;
    return Format::mmlib;
  }
  if (head.find("PROJECTS") == 0 || head.find("projects:") == 0) return Format::mista;
  if (ends_with(".txt") && !psplib_header) return Format::mista;
  if (psplib_header) return Format::psplib_mm;
  throw std::runtime_error("cannot determine instance format of " + path);
}

std::vector<Diagnostic> validate(const Instance& ins) {
  std::vector<Diagnostic> out;
  auto add = [&](std::string inv, std::string entity, std::string detail) {
    out.push_back({std::move(inv), std::move(entity), std::move(detail)});
  };
  const int n = ins.num_jobs();
  const int nr = static_cast<int>(ins.renewables.size());
  const int nk = static_cast<int>(ins.nonrenewables.size());

  std::vector<int> owner(n, -1);
  for (const Project& p : ins.projects) {
    for (int j : p.job_ids) {
      if (j < 0 || j >= n) {
        add("job-id-range", "project " + std::to_string(p.id), "job id " + std::to_string(j));
        continue;
      }
      if (owner[j] != -1)
        add("job-partition", "job " + std::to_string(j), "belongs to several projects");
      owner[j] = p.id;
    }
  }
  for (int j = 0; j < n; ++j)
    if (owner[j] == -1)
      add("job-partition", "job " + std::to_string(j), "belongs to no project");

  for (const Job& j : ins.jobs) {
    if (j.modes.empty())
      add("mode-count", "job " + std::to_string(j.id), "no modes");
    for (std::size_t m = 0; m < j.modes.size(); ++m) {
      const Mode& mode = j.modes[m];
      if (static_cast<int>(mode.renewable_use.size()) != nr ||
          static_cast<int>(mode.nonrenewable_use.size()) != nk)
        add("arity-mismatch", "job " + std::to_string(j.id) + " mode " + std::to_string(m),
            "consumption vector length differs from resource count");
      if (mode.duration < 0)
        add("duration-sign", "job " + std::to_string(j.id) + " mode " + std::to_string(m),
            "negative duration");
      for (int v : mode.renewable_use)
        if (v < 0) add("consumption-sign", "job " + std::to_string(j.id), "negative renewable use");
      for (int v : mode.nonrenewable_use)
        if (v < 0) add("consumption-sign", "job " + std::to_string(j.id), "negative nonrenewable use");
    }
    for (int s : j.successors) {
      if (s < 0 || s >= n)
        add("arc-endpoints", "arc (" + std::to_string(j.id) + "," + std::to_string(s) + ")",
            "successor id out of range");
      else if (s == j.id)
        add("self-loop", "arc (" + std::to_string(j.id) + "," + std::to_string(s) + ")",
            "job precedes itself");
    }
  }

  // Acyclicity by Kahn's algorithm.
  {
    std::vector<int> indeg(n, 0);
    for (const Job& j : ins.jobs)
      for (int s : j.successors)
        if (s >= 0 && s < n && s != j.id) ++indeg[s];
    std::vector<int> stack;
    for (int j = 0; j < n; ++j)
      if (indeg[j] == 0) stack.push_back(j);
    int seen = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++seen;
      for (int s : ins.jobs[x].successors)
        if (s >= 0 && s < n && s != x && --indeg[s] == 0) stack.push_back(s);
    }
    if (seen != n) add("acyclicity", "precedence graph", "cycle detected");
  }

  for (const Project& p : ins.projects) {
    if (p.release_date < 0)
      add("release-date-sign", "project " + std::to_string(p.id), "negative release date");
    auto is_artificial = [&](int j) {
      if (j < 0 || j >= n) return false;
      const Job& job = ins.jobs[j];
      if (job.modes.size() != 1 || job.modes[0].duration != 0) return false;
      for (int v : job.modes[0].renewable_use)
        if (v != 0) return false;
      for (int v : job.modes[0].nonrenewable_use)
        if (v != 0) return false;
      return true;
    };
    if (!is_artificial(p.source_job))
      add("artificial-source", "project " + std::to_string(p.id),
          "source job missing or not a zero-duration single mode job");
    if (!is_artificial(p.sink_job))
      add("artificial-sink", "project " + std::to_string(p.id),
          "sink job missing or not a zero-duration single mode job");
  }
  return out;
}

}  // namespace rcp
