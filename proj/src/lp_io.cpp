#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rcp/lp.hpp"

// CPLEX LP text format, restricted to the subset documented in the README:
// Minimize/Maximize, Subject To, Bounds, Generals, Binaries, End.
namespace rcp::lp {

namespace {

void write_number(std::ostream& os, double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    std::ostringstream tmp;
    tmp << std::setprecision(17) << v;
    os << tmp.str();
  }
}

void write_terms(std::ostream& os, const std::vector<std::pair<int, double>>& terms,
                 const std::vector<std::string>& names) {
  bool first = true;
  int on_line = 0;
  for (auto [j, v] : terms) {
    if (v == 0.0) continue;
    if (first) {
      if (v < 0) os << "- ";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    double a = std::abs(v);
    if (a != 1.0) {
      write_number(os, a);
      os << ' ';
    }
    os << names[j];
    if (++on_line == 8) {
      os << "\n   ";
      on_line = 0;
    }
  }
  if (first) os << "0 " << (names.empty() ? "x" : names[0]);
}

}  // namespace

void write_lp(const Problem& p, std::ostream& os) {
  os << (p.maximize ? "Maximize" : "Minimize") << "\n obj: ";
  std::vector<std::pair<int, double>> obj;
  for (int j = 0; j < p.num_cols(); ++j)
    if (p.objective[j] != 0.0) obj.emplace_back(j, p.objective[j]);
  if (obj.empty())
    os << "0 " << (p.num_cols() > 0 ? p.names[0] : "x");
  else
    write_terms(os, obj, p.names);
  os << "\nSubject To\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    const Row& r = p.rows[i];
    os << " r" << i << ": ";
    write_terms(os, r.coeffs, p.names);
    switch (r.sense) {
      case Sense::le: os << " <= "; break;
      case Sense::eq: os << " = "; break;
      case Sense::ge: os << " >= "; break;
    }
    write_number(os, r.rhs);
    os << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < p.num_cols(); ++j) {
    double lo = p.lower[j], hi = p.upper[j];
    os << ' ';
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
      os << p.names[j] << " free\n";
      continue;
    }
    if (std::isfinite(lo)) {
      write_number(os, lo);
      os << " <= ";
    } else {
      os << "-inf <= ";
    }
    os << p.names[j];
    if (std::isfinite(hi)) {
      os << " <= ";
      write_number(os, hi);
    }
    os << "\n";
  }
  bool any_bin = false, any_gen = false;
  for (int j = 0; j < p.num_cols(); ++j) {
    if (!p.integer[j]) continue;
    if (p.lower[j] == 0.0 && p.upper[j] == 1.0) any_bin = true;
    else any_gen = true;
  }
  if (any_bin) {
    os << "Binaries\n";
    int on_line = 0;
    for (int j = 0; j < p.num_cols(); ++j)
      if (p.integer[j] && p.lower[j] == 0.0 && p.upper[j] == 1.0) {
        os << ' ' << p.names[j];
        if (++on_line == 10) { os << "\n"; on_line = 0; }
      }
    if (on_line) os << "\n";
  }
  if (any_gen) {
    os << "Generals\n";
    int on_line = 0;
    for (int j = 0; j < p.num_cols(); ++j)
      if (p.integer[j] && !(p.lower[j] == 0.0 && p.upper[j] == 1.0)) {
        os << ' ' << p.names[j];
        if (++on_line == 10) { os << "\n"; on_line = 0; }
      }
    if (on_line) os << "\n";
  }
  os << "End\n";
}

void write_lp_file(const Problem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_lp(p, out);
}

}  // namespace rcp::lp
