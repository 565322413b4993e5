#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "rcp/kernels.hpp"
#include "rcp/lp.hpp"

// Bounded-variable revised simplex with an explicit dense basis inverse.
// Two phases: artificial columns are driven out first, then the real
// objective is optimized. Entering rule is Dantzig with lowest-column-id tie
// breaking; after 1000 consecutive degenerate pivots the code switches to
// Bland's rule until a non-degenerate step is made.
namespace rcp::lp {

int Problem::add_column(double lb, double ub, double obj, bool is_integer,
                        std::string name) {
  lower.push_back(lb);
  upper.push_back(ub);
  objective.push_back(obj);
  integer.push_back(is_integer ? 1 : 0);
  if (name.empty()) name = "c" + std::to_string(objective.size() - 1);
  names.push_back(std::move(name));
  return static_cast<int>(objective.size()) - 1;
}

void Problem::add_row(Row row) { rows.push_back(std::move(row)); }

namespace {

constexpr double kDjTol = 1e-9;
constexpr double kPivTol = 1e-10;
constexpr double kFeasTol = 1e-7;
constexpr double kDegenTol = 1e-9;
constexpr int kBlandTrigger = 1000;
constexpr int kRefactorEvery = 100;

struct SpCol {
  std::vector<int> idx;
  std::vector<double> val;
};

class Simplex {
 public:
  Simplex(const Problem& p, double time_limit)
      : p_(p), time_limit_(time_limit), start_(std::chrono::steady_clock::now()) {
    n_ = p.num_cols();
    m_ = p.num_rows();
    build();
  }

  Solution run() {
    Solution sol;
    if (m_ == 0) return solve_rowless();

    std::vector<double> phase1(ntot_, 0.0);
    for (int j = art0_; j < ntot_; ++j) phase1[j] = 1.0;
    Status st = iterate(phase1, /*phase1=*/true);
    if (st == Status::limit || st == Status::error) {
      sol.status = st;
      return sol;
    }
    double art_sum = 0.0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= art0_) art_sum += std::abs(xB_[i]);
    for (int j = art0_; j < ntot_; ++j)
      if (vstat_[j] != kBasic) art_sum += std::abs(nonbasic_value(j));
    if (art_sum > kFeasTol) {
      sol.status = Status::infeasible;
      return sol;
    }
    for (int j = art0_; j < ntot_; ++j) {
      lb_[j] = 0.0;
      ub_[j] = 0.0;
      if (vstat_[j] != kBasic) vstat_[j] = kAtLower;
    }

    st = iterate(cost_, /*phase1=*/false);
    sol.status = st;
    if (st != Status::optimal) return sol;

    sol.values.assign(n_, 0.0);
    std::vector<double> all(ntot_, 0.0);
    for (int j = 0; j < ntot_; ++j)
      if (vstat_[j] != kBasic) all[j] = nonbasic_value(j);
    for (int i = 0; i < m_; ++i) all[basis_[i]] = xB_[i];
    for (int j = 0; j < n_; ++j) sol.values[j] = all[j];
    sol.objective = 0.0;
    for (int j = 0; j < n_; ++j) sol.objective += p_.objective[j] * sol.values[j];

    compute_duals(cost_);
    sol.reduced_costs.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
      double dj = vstat_[j] == kBasic ? 0.0 : cost_[j] - dot_col(j);
      sol.reduced_costs[j] = p_.maximize ? -dj : dj;
    }
    sol.iterations = iters_;
    return sol;
  }

 private:
  enum VStat : char { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

  const Problem& p_;
  double time_limit_;
  std::chrono::steady_clock::time_point start_;
  int n_ = 0, m_ = 0, ntot_ = 0, art0_ = 0;
  std::vector<SpCol> cols_;
  std::vector<double> lb_, ub_, cost_;
  std::vector<double> binv_;  // m x m row-major
  std::vector<double> xB_;
  std::vector<int> basis_;
  std::vector<char> vstat_;
  std::vector<double> rhs_;
  std::vector<double> y_;
  std::vector<double> colbuf_;
  long iters_ = 0;

  bool timed_out() const {
    if (time_limit_ >= 1e29) return false;
    auto el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return el > time_limit_;
  }

  void build() {
    ntot_ = n_ + 2 * m_;
    art0_ = n_ + m_;
    cols_.resize(ntot_);
    lb_.assign(ntot_, 0.0);
    ub_.assign(ntot_, 0.0);
    cost_.assign(ntot_, 0.0);
    rhs_.resize(m_);
    for (int j = 0; j < n_; ++j) {
      lb_[j] = p_.lower[j];
      ub_[j] = p_.upper[j];
      cost_[j] = p_.maximize ? -p_.objective[j] : p_.objective[j];
    }
    for (int i = 0; i < m_; ++i) {
      const Row& r = p_.rows[i];
      rhs_[i] = r.rhs;
      for (auto [j, v] : r.coeffs) {
        if (j < 0 || j >= n_) throw std::runtime_error("row references bad column");
        if (v == 0.0) continue;
        cols_[j].idx.push_back(i);
        cols_[j].val.push_back(v);
      }
      int s = n_ + i;
      cols_[s].idx.push_back(i);
      cols_[s].val.push_back(1.0);
      switch (r.sense) {
        case Sense::le: lb_[s] = 0.0; ub_[s] = kInf; break;
        case Sense::ge: lb_[s] = -kInf; ub_[s] = 0.0; break;
        case Sense::eq: lb_[s] = 0.0; ub_[s] = 0.0; break;
      }
    }
    vstat_.assign(ntot_, kAtLower);
    for (int j = 0; j < n_ + m_; ++j) {
      if (std::isfinite(lb_[j])) vstat_[j] = kAtLower;
      else if (std::isfinite(ub_[j])) vstat_[j] = kAtUpper;
      else vstat_[j] = kAtLower;  // free variable parked at 0
    }
    std::vector<double> resid(rhs_);
    for (int j = 0; j < n_ + m_; ++j) {
      double v = nonbasic_value(j);
      if (v == 0.0) continue;
      const SpCol& c = cols_[j];
      for (std::size_t k = 0; k < c.idx.size(); ++k) resid[c.idx[k]] -= v * c.val[k];
    }
    basis_.resize(m_);
    xB_.assign(m_, 0.0);
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      int a = art0_ + i;
      double sgn = resid[i] >= 0.0 ? 1.0 : -1.0;
      cols_[a].idx.push_back(i);
      cols_[a].val.push_back(sgn);
      lb_[a] = 0.0;
      ub_[a] = kInf;
      basis_[i] = a;
      vstat_[a] = kBasic;
      xB_[i] = std::abs(resid[i]);
      binv_[static_cast<std::size_t>(i) * m_ + i] = sgn;
    }
    y_.resize(m_);
    colbuf_.resize(m_);
  }

  double nonbasic_value(int j) const {
    if (vstat_[j] == kAtUpper) return ub_[j];
    return std::isfinite(lb_[j]) ? lb_[j] : 0.0;
  }

  void compute_duals(const std::vector<double>& c) {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      double cb = c[basis_[i]];
      if (cb != 0.0) kern::axpy(cb, &binv_[static_cast<std::size_t>(i) * m_], y_.data(), m_);
    }
  }

  double dot_col(int j) const {
    const SpCol& c = cols_[j];
    double s = 0.0;
    for (std::size_t k = 0; k < c.idx.size(); ++k) s += y_[c.idx[k]] * c.val[k];
    return s;
  }

  void ftran(int j, std::vector<double>& w) {
    std::fill(colbuf_.begin(), colbuf_.end(), 0.0);
    const SpCol& c = cols_[j];
    for (std::size_t k = 0; k < c.idx.size(); ++k) colbuf_[c.idx[k]] = c.val[k];
    w.resize(m_);
    for (int i = 0; i < m_; ++i)
      w[i] = kern::dot(&binv_[static_cast<std::size_t>(i) * m_], colbuf_.data(), m_);
  }

  // Gauss-Jordan on [B | I] with partial pivoting; the augmented block ends
  // as exactly B^-1 since the left block is reduced to the identity.
  void refactor() {
    std::vector<double> B(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      const SpCol& c = cols_[basis_[i]];
      for (std::size_t k = 0; k < c.idx.size(); ++k)
        B[static_cast<std::size_t>(c.idx[k]) * m_ + i] = c.val[k];
    }
    std::vector<double>& inv = binv_;
    std::fill(inv.begin(), inv.end(), 0.0);
    for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = 1.0;
    for (int col = 0; col < m_; ++col) {
      int piv = -1;
      double best = kPivTol;
      for (int r = col; r < m_; ++r) {
        double a = std::abs(B[static_cast<std::size_t>(r) * m_ + col]);
        if (a > best) { best = a; piv = r; }
      }
      if (piv < 0) throw std::runtime_error("singular basis during refactorization");
      if (piv != col) {
        for (int k = 0; k < m_; ++k) {
          std::swap(B[static_cast<std::size_t>(piv) * m_ + k],
                    B[static_cast<std::size_t>(col) * m_ + k]);
          std::swap(inv[static_cast<std::size_t>(piv) * m_ + k],
                    inv[static_cast<std::size_t>(col) * m_ + k]);
        }
      }
      double invd = 1.0 / B[static_cast<std::size_t>(col) * m_ + col];
      kern::scale(&B[static_cast<std::size_t>(col) * m_], invd, m_);
      kern::scale(&inv[static_cast<std::size_t>(col) * m_], invd, m_);
      for (int r = 0; r < m_; ++r) {
        if (r == col) continue;
        double f = B[static_cast<std::size_t>(r) * m_ + col];
        if (f == 0.0) continue;
        kern::axpy(-f, &B[static_cast<std::size_t>(col) * m_], &B[static_cast<std::size_t>(r) * m_], m_);
        kern::axpy(-f, &inv[static_cast<std::size_t>(col) * m_], &inv[static_cast<std::size_t>(r) * m_], m_);
      }
    }
    recompute_xb();
  }

  void recompute_xb() {
    std::vector<double> resid(rhs_);
    for (int j = 0; j < ntot_; ++j) {
      if (vstat_[j] == kBasic) continue;
      double v = nonbasic_value(j);
      if (v == 0.0) continue;
      const SpCol& c = cols_[j];
      for (std::size_t k = 0; k < c.idx.size(); ++k) resid[c.idx[k]] -= v * c.val[k];
    }
    for (int i = 0; i < m_; ++i)
      xB_[i] = kern::dot(&binv_[static_cast<std::size_t>(i) * m_], resid.data(), m_);
  }

  Status iterate(const std::vector<double>& c, bool phase1) {
    int degen_streak = 0;
    std::vector<double> w;
    long since_refactor = 0;
    while (true) {
      if ((iters_ & 63) == 0 && timed_out()) return Status::limit;
      ++iters_;
      compute_duals(c);
      bool bland = degen_streak >= kBlandTrigger;
      int q = -1;
      double best = -kDjTol;
      char qdir = 0;
      for (int j = 0; j < ntot_; ++j) {
        if (vstat_[j] == kBasic) continue;
        if (!phase1 && j >= art0_) continue;
        if (lb_[j] == ub_[j]) continue;
        double dj = c[j] - dot_col(j);
        double score;
        char dir;
        if (vstat_[j] == kAtLower) {
          if (dj < -kDjTol) {
            score = dj;
            dir = 1;
          } else if (!std::isfinite(lb_[j]) && dj > kDjTol) {
            score = -dj;
            dir = -1;
          } else {
            continue;
          }
        } else {
          if (!(dj > kDjTol)) continue;
          score = -dj;
          dir = -1;
        }
        if (bland) { q = j; qdir = dir; break; }
        if (score < best) { best = score; q = j; qdir = dir; }
      }
      if (q < 0) return Status::optimal;

      ftran(q, w);

      // Ratio test, pass 1: smallest step over all blocking basics.
      double row_step = kInf;
      for (int i = 0; i < m_; ++i) {
        double g = qdir * w[i];
        if (g > kPivTol) {
          double lo = lb_[basis_[i]];
          if (!std::isfinite(lo)) continue;
          row_step = std::min(row_step, std::max(0.0, (xB_[i] - lo) / g));
        } else if (g < -kPivTol) {
          double hi = ub_[basis_[i]];
          if (!std::isfinite(hi)) continue;
          row_step = std::min(row_step, std::max(0.0, (xB_[i] - hi) / g));
        }
      }
      double range_q = ub_[q] - lb_[q];

      if (!std::isfinite(row_step) && !std::isfinite(range_q))
        return phase1 ? Status::error : Status::unbounded;

      if (range_q <= row_step) {
        // Bound flip: q crosses its whole range, basis unchanged.
        double delta = qdir * range_q;
        for (int i = 0; i < m_; ++i) xB_[i] -= delta * w[i];
        vstat_[q] = vstat_[q] == kAtLower ? kAtUpper : kAtLower;
        if (range_q <= kDegenTol) ++degen_streak; else degen_streak = 0;
        continue;
      }

      // Pass 2: choose the leaving row among ties.
      int leave = -1;
      char leave_to = kAtLower;
      for (int i = 0; i < m_; ++i) {
        double g = qdir * w[i];
        double d;
        char to;
        if (g > kPivTol) {
          double lo = lb_[basis_[i]];
          if (!std::isfinite(lo)) continue;
          d = std::max(0.0, (xB_[i] - lo) / g);
          to = kAtLower;
        } else if (g < -kPivTol) {
          double hi = ub_[basis_[i]];
          if (!std::isfinite(hi)) continue;
          d = std::max(0.0, (xB_[i] - hi) / g);
          to = kAtUpper;
        } else {
          continue;
        }
        if (d > row_step + kDegenTol) continue;
        if (leave < 0) { leave = i; leave_to = to; continue; }
        if (bland) {
          if (basis_[i] < basis_[leave]) { leave = i; leave_to = to; }
        } else if (std::abs(w[i]) > std::abs(w[leave])) {
          leave = i;
          leave_to = to;
        }
      }
      if (leave < 0) return phase1 ? Status::error : Status::unbounded;

      double step = row_step;
      if (step <= kDegenTol) ++degen_streak; else degen_streak = 0;

      double from = vstat_[q] == kAtLower ? (std::isfinite(lb_[q]) ? lb_[q] : 0.0) : ub_[q];
      double xq = from + qdir * step;
      for (int i = 0; i < m_; ++i)
        if (i != leave) xB_[i] -= qdir * step * w[i];
      int out = basis_[leave];
      vstat_[out] = leave_to;
      basis_[leave] = q;
      vstat_[q] = kBasic;
      xB_[leave] = xq;

      double piv = w[leave];
      double* rowr = &binv_[static_cast<std::size_t>(leave) * m_];
      kern::scale(rowr, 1.0 / piv, m_);
      for (int i = 0; i < m_; ++i) {
        if (i == leave) continue;
        if (w[i] != 0.0)
          kern::axpy(-w[i], rowr, &binv_[static_cast<std::size_t>(i) * m_], m_);
      }
      if (++since_refactor >= kRefactorEvery) {
        refactor();
        since_refactor = 0;
      }
    }
  }

  Solution solve_rowless() {
    Solution sol;
    sol.values.assign(n_, 0.0);
    sol.reduced_costs.assign(n_, 0.0);
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) {
      double cj = p_.maximize ? -p_.objective[j] : p_.objective[j];
      double v;
      if (cj > 0) v = p_.lower[j];
      else if (cj < 0) v = p_.upper[j];
      else v = std::isfinite(p_.lower[j]) ? p_.lower[j] : 0.0;
      if (!std::isfinite(v)) {
        sol.status = Status::unbounded;
        return sol;
      }
      sol.values[j] = v;
      obj += p_.objective[j] * v;
      sol.reduced_costs[j] = p_.objective[j];
    }
    sol.objective = obj;
    sol.status = Status::optimal;
    return sol;
  }
};

}  // namespace

Solution solve_lp(const Problem& problem, const SolverHandle& handle) {
  if (handle.backend == SolverHandle::Backend::external)
    return solve_external(problem, handle, /*as_milp=*/false);
  for (int j = 0; j < problem.num_cols(); ++j)
    if (problem.lower[j] > problem.upper[j] + 1e-12) {
      Solution s;
      s.status = Status::infeasible;
      return s;
    }
  try {
    Simplex s(problem, handle.limits.time_sec);
    return s.run();
  } catch (const std::exception& e) {
    Solution s;
    s.status = Status::error;
    s.message = e.what();
    return s;
  }
}

}  // namespace rcp::lp
