// Copyright 2026 the miblp-bnc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "miblp/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace miblp {

namespace {

constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kRatioTieTol = 1e-9;

// Bounded-variable simplex over the equality system [A  -I] z = b with
// z = (x, s), s >= 0 the surplus of each >= row. The basis inverse is kept
// explicitly and updated by elementary row operations, with periodic
// refactorization from scratch.
class Simplex {
 public:
  Simplex(const LpModel& model, const SimplexControls& controls)
      : m_(model.num_rows()),
        n_(model.num_cols()),
        model_(model),
        controls_(controls),
        status_(n_ + m_, VarStatus::AtLower),
        values_(n_ + m_, 0.0),
        binv_(Matrix::Identity(m_, m_)) {}

  LpSolution run(const Basis* warm) {
    if (!install_warm_basis(warm)) install_cold_basis();
    compute_basic_values();

    LpSolution out;
    if (!primal_feasible()) {
      bool concluded = false;
      if (dual_feasible()) {
        concluded = dual_simplex(out);
        if (concluded && out.status == LpStatus::Infeasible) return out;
      }
      if (!concluded) {
        if (!phase_one(out)) return finish_infeasible(out);
      }
    }
    return phase_two(out);
  }

 private:
  double lower(Index j) const { return j < n_ ? model_.lb(j) : 0.0; }
  double upper(Index j) const { return j < n_ ? model_.ub(j) : kInf; }

  Vector column(Index j) const {
    if (j < n_) return model_.rows.col(j);
    Vector e = Vector::Zero(m_);
    e(j - n_) = -1.0;
    return e;
  }

  bool install_warm_basis(const Basis* warm) {
    if (warm == nullptr || warm->empty()) return false;
    if (static_cast<Index>(warm->cols.size()) != n_ ||
        static_cast<Index>(warm->rows.size()) != m_) {
      return false;
    }
    basic_.clear();
    for (Index j = 0; j < n_ + m_; ++j) {
      VarStatus st = j < n_ ? warm->cols[j] : warm->rows[j - n_];
      status_[j] = st;
      if (st == VarStatus::Basic) basic_.push_back(j);
    }
    if (static_cast<Index>(basic_.size()) != m_) return false;
    if (!refactor()) return false;
    sanitize_nonbasic_statuses();
    return true;
  }

  void install_cold_basis() {
    basic_.clear();
    for (Index j = 0; j < n_; ++j) {
      const double l = lower(j), u = upper(j);
      if (std::isfinite(l) && std::isfinite(u)) {
        status_[j] = model_.obj(j) >= 0.0 ? VarStatus::AtLower : VarStatus::AtUpper;
      } else if (std::isfinite(l)) {
        status_[j] = VarStatus::AtLower;
      } else if (std::isfinite(u)) {
        status_[j] = VarStatus::AtUpper;
      } else {
        status_[j] = VarStatus::Free;
      }
    }
    for (Index i = 0; i < m_; ++i) {
      status_[n_ + i] = VarStatus::Basic;
      basic_.push_back(n_ + i);
    }
    // The slack basis is B = -I, its own inverse.
    binv_ = -Matrix::Identity(m_, m_);
  }

  void sanitize_nonbasic_statuses() {
    for (Index j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      const double l = lower(j), u = upper(j);
      if (status_[j] == VarStatus::AtLower && !std::isfinite(l)) {
        status_[j] = std::isfinite(u) ? VarStatus::AtUpper : VarStatus::Free;
      } else if (status_[j] == VarStatus::AtUpper && !std::isfinite(u)) {
        status_[j] = std::isfinite(l) ? VarStatus::AtLower : VarStatus::Free;
      } else if (status_[j] == VarStatus::Free && std::isfinite(l)) {
        status_[j] = VarStatus::AtLower;
      } else if (status_[j] == VarStatus::Free && std::isfinite(u)) {
        status_[j] = VarStatus::AtUpper;
      }
    }
  }

  bool refactor() {
    Matrix b(m_, m_);
    for (Index p = 0; p < m_; ++p) b.col(p) = column(basic_[p]);
    Eigen::FullPivLU<Matrix> lu(b);
    if (!lu.isInvertible()) return false;
    binv_ = lu.inverse();
    return true;
  }

  double nonbasic_value(Index j) const {
    switch (status_[j]) {
      case VarStatus::AtLower:
        return lower(j);
      case VarStatus::AtUpper:
        return upper(j);
      default:
        return 0.0;
    }
  }

  void compute_basic_values() {
    Vector r = model_.rhs;
    for (Index j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      values_[j] = nonbasic_value(j);
      if (values_[j] != 0.0) r -= column(j) * values_[j];
    }
    Vector xb = binv_ * r;
    for (Index p = 0; p < m_; ++p) values_[basic_[p]] = xb(p);
  }

  bool primal_feasible() const {
    const double eps = tol().feasibility;
    for (Index p = 0; p < m_; ++p) {
      const Index j = basic_[p];
      if (values_[j] < lower(j) - eps || values_[j] > upper(j) + eps) return false;
    }
    return true;
  }

  Vector dual_multipliers(const std::vector<double>& costs) const {
    Vector cb(m_);
    for (Index p = 0; p < m_; ++p) cb(p) = costs[basic_[p]];
    return binv_.transpose() * cb;
  }

  std::vector<double> phase_costs(bool phase1) const {
    std::vector<double> c(n_ + m_, 0.0);
    if (phase1) {
      for (Index p = 0; p < m_; ++p) {
        const Index j = basic_[p];
        if (values_[j] < lower(j) - tol().feasibility) c[j] = -1.0;
        else if (values_[j] > upper(j) + tol().feasibility) c[j] = 1.0;
      }
    } else {
      for (Index j = 0; j < n_; ++j) c[j] = model_.obj(j);
    }
    return c;
  }

  bool dual_feasible() {
    auto c = phase_costs(false);
    Vector y = dual_multipliers(c);
    for (Index j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      const double d = c[j] - y.dot(column(j));
      if (status_[j] == VarStatus::AtLower && d < -1e-7) return false;
      if (status_[j] == VarStatus::AtUpper && d > 1e-7) return false;
      if (status_[j] == VarStatus::Free && std::abs(d) > 1e-7) return false;
    }
    return true;
  }

  void bump_iteration() {
    ++iterations_;
    if (iterations_ > controls_.iteration_limit) {
      throw Error("simplex iteration limit exceeded");
    }
    if (++pivots_since_refactor_ >= controls_.refactor_interval) {
      pivots_since_refactor_ = 0;
      refactor();
      compute_basic_values();
    }
  }

  void track_progress(double measure) {
    // Bland's rule engages after a long run of pivots without progress.
    if (measure < last_measure_ - 1e-12) {
      last_measure_ = measure;
      stalled_ = 0;
    } else if (++stalled_ > controls_.stalled_pivots_before_bland) {
      bland_ = true;
    }
  }

  void reset_progress() {
    last_measure_ = kInf;
    stalled_ = 0;
  }

  struct Entering {
    Index j = -1;
    int direction = 0;  // +1 increase, -1 decrease
  };

  Entering price(const std::vector<double>& costs, const Vector& y) const {
    Entering best;
    double best_score = kDualTol;
    for (Index j = 0; j < n_ + m_; ++j) {
      const VarStatus st = status_[j];
      if (st == VarStatus::Basic) continue;
      const double d = costs[j] - y.dot(column(j));
      int dir = 0;
      if (st == VarStatus::AtLower && d < -kDualTol) dir = 1;
      else if (st == VarStatus::AtUpper && d > kDualTol) dir = -1;
      else if (st == VarStatus::Free && std::abs(d) > kDualTol) dir = d < 0 ? 1 : -1;
      if (dir == 0) continue;
      if (bland_) return {j, dir};
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = {j, dir};
      }
    }
    return best;
  }

  struct RatioResult {
    double step = kInf;
    Index blocking_pos = -1;  // basic position; -1 means a bound flip
    bool to_upper = false;    // bound the blocking variable lands on
  };

  // Max step for entering variable e moving in direction `dir`, blocking on
  // basic bounds and the entering variable's own range. In phase one a basic
  // outside its bounds blocks when it reaches the violated bound from
  // outside; its other bound does not block.
  RatioResult ratio_test(Index e, int dir, const Vector& w, bool phase1) const {
    RatioResult res;
    const double range = upper(e) - lower(e);
    if (std::isfinite(range)) res.step = range;

    const double eps = tol().feasibility;
    for (Index p = 0; p < m_; ++p) {
      const Index j = basic_[p];
      const double delta = -dir * w(p);  // rate of change of basic p
      if (std::abs(delta) <= kPivotTol) continue;
      const double v = values_[j];
      const double l = lower(j), u = upper(j);
      double limit = kInf;
      bool to_upper = false;
      if (phase1 && v < l - eps) {
        if (delta > 0) { limit = (l - v) / delta; to_upper = false; }
      } else if (phase1 && v > u + eps) {
        if (delta < 0) { limit = (v - u) / (-delta); to_upper = true; }
      } else if (delta > 0) {
        if (std::isfinite(u)) { limit = std::max(0.0, (u - v) / delta); to_upper = true; }
      } else {
        if (std::isfinite(l)) { limit = std::max(0.0, (v - l) / (-delta)); to_upper = false; }
      }
      if (!std::isfinite(limit)) continue;

      bool take = false;
      if (limit < res.step - kRatioTieTol) {
        take = true;
      } else if (limit <= res.step + kRatioTieTol && res.blocking_pos >= 0) {
        // Tie between basics: larger pivot magnitude, then lower index.
        const double cur = std::abs(w(res.blocking_pos));
        if (std::abs(w(p)) > cur + 1e-12) take = true;
        else if (std::abs(std::abs(w(p)) - cur) <= 1e-12 && j < basic_[res.blocking_pos]) take = true;
      }
      if (take) {
        res.step = std::min(res.step, limit);
        res.blocking_pos = p;
        res.to_upper = to_upper;
      }
    }
    return res;
  }

  void apply_step(Index e, int dir, const Vector& w, double t) {
    if (t != 0.0) {
      for (Index p = 0; p < m_; ++p) values_[basic_[p]] -= dir * t * w(p);
      values_[e] += dir * t;
    }
  }

  // Replace basic variable at position p with entering e; binv <- E * binv.
  void pivot(Index p, Index e, const Vector& w) {
    const double piv = w(p);
    binv_.row(p) /= piv;
    for (Index i = 0; i < m_; ++i) {
      if (i == p) continue;
      const double f = w(i);
      if (f != 0.0) binv_.row(i) -= f * binv_.row(p);
    }
    basic_[p] = e;
  }

  void make_pivot_or_flip(const Entering& ent, const Vector& w, const RatioResult& r) {
    apply_step(ent.j, ent.direction, w, r.step);
    if (r.blocking_pos >= 0) {
      const Index leaving = basic_[r.blocking_pos];
      status_[leaving] = r.to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
      values_[leaving] = r.to_upper ? upper(leaving) : lower(leaving);
      pivot(r.blocking_pos, ent.j, w);
      status_[ent.j] = VarStatus::Basic;
    } else {
      status_[ent.j] = ent.direction > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
      values_[ent.j] = nonbasic_value(ent.j);
    }
    bump_iteration();
  }

  double infeasibility_sum() const {
    double s = 0.0;
    for (Index p = 0; p < m_; ++p) {
      const Index j = basic_[p];
      s += std::max(0.0, lower(j) - values_[j]);
      s += std::max(0.0, values_[j] - upper(j));
    }
    return s;
  }

  // Minimizes the sum of primal infeasibilities from the current basis.
  // Returns false when the model is primal infeasible; a certificate attempt
  // is left in `out`.
  bool phase_one(LpSolution& out) {
    reset_progress();
    while (true) {
      const double infeas = infeasibility_sum();
      if (infeas <= tol().feasibility) return true;
      track_progress(infeas);

      auto costs = phase_costs(true);
      Vector y = dual_multipliers(costs);
      Entering ent = price(costs, y);
      if (ent.j < 0) {
        attach_farkas(out, -y);
        return false;
      }
      Vector w = binv_ * column(ent.j);
      RatioResult r = ratio_test(ent.j, ent.direction, w, true);
      if (!std::isfinite(r.step)) {
        throw Error("phase-one ratio test found no blocking bound");
      }
      make_pivot_or_flip(ent, w, r);
    }
  }

  LpSolution phase_two(LpSolution& out) {
    reset_progress();
    const auto costs = phase_costs(false);
    while (true) {
      track_progress(objective_value());
      Vector y = dual_multipliers(costs);
      Entering ent = price(costs, y);
      if (ent.j < 0) return finish_optimal(out);

      Vector w = binv_ * column(ent.j);
      RatioResult r = ratio_test(ent.j, ent.direction, w, false);
      if (!std::isfinite(r.step)) return finish_unbounded(out, ent, w);
      make_pivot_or_flip(ent, w, r);

      // A refactorization just happened when the counter wrapped; if the
      // recomputed basics regressed in feasibility, re-establish it.
      if (pivots_since_refactor_ == 0 && !primal_feasible()) {
        LpSolution tmp;
        if (!phase_one(tmp)) {
          out = tmp;
          return finish_infeasible(out);
        }
        reset_progress();
      }
    }
  }

  // Dual simplex from a dual-feasible, primal-infeasible basis. Returns true
  // when it reached a conclusion; out.status is Infeasible in that case if
  // the model has no feasible point. Returning false hands over to phase one.
  bool dual_simplex(LpSolution& out) {
    reset_progress();
    const auto costs = phase_costs(false);
    while (true) {
      const double eps = tol().feasibility;
      Index pos = -1;
      double worst = eps;
      bool below = false;
      for (Index p = 0; p < m_; ++p) {
        const Index j = basic_[p];
        const double lo_v = lower(j) - values_[j];
        const double up_v = values_[j] - upper(j);
        const double v = std::max(lo_v, up_v);
        if (v > worst) {
          worst = v;
          pos = p;
          below = lo_v >= up_v;
        }
      }
      if (pos < 0) {
        out.status = LpStatus::Optimal;  // primal feasibility restored
        return true;
      }
      track_progress(infeasibility_sum());
      if (stalled_ > 4 * controls_.stalled_pivots_before_bland) return false;

      Vector y = dual_multipliers(costs);
      Vector rho = binv_.row(pos);
      Index enter = -1;
      int enter_dir = 0;
      double best_ratio = kInf;
      double best_alpha = 0.0;
      for (Index j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::Basic) continue;
        const double alpha = rho.dot(column(j));
        if (std::abs(alpha) <= kPivotTol) continue;
        int dir = 0;
        // The leaving basic must move toward its violated bound.
        if (below) {
          if (status_[j] == VarStatus::AtLower && alpha < 0) dir = 1;
          else if (status_[j] == VarStatus::AtUpper && alpha > 0) dir = -1;
          else if (status_[j] == VarStatus::Free) dir = alpha < 0 ? 1 : -1;
        } else {
          if (status_[j] == VarStatus::AtLower && alpha > 0) dir = 1;
          else if (status_[j] == VarStatus::AtUpper && alpha < 0) dir = -1;
          else if (status_[j] == VarStatus::Free) dir = alpha > 0 ? 1 : -1;
        }
        if (dir == 0) continue;
        const double d = costs[j] - y.dot(column(j));
        const double ratio = std::abs(d) / std::abs(alpha);
        bool take = false;
        if (enter < 0 || ratio < best_ratio - kRatioTieTol) {
          take = true;
        } else if (ratio <= best_ratio + kRatioTieTol && !bland_ &&
                   std::abs(alpha) > std::abs(best_alpha) + 1e-12) {
          take = true;
        }
        if (take) {
          best_ratio = std::min(best_ratio, ratio);
          best_alpha = alpha;
          enter = j;
          enter_dir = dir;
          if (bland_) break;
        }
      }
      if (enter < 0) {
        attach_farkas(out, below ? Vector(rho) : Vector(-rho));
        out.status = LpStatus::Infeasible;
        out.objective = kInf;
        out.iterations = iterations_;
        out.basis = export_basis();
        return true;
      }

      const Index leaving = basic_[pos];
      const double target = below ? lower(leaving) : upper(leaving);
      const double dt = (values_[leaving] - target) / best_alpha;
      if ((enter_dir > 0 && dt < -eps) || (enter_dir < 0 && dt > eps)) {
        return false;  // numerical disagreement; let phase one decide
      }
      Vector w = binv_ * column(enter);
      for (Index p = 0; p < m_; ++p) values_[basic_[p]] -= dt * w(p);
      values_[enter] = nonbasic_value(enter) + dt;
      status_[leaving] = below ? VarStatus::AtLower : VarStatus::AtUpper;
      values_[leaving] = target;
      pivot(pos, enter, w);
      status_[enter] = VarStatus::Basic;
      bump_iteration();
    }
  }

  double objective_value() const {
    double v = 0.0;
    for (Index j = 0; j < n_; ++j) v += model_.obj(j) * values_[j];
    return v;
  }

  Basis export_basis() const {
    Basis b;
    b.cols.assign(status_.begin(), status_.begin() + n_);
    b.rows.assign(status_.begin() + n_, status_.end());
    return b;
  }

  Vector export_point() const {
    Vector x(n_);
    for (Index j = 0; j < n_; ++j) x(j) = values_[j];
    return x;
  }

  LpSolution finish_optimal(LpSolution& out) {
    refactor();
    compute_basic_values();
    if (!primal_feasible() && !repaired_) {
      repaired_ = true;
      LpSolution tmp;
      if (!phase_one(tmp)) return finish_infeasible(tmp);
      return phase_two(out);
    }
    out.status = LpStatus::Optimal;
    out.x = export_point();
    out.objective = objective_value();
    out.basis = export_basis();
    out.iterations = iterations_;
    out.dual_objective = dual_objective();
    return out;
  }

  double dual_objective() const {
    const auto costs = phase_costs(false);
    const Vector y = dual_multipliers(costs);
    double v = y.dot(model_.rhs);
    for (Index j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::Basic || status_[j] == VarStatus::Free) continue;
      const double d = costs[j] - y.dot(column(j));
      v += d * nonbasic_value(j);
    }
    return v;
  }

  LpSolution finish_unbounded(LpSolution& out, const Entering& ent, const Vector& w) {
    out.status = LpStatus::Unbounded;
    out.iterations = iterations_;
    out.basis = export_basis();
    Vector ray = Vector::Zero(n_);
    if (ent.j < n_) ray(ent.j) = ent.direction;
    for (Index p = 0; p < m_; ++p) {
      if (basic_[p] < n_) ray(basic_[p]) = -ent.direction * w(p);
    }
    const double norm = ray.cwiseAbs().maxCoeff();
    if (norm > 0) ray /= norm;
    out.ray = ray;
    out.x = export_point();
    out.objective = -kInf;
    return out;
  }

  LpSolution finish_infeasible(LpSolution& out) {
    out.status = LpStatus::Infeasible;
    out.objective = kInf;
    out.iterations = iterations_;
    out.basis = export_basis();
    return out;
  }

  // Certificate candidate: row multipliers lam >= 0 whose aggregated row has
  // a box supremum below lam'rhs. Attached only when it verifies.
  void attach_farkas(LpSolution& out, const Vector& candidate) {
    for (int attempt = 0; attempt < 2; ++attempt) {
      Vector lam = attempt == 0 ? candidate : Vector(-candidate);
      bool nonneg = true;
      for (Index i = 0; i < m_; ++i) {
        if (lam(i) < -1e-7) { nonneg = false; break; }
        if (lam(i) < 0) lam(i) = 0;
      }
      if (!nonneg || lam.size() == 0 || lam.cwiseAbs().maxCoeff() <= 0) continue;
      Vector agg = model_.rows.transpose() * lam;
      double sup = 0.0;
      bool finite = true;
      for (Index j = 0; j < n_ && finite; ++j) {
        if (agg(j) > kPivotTol) {
          if (!std::isfinite(upper(j))) finite = false;
          else sup += agg(j) * upper(j);
        } else if (agg(j) < -kPivotTol) {
          if (!std::isfinite(lower(j))) finite = false;
          else sup += agg(j) * lower(j);
        }
      }
      if (finite && sup < lam.dot(model_.rhs) - tol().feasibility) {
        out.farkas = lam;
        return;
      }
    }
  }

  Index m_, n_;
  const LpModel& model_;
  SimplexControls controls_;
  std::vector<VarStatus> status_;
  std::vector<double> values_;
  std::vector<Index> basic_;
  Matrix binv_;
  std::int64_t iterations_ = 0;
  int pivots_since_refactor_ = 0;
  int stalled_ = 0;
  double last_measure_ = kInf;
  bool bland_ = false;
  bool repaired_ = false;
};

}  // namespace

LpModel add_rows(const LpModel& model, const Matrix& new_rows, const Vector& new_rhs) {
  if (new_rows.cols() != model.num_cols() || new_rows.rows() != new_rhs.size()) {
    throw Error("add_rows: dimension mismatch");
  }
  LpModel out = model;
  const Index m0 = model.num_rows(), k = new_rows.rows();
  Matrix stacked(m0 + k, model.num_cols());
  if (m0 > 0) stacked.topRows(m0) = model.rows;
  stacked.bottomRows(k) = new_rows;
  out.rows = std::move(stacked);
  out.rhs.conservativeResize(m0 + k);
  out.rhs.tail(k) = new_rhs;
  return out;
}

LpModel fix_bounds(const LpModel& model, Index column, double lo, double hi) {
  if (column < 0 || column >= model.num_cols()) throw Error("fix_bounds: bad column");
  if (lo > hi) throw Error("fix_bounds: lo > hi");
  LpModel out = model;
  out.lb(column) = lo;
  out.ub(column) = hi;
  return out;
}

LpSolution solve_lp(const LpModel& model, const Basis* warm,
                    const SimplexControls& controls) {
  if (model.rows.rows() != model.rhs.size() ||
      (model.rows.rows() > 0 && model.rows.cols() != model.obj.size()) ||
      model.lb.size() != model.obj.size() || model.ub.size() != model.obj.size()) {
    throw Error("solve_lp: inconsistent model dimensions");
  }
  for (Index j = 0; j < model.num_cols(); ++j) {
    if (model.lb(j) > model.ub(j)) {
      LpSolution out;
      out.status = LpStatus::Infeasible;
      return out;
    }
  }
  Simplex solver(model, controls);
  return solver.run(warm);
}

}  // namespace miblp
