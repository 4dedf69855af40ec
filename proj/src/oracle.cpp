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

#include "miblp/oracle.hpp"

#include <cmath>

#include "miblp/simplex.hpp"

namespace miblp {

namespace {

constexpr double kPhiSlack = 1e-7;  // follower-optimality slack in reaction rows

// Lexicographic odometer over the integer grid of the masked columns.
class GridWalker {
 public:
  GridWalker(const Vector& lb, const Vector& ub, const std::vector<bool>& integer,
             std::int64_t cap) {
    std::int64_t product = 1;
    for (Index j = 0; j < lb.size(); ++j) {
      if (!integer[j]) continue;
      const double l = std::ceil(lb(j) - tol().integrality);
      const double u = std::floor(ub(j) + tol().integrality);
      if (u < l) {
        empty_ = true;
        return;
      }
      cols_.push_back(j);
      lo_.push_back(l);
      hi_.push_back(u);
      const auto range = static_cast<std::int64_t>(u - l) + 1;
      if (product > cap / range + 1) product = cap + 1;
      else product *= range;
      if (product > cap) throw Error("enumeration cap exceeded");
    }
    current_.assign(cols_.size(), 0.0);
    for (size_t k = 0; k < cols_.size(); ++k) current_[k] = lo_[k];
  }

  bool empty() const { return empty_; }
  bool done() const { return done_; }

  void fill(Vector& z) const {
    for (size_t k = 0; k < cols_.size(); ++k) z(cols_[k]) = current_[k];
  }

  void advance() {
    for (size_t k = cols_.size(); k-- > 0;) {
      if (current_[k] + 0.5 < hi_[k]) {
        current_[k] += 1.0;
        for (size_t t = k + 1; t < cols_.size(); ++t) current_[t] = lo_[t];
        return;
      }
    }
    done_ = true;
  }

 private:
  std::vector<Index> cols_;
  std::vector<double> lo_, hi_;
  std::vector<double> current_;
  bool empty_ = false;
  bool done_ = false;
};

}  // namespace

GridMilpResult grid_milp_min(const Vector& obj, const Matrix& rows, const Vector& rhs,
                             const Vector& lb, const Vector& ub,
                             const std::vector<bool>& integer, const EnumerationCaps& caps) {
  const Index n = obj.size();
  GridMilpResult best;
  bool any_continuous = false;
  for (Index j = 0; j < n; ++j) {
    if (!integer[j] && lb(j) < ub(j)) any_continuous = true;
  }

  GridWalker walker(lb, ub, integer, caps.max_grid);
  if (walker.empty()) return best;

  Vector z(n);
  for (Index j = 0; j < n; ++j) z(j) = lb(j);  // continuous at lower unless LP moves them
  while (!walker.done()) {
    walker.fill(z);
    double value = kInf;
    bool feasible = false;
    Vector point = z;
    if (!any_continuous) {
      feasible = true;
      for (Index j = 0; j < n; ++j) {
        if (!integer[j]) point(j) = lb(j);
      }
      if (rows.rows() > 0) {
        Vector act = rows * point;
        for (Index i = 0; i < rows.rows() && feasible; ++i) {
          if (act(i) < rhs(i) - tol().feasibility) feasible = false;
        }
      }
      if (feasible) value = obj.dot(point);
    } else {
      // Residual LP over the continuous block with the integer block fixed.
      LpModel lp;
      lp.obj = obj;
      lp.rows = rows;
      lp.rhs = rhs;
      lp.lb = lb;
      lp.ub = ub;
      for (Index j = 0; j < n; ++j) {
        if (integer[j]) {
          lp.lb(j) = z(j);
          lp.ub(j) = z(j);
        }
      }
      LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::Optimal) {
        feasible = true;
        value = sol.objective;
        point = sol.x;
      } else if (sol.status == LpStatus::Unbounded) {
        throw Error("grid_milp_min: unbounded continuous block");
      }
    }
    if (feasible && value < best.value - 1e-12) {
      best.feasible = true;
      best.value = value;
      best.point = point;
    }
    walker.advance();
  }
  return best;
}

namespace {

// Follower value for a fixed leader point: min d2 y over P2(x) and the
// instance's own follower bounds. Node boxes never restrict the follower's
// problem, only which pairs belong to the node.
GridMilpResult follower_value(const MiblpInstance& inst, const Vector& x,
                              const EnumerationCaps& caps) {
  std::vector<bool> y_int(inst.n2);
  for (Index j = 0; j < inst.n2; ++j) y_int[j] = inst.y_is_integer(j);
  const Vector beta = inst.m2() > 0 ? Vector(inst.a2 * x) : Vector(0);
  return grid_milp_min(inst.d2, inst.g2, beta, inst.lb_y, inst.ub_y, y_int, caps);
}

}  // namespace

// Optimistic reaction value: min d1 y over P1(x) and P2(x) with
// d2 y <= phi, within [lb_y, ub_y].
GridMilpResult oracle_reaction_value(const MiblpInstance& inst, const Vector& x, double phi,
                                     const Vector& lb_y, const Vector& ub_y,
                                     const EnumerationCaps& caps) {
  const Index m = inst.m1() + inst.m2() + 1;
  Matrix rows(m, inst.n2);
  Vector rhs(m);
  Index r = 0;
  for (Index i = 0; i < inst.m1(); ++i, ++r) {
    rows.row(r) = inst.g1.row(i);
    rhs(r) = inst.b1(i) - inst.a1.row(i).dot(x);
  }
  for (Index i = 0; i < inst.m2(); ++i, ++r) {
    rows.row(r) = inst.g2.row(i);
    rhs(r) = inst.a2.row(i).dot(x);
  }
  rows.row(r) = -inst.d2.transpose();
  rhs(r) = -phi - kPhiSlack;

  std::vector<bool> y_int(inst.n2);
  for (Index j = 0; j < inst.n2; ++j) y_int[j] = inst.y_is_integer(j);
  return grid_milp_min(inst.d1, rows, rhs, lb_y, ub_y, y_int, caps);
}

namespace {

void check_x_enumerable(const MiblpInstance& inst, const Vector& lb_x, const Vector& ub_x) {
  for (Index i = inst.r1; i < inst.n1; ++i) {
    if (lb_x(i) < ub_x(i)) {
      throw Error("oracle requires continuous leader variables to be fixed");
    }
  }
  for (Index i = 0; i < inst.r1; ++i) {
    if (!std::isfinite(lb_x(i)) || !std::isfinite(ub_x(i))) {
      throw Error("oracle requires finite leader bounds");
    }
  }
}

}  // namespace

void for_each_feasible_x(const MiblpInstance& inst, const Vector& lb_x, const Vector& ub_x,
                         const EnumerationCaps& caps,
                         const std::function<void(const Vector&, double)>& visit) {
  check_x_enumerable(inst, lb_x, ub_x);
  std::vector<bool> x_int(inst.n1);
  for (Index i = 0; i < inst.n1; ++i) x_int[i] = inst.x_is_integer(i);

  GridWalker walker(lb_x, ub_x, x_int, caps.max_grid);
  if (walker.empty()) return;
  Vector x(inst.n1);
  for (Index i = 0; i < inst.n1; ++i) x(i) = lb_x(i);  // fixes continuous coords
  while (!walker.done()) {
    walker.fill(x);
    GridMilpResult phi = follower_value(inst, x, caps);
    if (phi.feasible) visit(x, phi.value);
    walker.advance();
  }
}

OracleResult brute_force_solve_within(const MiblpInstance& inst, const Vector& lb_x,
                                      const Vector& ub_x, const Vector& lb_y,
                                      const Vector& ub_y, const EnumerationCaps& caps) {
  OracleResult best;
  for_each_feasible_x(inst, lb_x, ub_x, caps,
                      [&](const Vector& x, double phi) {
                        GridMilpResult xi = oracle_reaction_value(inst, x, phi, lb_y, ub_y, caps);
                        if (!xi.feasible) return;
                        const double value = inst.c.dot(x) + xi.value;
                        if (value < best.value - 1e-12) {
                          best.status = OracleResult::Status::Optimal;
                          best.value = value;
                          best.x = x;
                          best.y = xi.point;
                        }
                      });
  return best;
}

OracleResult brute_force_solve(const MiblpInstance& inst, const EnumerationCaps& caps) {
  return brute_force_solve_within(inst, inst.lb_x, inst.ub_x, inst.lb_y, inst.ub_y, caps);
}

std::vector<std::pair<Vector, Vector>> enumerate_bilevel_feasible(const MiblpInstance& inst,
                                                                  const EnumerationCaps& caps) {
  std::vector<std::pair<Vector, Vector>> members;
  std::vector<bool> y_int(inst.n2);
  bool mixed = false;
  for (Index j = 0; j < inst.n2; ++j) {
    y_int[j] = inst.y_is_integer(j);
    if (!y_int[j] && inst.lb_y(j) < inst.ub_y(j)) mixed = true;
  }
  for_each_feasible_x(
      inst, inst.lb_x, inst.ub_x, caps,
      [&](const Vector& x, double phi) {
        if (!mixed) {
          // Pure-integer follower: every reaction point is a grid point.
          GridWalker walker(inst.lb_y, inst.ub_y, y_int, caps.max_grid);
          if (walker.empty()) return;
          Vector y(inst.n2);
          for (Index j = 0; j < inst.n2; ++j) y(j) = inst.lb_y(j);
          while (!walker.done()) {
            walker.fill(y);
            bool ok = std::abs(inst.d2.dot(y) - phi) <= tol().optimality;
            if (ok && inst.m2() > 0) {
              Vector slack = inst.g2 * y - inst.a2 * x;
              ok = slack.minCoeff() > -tol().feasibility;
            }
            if (ok && inst.m1() > 0) {
              Vector slack = inst.a1 * x + inst.g1 * y - inst.b1;
              ok = slack.minCoeff() > -tol().feasibility;
            }
            if (ok) members.emplace_back(x, y);
            walker.advance();
          }
        } else {
          GridMilpResult xi = oracle_reaction_value(inst, x, phi, inst.lb_y, inst.ub_y, caps);
          if (xi.feasible) members.emplace_back(x, xi.point);
        }
      });
  return members;
}

}  // namespace miblp
