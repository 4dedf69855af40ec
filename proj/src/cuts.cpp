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

#include "miblp/cuts.hpp"

#include <cmath>

namespace miblp {

namespace {

constexpr double kBindingTol = 1e-6;
constexpr double kDegenerateLambda = 1e-9;
constexpr double kCoeffDrop = 1e-12;
constexpr double kViolationMin = 1e-6;

bool vector_integral(const Vector& v, double eps = 1e-9) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::isfinite(v(i)) && !is_integral(v(i), eps)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(CutClass c) {
  switch (c) {
    case CutClass::IntegerNoGood:
      return "integer_no_good";
    case CutClass::GeneralizedNoGood:
      return "generalized_no_good";
    case CutClass::HypercubeIc:
      return "hypercube_intersection";
  }
  return "unknown";
}

std::optional<Cut> integer_no_good(const MiblpInstance& inst,
                                   const InstanceProperties& props, const LpModel& node_lp,
                                   const Vector& point) {
  if (!props.pure_integer || !props.integer_data) return std::nullopt;
  const Index n = node_lp.num_cols();
  for (Index j = 0; j < n; ++j) {
    if (!is_integral(point(j))) return std::nullopt;
  }
  (void)inst;

  // Sum every binding row and bound of the node relaxation; all of them must
  // carry integral data for the +1 lift to be valid. Since the point is a
  // basic solution, the binding set pins it, so any other integral point in
  // the relaxation gains at least one unit of slack across the sum.
  Vector coeffs = Vector::Zero(n);
  double rhs_sum = 0.0;
  for (Index i = 0; i < node_lp.num_rows(); ++i) {
    const double activity = node_lp.rows.row(i).dot(point);
    if (activity - node_lp.rhs(i) > kBindingTol) continue;
    if (!vector_integral(node_lp.rows.row(i).transpose()) ||
        !is_integral(node_lp.rhs(i), 1e-9)) {
      return std::nullopt;
    }
    coeffs += node_lp.rows.row(i).transpose();
    rhs_sum += node_lp.rhs(i);
  }
  for (Index j = 0; j < n; ++j) {
    const double l = node_lp.lb(j), u = node_lp.ub(j);
    if (std::isfinite(l) && point(j) - l <= kBindingTol) {
      if (!is_integral(l, 1e-9)) return std::nullopt;
      coeffs(j) += 1.0;  // x_j >= l
      rhs_sum += l;
    }
    if (std::isfinite(u) && u - point(j) <= kBindingTol) {
      if (!is_integral(u, 1e-9)) return std::nullopt;
      coeffs(j) -= 1.0;  // -x_j >= -u
      rhs_sum -= u;
    }
  }

  Cut cut;
  cut.coeffs = coeffs;
  cut.rhs = rhs_sum + 1.0;
  cut.cls = CutClass::IntegerNoGood;
  if (cut.coeffs.dot(point) > cut.rhs - kViolationMin) return std::nullopt;
  return cut;
}

std::optional<Cut> generalized_no_good(const MiblpInstance& inst,
                                       const InstanceProperties& props,
                                       const Vector& gamma) {
  if (!props.all_linking_binary) return std::nullopt;
  if (static_cast<Index>(props.linking.size()) != gamma.size()) return std::nullopt;
  Vector coeffs = Vector::Zero(inst.n1 + inst.n2);
  double rhs = 1.0;
  for (size_t k = 0; k < props.linking.size(); ++k) {
    const double g = gamma(static_cast<Index>(k));
    if (!is_integral(g) || g < -tol().integrality || g > 1.0 + tol().integrality) {
      return std::nullopt;
    }
    if (std::round(g) == 0.0) {
      coeffs(props.linking[k]) = 1.0;
    } else {
      coeffs(props.linking[k]) = -1.0;
      rhs -= 1.0;
    }
  }
  Cut cut;
  cut.coeffs = coeffs;
  cut.rhs = rhs;
  cut.cls = CutClass::GeneralizedNoGood;
  return cut;
}

std::optional<Cut> hypercube_intersection(const MiblpInstance& inst,
                                          const std::vector<Index>& linking,
                                          const LpModel& node_lp,
                                          const LpSolution& relaxation) {
  if (relaxation.status != LpStatus::Optimal || linking.empty()) return std::nullopt;
  const Index n = node_lp.num_cols();
  const Index m = node_lp.num_rows();
  const Vector& v = relaxation.x;
  for (Index i : linking) {
    if (!is_integral(v(i))) return std::nullopt;
  }
  const Basis& basis = relaxation.basis;
  if (static_cast<Index>(basis.cols.size()) != n ||
      static_cast<Index>(basis.rows.size()) != m) {
    return std::nullopt;
  }

  // Basis inverse for the equality system [A -I].
  std::vector<Index> basic;
  for (Index j = 0; j < n; ++j) {
    if (basis.cols[j] == VarStatus::Basic) basic.push_back(j);
    if (basis.cols[j] == VarStatus::Free) return std::nullopt;  // unbounded displacement
  }
  for (Index i = 0; i < m; ++i) {
    if (basis.rows[i] == VarStatus::Basic) basic.push_back(n + i);
  }
  if (static_cast<Index>(basic.size()) != m) return std::nullopt;
  Matrix b(m, m);
  for (Index p = 0; p < m; ++p) {
    const Index j = basic[p];
    if (j < n) b.col(p) = node_lp.rows.col(j);
    else b.col(p) = -Vector::Unit(m, j - n);
  }
  Eigen::FullPivLU<Matrix> lu(b);
  if (!lu.isInvertible()) return std::nullopt;
  const Matrix binv = lu.inverse();

  // Map basic positions back to structural linking coordinates.
  std::vector<std::pair<Index, Index>> basic_linking;  // (position, linking coord)
  for (Index p = 0; p < m; ++p) {
    if (basic[p] >= n) continue;
    for (size_t k = 0; k < linking.size(); ++k) {
      if (basic[p] == linking[k]) basic_linking.emplace_back(p, basic[p]);
    }
  }

  // One term per nonbasic variable: lambda is the step along its ray to the
  // boundary of the unit box around the linking values.
  Vector coeffs = Vector::Zero(n);
  double rhs = 1.0;
  bool any_finite = false;
  auto process_nonbasic = [&](Index j) -> bool {
    // Ray of displacement s_j >= 0: the nonbasic moves off its bound by one
    // unit (sign depends on which bound), basics respond along -B^{-1} a_j.
    const VarStatus st = j < n ? basis.cols[j] : basis.rows[j - n];
    if (j >= n && st != VarStatus::AtLower) return false;  // surplus has no upper bound
    const int sign = st == VarStatus::AtUpper ? -1 : 1;
    Vector col;
    if (j < n) col = node_lp.rows.col(j);
    else col = -Vector::Unit(m, j - n);
    const Vector w = binv * col;

    double max_rate = 0.0;
    if (j < n) {
      for (Index i : linking) {
        if (i == j) max_rate = std::max(max_rate, 1.0);
      }
    }
    for (const auto& [p, i] : basic_linking) {
      (void)i;
      max_rate = std::max(max_rate, std::abs(w(p)));
    }
    if (max_rate < kCoeffDrop) return true;  // ray parallel to the box: coefficient 0
    const double lambda = 1.0 / max_rate;
    if (lambda < kDegenerateLambda) return false;
    any_finite = true;

    // s_j as an affine function of the structural vector.
    const double inv = 1.0 / lambda;
    if (j < n) {
      coeffs(j) += sign * inv;
      rhs += sign * inv * (sign > 0 ? node_lp.lb(j) : node_lp.ub(j));
    } else {
      const Index row = j - n;
      coeffs += inv * node_lp.rows.row(row).transpose();
      rhs += inv * node_lp.rhs(row);
    }
    return true;
  };

  for (Index j = 0; j < n; ++j) {
    if (basis.cols[j] != VarStatus::Basic) {
      if (!process_nonbasic(j)) return std::nullopt;
    }
  }
  for (Index i = 0; i < m; ++i) {
    if (basis.rows[i] != VarStatus::Basic) {
      if (!process_nonbasic(n + i)) return std::nullopt;
    }
  }
  if (!any_finite) return std::nullopt;  // cone never leaves the box

  for (Index j = 0; j < n; ++j) {
    if (std::abs(coeffs(j)) < kCoeffDrop) coeffs(j) = 0.0;
  }
  Cut cut;
  cut.coeffs = coeffs;
  cut.rhs = rhs;
  cut.cls = CutClass::HypercubeIc;
  if (cut.coeffs.dot(v) > cut.rhs - kViolationMin) return std::nullopt;
  return cut;
}

CutAuditReport audit_cut(const Cut& cut, const MiblpInstance& inst, double incumbent,
                         const EnumerationCaps& caps) {
  CutAuditReport report;
  const InstanceProperties props = classify(inst);
  const bool objective_integral =
      vector_integral(inst.c) && vector_integral(inst.d1) && props.pure_integer;
  const double improve_eps = objective_integral && props.integer_data ? 1.0 : 1e-6;

  std::vector<bool> y_int(inst.n2);
  bool mixed = false;
  for (Index j = 0; j < inst.n2; ++j) {
    y_int[j] = inst.y_is_integer(j);
    if (!y_int[j] && inst.lb_y(j) < inst.ub_y(j)) mixed = true;
  }

  const Vector cut_x = cut.coeffs.head(inst.n1);
  const Vector cut_y = cut.coeffs.tail(inst.n2);

  for_each_feasible_x(inst, cut.lb_x, cut.ub_x, caps, [&](const Vector& x, double phi) {
    if (!mixed) {
      // Walk reaction points on the integer lattice inside the cut's box.
      Vector y(inst.n2);
      std::vector<double> lo(inst.n2), hi(inst.n2);
      std::int64_t cells = 1;
      for (Index j = 0; j < inst.n2; ++j) {
        lo[j] = std::ceil(cut.lb_y(j) - tol().integrality);
        hi[j] = std::floor(cut.ub_y(j) + tol().integrality);
        if (hi[j] < lo[j]) return;
        cells *= static_cast<std::int64_t>(hi[j] - lo[j]) + 1;
        if (cells > caps.max_grid) throw Error("enumeration cap exceeded");
      }
      for (Index j = 0; j < inst.n2; ++j) y(j) = lo[j];
      while (true) {
        bool ok = std::abs(inst.d2.dot(y) - phi) <= tol().optimality;
        if (ok && inst.m2() > 0) {
          ok = ((inst.g2 * y - inst.a2 * x).array() > -tol().feasibility).all();
        }
        if (ok && inst.m1() > 0) {
          ok = ((inst.a1 * x + inst.g1 * y - inst.b1).array() > -tol().feasibility).all();
        }
        if (ok && inst.c.dot(x) + inst.d1.dot(y) <= incumbent - improve_eps &&
            cut_x.dot(x) + cut_y.dot(y) < cut.rhs - kViolationMin) {
          report.violators.emplace_back(x, y);
        }
        Index k = inst.n2;
        while (k-- > 0) {
          if (y(k) + 0.5 < hi[k]) {
            y(k) += 1.0;
            for (Index t = k + 1; t < inst.n2; ++t) y(t) = lo[t];
            break;
          }
          if (k == 0) return;
        }
        if (inst.n2 == 0) return;
      }
    } else {
      // Mixed follower: per integral block, maximize the cut violation over
      // the optimal-reaction face within the box and the improving halfspace.
      const Index m = inst.m1() + inst.m2() + 2;
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
      rhs(r) = -phi - 1e-7;
      ++r;
      rows.row(r) = -inst.d1.transpose();
      rhs(r) = -(incumbent - improve_eps - inst.c.dot(x));

      GridMilpResult worst =
          grid_milp_min(cut_y, rows, rhs, cut.lb_y, cut.ub_y, y_int, caps);
      if (worst.feasible &&
          cut_x.dot(x) + worst.value < cut.rhs - kViolationMin) {
        report.violators.emplace_back(x, worst.point);
      }
    }
  });
  return report;
}

}  // namespace miblp
