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

#include "miblp/instance.hpp"

#include <cmath>
#include <sstream>

#include "miblp/simplex.hpp"

namespace miblp {

namespace {

bool data_integral(const Matrix& m, double eps) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j), eps)) return false;
    }
  }
  return true;
}

bool data_integral(const Vector& v, double eps, bool skip_infinite = false) {
  for (Index i = 0; i < v.size(); ++i) {
    if (skip_infinite && !std::isfinite(v(i))) continue;
    if (!is_integral(v(i), eps)) return false;
  }
  return true;
}

bool dims_consistent(const MiblpInstance& s, std::string* why) {
  const Index m1 = s.b1.size();
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (s.r1 < 0 || s.r1 > s.n1 || s.r2 < 0 || s.r2 > s.n2) return fail("bad integer counts");
  if (s.c.size() != s.n1) return fail("c length != n1");
  if (s.d1.size() != s.n2) return fail("d1 length != n2");
  if (s.d2.size() != s.n2) return fail("d2 length != n2");
  if (s.a1.rows() != m1 || (m1 > 0 && s.a1.cols() != s.n1)) return fail("A1 shape");
  if (s.g1.rows() != m1 || (m1 > 0 && s.g1.cols() != s.n2)) return fail("G1 shape");
  if (s.a2.rows() != s.g2.rows()) return fail("A2/G2 row mismatch");
  if (s.a2.rows() > 0 && s.a2.cols() != s.n1) return fail("A2 shape");
  if (s.g2.rows() > 0 && s.g2.cols() != s.n2) return fail("G2 shape");
  if (s.lb_x.size() != s.n1 || s.ub_x.size() != s.n1) return fail("x bound lengths");
  if (s.lb_y.size() != s.n2 || s.ub_y.size() != s.n2) return fail("y bound lengths");
  return true;
}

}  // namespace

std::vector<Index> linking_set(const MiblpInstance& inst) {
  std::vector<Index> linking;
  if (inst.a2.rows() == 0) return linking;
  for (Index i = 0; i < inst.a2.cols(); ++i) {
    if (inst.a2.col(i).cwiseAbs().maxCoeff() > 0.0) linking.push_back(i);
  }
  return linking;
}

std::vector<Diagnostic> validate(const MiblpInstance& inst) {
  std::vector<Diagnostic> diags;
  std::string why;
  if (!dims_consistent(inst, &why)) {
    diags.push_back({Diagnostic::Code::DimensionMismatch, "dimension mismatch: " + why});
    return diags;
  }

  for (Index i = 0; i < inst.n1; ++i) {
    if (inst.lb_x(i) > inst.ub_x(i)) {
      diags.push_back({Diagnostic::Code::BadBounds,
                       "x bound " + std::to_string(i) + " has lb > ub"});
    }
  }
  for (Index j = 0; j < inst.n2; ++j) {
    if (inst.lb_y(j) > inst.ub_y(j)) {
      diags.push_back({Diagnostic::Code::BadBounds,
                       "y bound " + std::to_string(j) + " has lb > ub"});
    }
  }

  for (Index i : linking_set(inst)) {
    if (!inst.x_is_integer(i)) {
      diags.push_back({Diagnostic::Code::LinkingNotInteger,
                       "linking variable " + std::to_string(i) + " not integer"});
    } else if (!std::isfinite(inst.lb_x(i)) || !std::isfinite(inst.ub_x(i))) {
      diags.push_back({Diagnostic::Code::LinkingUnbounded,
                       "linking variable " + std::to_string(i) + " lacks finite bounds"});
    }
  }
  for (Index i = 0; i < inst.r1; ++i) {
    if (!std::isfinite(inst.lb_x(i)) || !std::isfinite(inst.ub_x(i))) {
      diags.push_back({Diagnostic::Code::IntegerUnbounded,
                       "integer x[" + std::to_string(i) + "] lacks finite bounds"});
    }
  }
  for (Index j = 0; j < inst.r2; ++j) {
    if (!std::isfinite(inst.lb_y(j)) || !std::isfinite(inst.ub_y(j))) {
      diags.push_back({Diagnostic::Code::IntegerUnbounded,
                       "integer y[" + std::to_string(j) + "] lacks finite bounds"});
    }
  }

  // Follower ray check: a ray r >= 0 with G2 r >= 0 and d2 r < 0 makes the
  // second-level problem unbounded for every leader decision. One box LP
  // detects it.
  if (inst.n2 > 0) {
    LpModel ray;
    ray.obj = inst.d2;
    ray.rows = inst.g2;
    ray.rhs = Vector::Zero(inst.m2());
    ray.lb = Vector::Zero(inst.n2);
    ray.ub = Vector::Ones(inst.n2);
    LpSolution sol = solve_lp(ray);
    if (sol.status == LpStatus::Optimal && sol.objective < -tol().optimality) {
      diags.push_back({Diagnostic::Code::SecondLevelUnboundedRay,
                       "second-level unbounded ray exists"});
    }
  }
  return diags;
}

InstanceProperties classify(const MiblpInstance& inst) {
  InstanceProperties p;
  p.linking = linking_set(inst);

  p.all_linking_binary = !p.linking.empty();
  for (Index i : p.linking) {
    if (!inst.x_is_integer(i) || inst.lb_x(i) < -tol().integrality ||
        inst.ub_x(i) > 1.0 + tol().integrality) {
      p.all_linking_binary = false;
      break;
    }
  }

  p.pure_integer = inst.r1 == inst.n1 && inst.r2 == inst.n2;

  const double eps = tol().data_integrality;
  p.integer_data = data_integral(inst.a1, eps) && data_integral(inst.g1, eps) &&
                   data_integral(inst.b1, eps) && data_integral(inst.a2, eps) &&
                   data_integral(inst.g2, eps) &&
                   data_integral(inst.lb_x, eps, true) &&
                   data_integral(inst.ub_x, eps, true) &&
                   data_integral(inst.lb_y, eps, true) &&
                   data_integral(inst.ub_y, eps, true);

  p.zero_sum = inst.n2 == 0 || (inst.d1 + inst.d2).cwiseAbs().maxCoeff() <= eps;

  // Interdiction form: zero-sum, one binary leader variable per follower
  // variable, and per-pair coupling rows y_j <= u_j (1 - x_i), with the
  // constant carried by the fixed right-hand-side column.
  p.is_interdiction = false;
  if (p.zero_sum && inst.rhs_carrier.has_value()) {
    const Index carrier = *inst.rhs_carrier;
    std::vector<bool> covered(inst.n2, false);
    std::vector<bool> used_col(inst.n1, false);
    Index pairs = 0;
    for (Index r = 0; r < inst.m2(); ++r) {
      // Want G2 row = -s e_j, A2 row = s u_j e_i - s u_j e_carrier, s > 0.
      Index j = -1;
      bool clean = true;
      for (Index k = 0; k < inst.n2 && clean; ++k) {
        const double g = inst.g2(r, k);
        if (g == 0.0) continue;
        if (j >= 0 || g > 0) clean = false;
        else j = k;
      }
      if (!clean || j < 0 || covered[j]) continue;
      const double s = -inst.g2(r, j);
      const double u = inst.ub_y(j);
      if (!std::isfinite(u)) continue;
      Index i = -1;
      for (Index k = 0; k < inst.n1 && clean; ++k) {
        const double a = inst.a2(r, k);
        if (k == carrier) {
          if (std::abs(a + s * u) > 1e-9) clean = false;
        } else if (a != 0.0) {
          if (i >= 0 || std::abs(a - s * u) > 1e-9) clean = false;
          else i = k;
        }
      }
      if (!clean || i < 0 || used_col[i]) continue;
      if (!inst.x_is_integer(i) || inst.lb_x(i) < -1e-9 || inst.ub_x(i) > 1.0 + 1e-9) continue;
      covered[j] = true;
      used_col[i] = true;
      ++pairs;
    }
    p.is_interdiction = pairs == inst.n2 && inst.n2 > 0;
  }
  return p;
}

}  // namespace miblp
