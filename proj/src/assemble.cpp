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

#include <algorithm>
#include <cmath>
#include <set>

#include "miblp/instance_io.hpp"

namespace miblp {

namespace {

constexpr double kRhsZeroTol = 1e-11;

struct GeRow {
  Vector coeffs;   // over original MPS columns
  double rhs;
  Index source;    // original MPS row index
};

// Normalizes one MPS row into one or two >= rows, in place order.
void normalize_row(const MpsData& mps, Index i, std::vector<GeRow>& out) {
  const Vector a = mps.coeffs.row(i).transpose();
  const char sense = mps.row_sense[i];
  const double b = mps.rhs[i];
  const double r = mps.range[i];
  if (std::isnan(r)) {
    if (sense == 'G') {
      out.push_back({a, b, i});
    } else if (sense == 'L') {
      out.push_back({-a, -b, i});
    } else {  // E: two >= rows
      out.push_back({a, b, i});
      out.push_back({-a, -b, i});
    }
    return;
  }
  // Ranged row: [lo, hi] from sense and range value, two >= rows.
  double lo, hi;
  if (sense == 'L') {
    hi = b;
    lo = b - std::abs(r);
  } else if (sense == 'G') {
    lo = b;
    hi = b + std::abs(r);
  } else {
    lo = r >= 0 ? b : b + r;
    hi = r >= 0 ? b + r : b;
  }
  out.push_back({a, lo, i});
  out.push_back({-a, -hi, i});
}

// Stable integer-first permutation: perm[new position] = old position.
std::vector<Index> integer_first(const std::vector<bool>& is_int) {
  std::vector<Index> perm;
  for (Index j = 0; j < static_cast<Index>(is_int.size()); ++j) {
    if (is_int[j]) perm.push_back(j);
  }
  for (Index j = 0; j < static_cast<Index>(is_int.size()); ++j) {
    if (!is_int[j]) perm.push_back(j);
  }
  return perm;
}

}  // namespace

MiblpInstance assemble(const MpsData& mps, const AuxInfo& aux, const AssembleOptions& opts) {
  for (Index i : aux.lower_cols) {
    if (i >= mps.num_cols()) {
      throw Error("auxiliary LC index " + std::to_string(i) + " out of range");
    }
  }
  for (Index i : aux.lower_rows) {
    if (i >= mps.num_rows()) {
      throw Error("auxiliary LR index " + std::to_string(i) + " out of range");
    }
  }

  const std::set<Index> lower_col_set(aux.lower_cols.begin(), aux.lower_cols.end());
  const std::set<Index> lower_row_set(aux.lower_rows.begin(), aux.lower_rows.end());

  // Column split: y follows the LC order (parallel to LO), x keeps file order.
  std::vector<Index> x_cols, y_cols;
  for (Index j = 0; j < mps.num_cols(); ++j) {
    if (!lower_col_set.count(j)) x_cols.push_back(j);
  }
  y_cols = aux.lower_cols;

  // Row split with >= normalization, preserving file order within each level.
  std::vector<GeRow> first_rows, second_rows;
  for (Index i = 0; i < mps.num_rows(); ++i) {
    std::vector<GeRow> rows;
    normalize_row(mps, i, rows);
    auto& dst = lower_row_set.count(i) ? second_rows : first_rows;
    for (auto& r : rows) dst.push_back(std::move(r));
  }

  bool needs_carrier = false;
  for (const auto& r : second_rows) {
    if (std::abs(r.rhs) > kRhsZeroTol) {
      if (!opts.fixed_rhs_variable) {
        throw Error("second-level row '" + mps.row_names[r.source] +
                    "' has a nonzero right-hand side; rerun with the fixed "
                    "right-hand-side variable enabled to encode it");
      }
      needs_carrier = true;
    }
  }

  // Assemble the x side, appending the carrier column last when needed.
  const Index nx_orig = static_cast<Index>(x_cols.size());
  const Index nx = nx_orig + (needs_carrier ? 1 : 0);
  std::vector<bool> x_int(nx);
  std::vector<std::string> x_names(nx);
  Vector cx = Vector::Zero(nx), lbx(nx), ubx(nx);
  for (Index k = 0; k < nx_orig; ++k) {
    const Index j = x_cols[k];
    x_int[k] = mps.integer[j];
    x_names[k] = mps.col_names[j];
    cx(k) = mps.obj(j);
    lbx(k) = mps.lb(j);
    ubx(k) = mps.ub(j);
  }
  if (needs_carrier) {
    x_int[nx_orig] = true;
    x_names[nx_orig] = "__rhs__";
    lbx(nx_orig) = 1.0;
    ubx(nx_orig) = 1.0;
  }

  const Index ny = static_cast<Index>(y_cols.size());
  std::vector<bool> y_int(ny);
  std::vector<std::string> y_names(ny);
  Vector d1 = Vector::Zero(ny), d2 = Vector::Zero(ny), lby(ny), uby(ny);
  for (Index k = 0; k < ny; ++k) {
    const Index j = y_cols[k];
    y_int[k] = mps.integer[j];
    y_names[k] = mps.col_names[j];
    d1(k) = mps.obj(j);
    d2(k) = aux.obj_sense == 1 ? aux.lower_obj[k] : -aux.lower_obj[k];
    lby(k) = mps.lb(j);
    uby(k) = mps.ub(j);
  }

  // Integer-first reordering within each level.
  const auto px = integer_first(x_int);
  const auto py = integer_first(y_int);

  MiblpInstance inst;
  inst.n1 = nx;
  inst.n2 = ny;
  inst.r1 = static_cast<Index>(std::count(x_int.begin(), x_int.end(), true));
  inst.r2 = static_cast<Index>(std::count(y_int.begin(), y_int.end(), true));
  inst.c = Vector(nx);
  inst.lb_x = Vector(nx);
  inst.ub_x = Vector(nx);
  inst.x_names.resize(nx);
  for (Index k = 0; k < nx; ++k) {
    inst.c(k) = cx(px[k]);
    inst.lb_x(k) = lbx(px[k]);
    inst.ub_x(k) = ubx(px[k]);
    inst.x_names[k] = x_names[px[k]];
    if (needs_carrier && px[k] == nx_orig) inst.rhs_carrier = k;
  }
  inst.d1 = Vector(ny);
  inst.d2 = Vector(ny);
  inst.lb_y = Vector(ny);
  inst.ub_y = Vector(ny);
  inst.y_names.resize(ny);
  for (Index k = 0; k < ny; ++k) {
    inst.d1(k) = d1(py[k]);
    inst.d2(k) = d2(py[k]);
    inst.lb_y(k) = lby(py[k]);
    inst.ub_y(k) = uby(py[k]);
    inst.y_names[k] = y_names[py[k]];
  }

  const Index m1 = static_cast<Index>(first_rows.size());
  const Index m2 = static_cast<Index>(second_rows.size());
  inst.a1 = Matrix::Zero(m1, nx);
  inst.g1 = Matrix::Zero(m1, ny);
  inst.b1 = Vector::Zero(m1);
  for (Index i = 0; i < m1; ++i) {
    const GeRow& r = first_rows[i];
    for (Index k = 0; k < nx; ++k) {
      if (px[k] < nx_orig) inst.a1(i, k) = r.coeffs(x_cols[px[k]]);
    }
    for (Index k = 0; k < ny; ++k) inst.g1(i, k) = r.coeffs(y_cols[py[k]]);
    inst.b1(i) = r.rhs;
  }
  // Second-level rows become G2 y >= A2 x: the x part and the constant move
  // across with flipped sign; the constant lands on the carrier column.
  inst.a2 = Matrix::Zero(m2, nx);
  inst.g2 = Matrix::Zero(m2, ny);
  for (Index i = 0; i < m2; ++i) {
    const GeRow& r = second_rows[i];
    for (Index k = 0; k < nx; ++k) {
      if (px[k] < nx_orig) inst.a2(i, k) = -r.coeffs(x_cols[px[k]]);
      else inst.a2(i, k) = r.rhs;
    }
    for (Index k = 0; k < ny; ++k) inst.g2(i, k) = r.coeffs(y_cols[py[k]]);
  }
  return inst;
}

MiblpInstance build_interdiction(const InterdictionProblem& prob) {
  const Index n = prob.profit.size();
  if (n == 0) throw Error("build_interdiction: empty follower");
  if (prob.upper.size() != n) throw Error("build_interdiction: upper size mismatch");
  for (Index j = 0; j < n; ++j) {
    if (!std::isfinite(prob.upper(j))) {
      throw Error("build_interdiction: follower variable " + std::to_string(j) +
                  " lacks a finite upper bound");
    }
  }
  if (!prob.integer.empty() && static_cast<Index>(prob.integer.size()) != n) {
    throw Error("build_interdiction: integrality mask size mismatch");
  }
  const Index mf = prob.rows.rows();
  if (mf > 0 && prob.rows.cols() != n) throw Error("build_interdiction: follower rows shape");
  if (prob.rhs.size() != mf) throw Error("build_interdiction: follower rhs size");
  const Index ml = prob.leader_rows.rows();

  std::vector<bool> y_int(n, true);
  if (!prob.integer.empty()) {
    for (Index j = 0; j < n; ++j) y_int[j] = prob.integer[j];
  }
  const auto perm = integer_first(y_int);  // y order; x mirrors it pairwise

  MiblpInstance inst;
  inst.n1 = n + 1;  // paired binaries plus the rhs carrier
  inst.n2 = n;
  inst.r1 = n + 1;
  inst.r2 = static_cast<Index>(std::count(y_int.begin(), y_int.end(), true));
  const Index carrier = n;
  inst.rhs_carrier = carrier;

  inst.c = Vector::Zero(inst.n1);
  inst.d1 = Vector(n);
  inst.d2 = Vector(n);
  inst.lb_x = Vector::Zero(inst.n1);
  inst.ub_x = Vector::Ones(inst.n1);
  inst.lb_x(carrier) = 1.0;
  inst.lb_y = Vector::Zero(n);
  inst.ub_y = Vector(n);
  inst.x_names.resize(inst.n1);
  inst.y_names.resize(n);
  for (Index k = 0; k < n; ++k) {
    const Index j = perm[k];
    inst.d1(k) = prob.profit(j);
    inst.d2(k) = -prob.profit(j);
    inst.ub_y(k) = prob.upper(j);
    inst.x_names[k] = "x" + std::to_string(j);
    inst.y_names[k] = "y" + std::to_string(j);
  }
  inst.x_names[carrier] = "__rhs__";

  // Leader budget rows apply to x only.
  inst.a1 = Matrix::Zero(ml, inst.n1);
  if (ml > 0) {
    if (prob.leader_rows.cols() != n) throw Error("build_interdiction: leader rows shape");
    for (Index k = 0; k < n; ++k) inst.a1.col(k) = prob.leader_rows.col(perm[k]);
  }
  inst.g1 = Matrix::Zero(ml, n);
  inst.b1 = prob.leader_rhs;

  // Follower rows, then one coupling row y_k <= u_k (1 - x_k) per pair.
  const Index m2 = mf + n;
  inst.a2 = Matrix::Zero(m2, inst.n1);
  inst.g2 = Matrix::Zero(m2, n);
  for (Index i = 0; i < mf; ++i) {
    for (Index k = 0; k < n; ++k) inst.g2(i, k) = prob.rows(i, perm[k]);
    inst.a2(i, carrier) = prob.rhs(i);
  }
  for (Index k = 0; k < n; ++k) {
    const Index i = mf + k;
    const double u = inst.ub_y(k);
    inst.g2(i, k) = -1.0;
    inst.a2(i, k) = u;
    inst.a2(i, carrier) = -u;
  }
  return inst;
}

}  // namespace miblp
