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

#include "miblp/branching.hpp"

#include <cmath>

namespace miblp {

namespace {

bool fractional(double v) { return !is_integral(v); }

double frac_down(double v) { return v - std::floor(v); }
double frac_up(double v) { return std::ceil(v) - v; }

}  // namespace

void PseudocostTable::observe_up(Index column, double degradation_per_unit) {
  Entry& e = up_[column];
  e.mean += (degradation_per_unit - e.mean) / (e.count + 1);
  ++e.count;
}

void PseudocostTable::observe_down(Index column, double degradation_per_unit) {
  Entry& e = down_[column];
  e.mean += (degradation_per_unit - e.mean) / (e.count + 1);
  ++e.count;
}

double PseudocostTable::estimate(const std::vector<Entry>& side, Index column) const {
  if (side[column].count > 0) return side[column].mean;
  double sum = 0.0;
  int n = 0;
  for (const Entry& e : side) {
    if (e.count > 0) {
      sum += e.mean;
      ++n;
    }
  }
  return n > 0 ? sum / n : 1.0;
}

double PseudocostTable::estimate_up(Index column) const { return estimate(up_, column); }
double PseudocostTable::estimate_down(Index column) const { return estimate(down_, column); }

std::vector<BranchCandidate> candidates(const MiblpInstance& inst,
                                        const std::vector<Index>& linking,
                                        const Vector& x, const Vector& y,
                                        const Vector& lb_x, const Vector& ub_x,
                                        const Vector& lb_y, const Vector& ub_y,
                                        BranchStrategy strategy) {
  std::vector<BranchCandidate> out;
  if (strategy == BranchStrategy::Linking) {
    for (Index i : linking) {
      if (fractional(x(i))) out.push_back({i, x(i), false});
    }
    if (!out.empty()) return out;
    // Integral linking part: unfixed linking variables, integral-value split.
    for (Index i : linking) {
      if (ub_x(i) - lb_x(i) > 0.5) out.push_back({i, std::round(x(i)), true});
    }
    return out;
  }
  // Fractional scheme: every integer column at either level.
  for (Index i = 0; i < inst.r1; ++i) {
    if (fractional(x(i))) out.push_back({i, x(i), false});
  }
  for (Index j = 0; j < inst.r2; ++j) {
    if (fractional(y(j))) out.push_back({inst.n1 + j, y(j), false});
  }
  (void)lb_y;
  (void)ub_y;
  return out;
}

BranchDecision select(const std::vector<BranchCandidate>& cands,
                      const PseudocostTable& pseudocosts, const Vector& lb,
                      const Vector& ub) {
  if (cands.empty()) throw Error("select: no branching candidates");
  const BranchCandidate* best = nullptr;
  double best_score = -kInf;
  for (const BranchCandidate& c : cands) {
    const double fd = c.integral_split ? 1.0 : frac_down(c.value);
    const double fu = c.integral_split ? 1.0 : frac_up(c.value);
    const double score =
        pseudocosts.estimate_down(c.column) * fd * pseudocosts.estimate_up(c.column) * fu;
    if (score > best_score + 1e-12) {
      best_score = score;
      best = &c;
    }
  }

  const BranchCandidate& c = *best;
  BranchDecision d;
  d.column = c.column;
  d.value = c.value;
  if (!c.integral_split) {
    d.down_ub = std::floor(c.value);
    d.up_lb = std::floor(c.value) + 1.0;
    return d;
  }
  // Integral value v: split {<= v, >= v+1}, or {<= v-1, >= v} when v sits at
  // the upper bound so that neither child is empty.
  const double v = c.value;
  if (v <= ub(c.column) - 1.0 + 1e-9) {
    d.down_ub = v;
    d.up_lb = v + 1.0;
  } else {
    d.down_ub = v - 1.0;
    d.up_lb = v;
  }
  (void)lb;
  return d;
}

void update_pseudocosts(PseudocostTable& table, const BranchDecision& decision,
                        double parent_bound, double down_child_bound,
                        double up_child_bound) {
  const bool integral = is_integral(decision.value);
  const double fd = integral ? 1.0 : std::max(decision.value - std::floor(decision.value), 1e-6);
  const double fu = integral ? 1.0 : std::max(std::ceil(decision.value) - decision.value, 1e-6);
  if (std::isfinite(down_child_bound) && std::isfinite(parent_bound)) {
    table.observe_down(decision.column, (down_child_bound - parent_bound) / fd);
  }
  if (std::isfinite(up_child_bound) && std::isfinite(parent_bound)) {
    table.observe_up(decision.column, (up_child_bound - parent_bound) / fu);
  }
}

}  // namespace miblp
