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

#include "miblp/milp.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <queue>

namespace miblp {

namespace {

constexpr double kPruneEps = 1e-9;

struct BnbNode {
  Vector lb, ub;
  Basis warm;
  double bound;
  std::int64_t seq;
};

struct NodeOrder {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
    return a.seq > b.seq;                              // then insertion order
  }
};

Index most_fractional(const MilpModel& model, const Vector& x) {
  Index best = -1;
  double best_dist = tol().integrality;
  for (Index j = 0; j < x.size(); ++j) {
    if (!model.integer[j]) continue;
    const double frac = x(j) - std::floor(x(j));
    const double dist = std::min(frac, 1.0 - frac);
    if (dist > best_dist + 1e-12) {
      best_dist = dist;
      best = j;
    }
  }
  return best;
}

// Integral-value split used when an integral LP optimum is rejected by the
// incumbent filter: partition around the current value of some unfixed
// integer column.
Index first_unfixed_integer(const MilpModel& model, const Vector& lb, const Vector& ub) {
  for (Index j = 0; j < lb.size(); ++j) {
    if (model.integer[j] && ub(j) - lb(j) > 0.5) return j;
  }
  return -1;
}

}  // namespace

MilpSolution solve_milp(const MilpModel& model, const MilpLimits& limits,
                        const IncumbentFilter& filter) {
  const Index n = model.lp.num_cols();
  if (static_cast<Index>(model.integer.size()) != n) {
    throw Error("solve_milp: integrality mask size mismatch");
  }
  for (Index j = 0; j < n; ++j) {
    if (model.integer[j] &&
        (!std::isfinite(model.lp.lb(j)) || !std::isfinite(model.lp.ub(j)))) {
      throw Error("solve_milp: integer column with infinite bound");
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (!std::isfinite(limits.time_limit)) return false;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count() > limits.time_limit;
  };

  MilpSolution best;
  best.status = MilpStatus::Infeasible;
  double incumbent = model.cutoff.value_or(kInf);
  bool have_point = false;
  bool cutoff_pruned = false;

  std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> open;
  open.push({model.lp.lb, model.lp.ub, Basis{}, -kInf, 0});
  std::int64_t seq = 1;
  bool limit_hit = false;

  while (!open.empty()) {
    if (best.nodes >= limits.max_nodes || out_of_time()) {
      limit_hit = true;
      break;
    }
    BnbNode node = open.top();
    open.pop();
    if (node.bound >= incumbent - kPruneEps) {
      if (!have_point && model.cutoff) cutoff_pruned = true;
      continue;
    }
    ++best.nodes;

    LpModel lp = model.lp;
    lp.lb = node.lb;
    lp.ub = node.ub;
    LpSolution rel = solve_lp(lp, node.warm.empty() ? nullptr : &node.warm);
    best.lp_iterations += rel.iterations;

    if (rel.status == LpStatus::Unbounded) {
      throw Error("unbounded MILP relaxation");
    }
    if (rel.status == LpStatus::Infeasible) continue;
    if (rel.objective >= incumbent - kPruneEps) {
      if (!have_point && model.cutoff) cutoff_pruned = true;
      continue;
    }

    Index frac = most_fractional(model, rel.x);
    if (frac < 0) {
      // Integral point. Either it becomes the incumbent or, if rejected by
      // the filter, the node splits around it.
      if (!filter || filter(rel.x)) {
        incumbent = rel.objective;
        best.x = rel.x;
        best.objective = rel.objective;
        have_point = true;
        continue;
      }
      const Index split = first_unfixed_integer(model, node.lb, node.ub);
      if (split < 0) continue;  // single lattice point, rejected
      double v = std::round(rel.x(split));
      if (v >= node.ub(split) - 0.5) v -= 1.0;  // keep both children nonempty
      BnbNode down{node.lb, node.ub, rel.basis, rel.objective, seq++};
      down.ub(split) = v;
      BnbNode up{node.lb, node.ub, rel.basis, rel.objective, seq++};
      up.lb(split) = v + 1.0;
      open.push(std::move(down));
      open.push(std::move(up));
      continue;
    }

    const double v = rel.x(frac);
    BnbNode down{node.lb, node.ub, rel.basis, rel.objective, seq++};
    down.ub(frac) = std::floor(v);
    BnbNode up{node.lb, node.ub, rel.basis, rel.objective, seq++};
    up.lb(frac) = std::ceil(v);
    open.push(std::move(down));
    open.push(std::move(up));
  }

  if (limit_hit && !have_point) {
    best.status = MilpStatus::Limit;
    return best;
  }
  if (have_point) {
    best.status = limit_hit ? MilpStatus::Limit : MilpStatus::Optimal;
    return best;
  }
  best.status = cutoff_pruned ? MilpStatus::CutoffExceeded : MilpStatus::Infeasible;
  return best;
}

}  // namespace miblp
