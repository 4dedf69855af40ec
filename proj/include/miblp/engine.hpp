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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "miblp/cuts.hpp"
#include "miblp/events.hpp"
#include "miblp/instance.hpp"
#include "miblp/milp.hpp"
#include "miblp/params.hpp"
#include "miblp/pool.hpp"
#include "miblp/result.hpp"
#include "miblp/types.hpp"

namespace miblp {

/// Subproblem state: a box over (x, y), the cuts active on the path from the
/// root, and the inherited relaxation bound.
struct Node {
  std::int64_t id = 0;
  std::int64_t parent = -1;
  int depth = 0;
  Vector lb_x, ub_x, lb_y, ub_y;
  std::vector<int> cut_ids;
  double lower_bound = -kInf;
  Basis warm;
};

enum class FeasibilityCheck { BilevelFeasible, IntegralityViolated, OptimalityViolated };

/// Cheap-first bilevel feasibility test for a point already satisfying the
/// linear constraints: leader integrality, then follower integrality, then
/// follower optimality d2 y == phi within tolerance.
FeasibilityCheck check_feasibility(const MiblpInstance& inst, const Vector& x,
                                   const Vector& y, double phi);

enum class PruneReason {
  None,
  Infeasible,
  Bound,
  PoolSecondLevelInfeasible,
  PoolUbSolved,
  BilevelFeasible,
  SecondLevelInfeasibleFixed,
  FiberExhausted,
};

/// Pure pruning predicate over the node bound, the incumbent value, and the
/// pool entry for the node's fixed linking values (when all are fixed).
PruneReason should_prune(double node_lower, double global_upper, bool linking_fixed,
                         const PoolEntry* entry);

/// The high-point problem over S: both levels' rows, bounds, integrality,
/// first-level objective. Heuristics and the fiber upper-bound problem are
/// restrictions of this model.
MilpModel high_point_milp(const MiblpInstance& inst);

/// Branch-and-cut solver for one instance. Owns all mutable solve state;
/// distinct solvers may run concurrently.
class BilevelSolver {
 public:
  BilevelSolver(const MiblpInstance& inst, SolverParams params, EventSink sink = {});
  ~BilevelSolver();

  BilevelSolver(const BilevelSolver&) = delete;
  BilevelSolver& operator=(const BilevelSolver&) = delete;

  BilevelResult solve();

  /// Follower problem for linking values gamma (in linking-set order).
  /// Consults the pool first; fresh results are cached with their tag.
  struct SecondLevelResult {
    bool feasible = false;
    Vector reaction;
    double phi = kInf;
    bool fresh = false;
  };
  SecondLevelResult solve_second_level(const Vector& gamma);

  /// Best bilevel objective over the fiber x_L = gamma (global bounds), via
  /// the value-function reformulation with d2 y <= phi. Updates the pool tag
  /// and the incumbent. Requires a feasible follower at gamma.
  struct UbResult {
    bool feasible = false;
    Vector x, y;
    double value = kInf;
    bool fresh = false;
  };
  UbResult solve_best_ub(const Vector& gamma);

  /// True leader objective contribution of x: min d1 y over the reaction set
  /// intersected with the first-level constraints. +inf when empty.
  std::pair<double, Vector> evaluate_xi(const Vector& x, double phi);

  const std::vector<Cut>& cut_store() const;
  const SolverParams& resolved_params() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-call convenience wrapper.
BilevelResult solve(const MiblpInstance& inst, const SolverParams& params = {},
                    EventSink sink = {});

}  // namespace miblp
