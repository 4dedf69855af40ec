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
#include <functional>
#include <utility>
#include <vector>

#include "miblp/instance.hpp"
#include "miblp/types.hpp"

namespace miblp {

// Exhaustive ground-truth solvers for small instances. Deliberately a
// different algorithm from the branch-and-cut engine so that agreement
// between the two is meaningful evidence. Enumeration walks integer grids
// in lexicographic order and solves a residual box LP over any continuous
// block, which keeps results deterministic.

struct EnumerationCaps {
  std::int64_t max_grid = 1'000'000;  ///< cap on any integer grid product
};

struct OracleResult {
  enum class Status { Optimal, Infeasible };
  Status status = Status::Infeasible;
  Vector x, y;
  double value = kInf;
};

/// min obj'z over { rows z >= rhs, lb <= z <= ub, z_j integral for masked j }
/// by integer-grid enumeration plus a residual LP per assignment.
struct GridMilpResult {
  bool feasible = false;
  double value = kInf;
  Vector point;
};
GridMilpResult grid_milp_min(const Vector& obj, const Matrix& rows, const Vector& rhs,
                             const Vector& lb, const Vector& ub,
                             const std::vector<bool>& integer,
                             const EnumerationCaps& caps = {});

/// Direct evaluation of the leader problem: for every leader grid point,
/// the follower value by enumeration, then the optimistic reaction value.
/// Continuous leader variables must be fixed. Throws Error when a grid
/// exceeds the cap.
OracleResult brute_force_solve(const MiblpInstance& inst, const EnumerationCaps& caps = {});

/// Same, restricted to a sub-box of the instance bounds (used to evaluate
/// node subproblems and fibers with fixed linking values). The follower's
/// value function is always evaluated over the instance's own follower
/// bounds; the box only filters which bilevel feasible pairs qualify.
OracleResult brute_force_solve_within(const MiblpInstance& inst, const Vector& lb_x,
                                      const Vector& ub_x, const Vector& lb_y,
                                      const Vector& ub_y,
                                      const EnumerationCaps& caps = {});

/// All bilevel feasible pairs. Exact for pure-integer instances; with
/// continuous follower variables each (x, integral-part) fiber is
/// represented by its optimistic reaction point.
std::vector<std::pair<Vector, Vector>> enumerate_bilevel_feasible(
    const MiblpInstance& inst, const EnumerationCaps& caps = {});

/// Visits every leader grid point within [lb_x, ub_x] whose follower problem
/// is feasible, passing x and the follower value (over the instance's
/// follower bounds).
void for_each_feasible_x(const MiblpInstance& inst, const Vector& lb_x, const Vector& ub_x,
                         const EnumerationCaps& caps,
                         const std::function<void(const Vector&, double)>& visit);

/// min d1 y over the reaction set of x intersected with the first-level
/// constraints and [lb_y, ub_y]. phi is the follower value at x.
GridMilpResult oracle_reaction_value(const MiblpInstance& inst, const Vector& x, double phi,
                                     const Vector& lb_y, const Vector& ub_y,
                                     const EnumerationCaps& caps = {});

}  // namespace miblp
