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
#include <vector>

#include "miblp/types.hpp"

namespace miblp {

/// min obj'x  s.t.  rows x >= rhs,  lb <= x <= ub.
///
/// Dense row storage; suited to the instance sizes this project targets.
struct LpModel {
  Vector obj;
  Matrix rows;  ///< one constraint per row, >= sense
  Vector rhs;
  Vector lb, ub;

  Index num_cols() const { return obj.size(); }
  Index num_rows() const { return rows.rows(); }
};

/// Appends >= rows; an existing basis stays valid by making the new slacks
/// basic, which enables dual-simplex reoptimization.
LpModel add_rows(const LpModel& model, const Matrix& new_rows,
                 const Vector& new_rhs);

/// Tightens the bounds of one column. Throws on lo > hi.
LpModel fix_bounds(const LpModel& model, Index column, double lo, double hi);

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper, Free };

/// Basis descriptor: one status per structural column and one per row slack.
struct Basis {
  std::vector<VarStatus> cols;
  std::vector<VarStatus> rows;

  bool empty() const { return cols.empty() && rows.empty(); }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vector x;             ///< structural values; valid when Optimal
  double objective = kInf;
  Basis basis;
  Vector ray;           ///< primal ray when Unbounded
  Vector farkas;        ///< row multipliers certifying infeasibility, may be empty
  std::int64_t iterations = 0;

  /// Dual objective computed from the final basis; equals the primal
  /// objective at optimality up to the optimality tolerance.
  double dual_objective = -kInf;
};

struct SimplexControls {
  std::int64_t iteration_limit = 2'000'000;
  int stalled_pivots_before_bland = 5000;
  int refactor_interval = 100;
};

/// Bounded-variable primal/dual simplex. Returns a proven optimal basic
/// solution, infeasibility with a Farkas certificate, or unboundedness with
/// a primal ray. A warm basis, when given, is repaired and reoptimized
/// (dual simplex after bound changes or row additions). Throws Error when
/// the iteration cap is exceeded.
LpSolution solve_lp(const LpModel& model, const Basis* warm = nullptr,
                    const SimplexControls& controls = {});

}  // namespace miblp
