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
#include <optional>
#include <vector>

#include "miblp/simplex.hpp"
#include "miblp/types.hpp"

namespace miblp {

/// An LP plus an integrality mask and an optional objective cutoff. Integral
/// points with objective >= cutoff are not accepted as incumbents.
struct MilpModel {
  LpModel lp;
  std::vector<bool> integer;  ///< per column
  std::optional<double> cutoff;
};

enum class MilpStatus { Optimal, Infeasible, CutoffExceeded, Limit };

struct MilpSolution {
  MilpStatus status = MilpStatus::Infeasible;
  Vector x;
  double objective = kInf;
  std::int64_t nodes = 0;
  std::int64_t lp_iterations = 0;
};

struct MilpLimits {
  std::int64_t max_nodes = 5'000'000;
  double time_limit = kInf;  ///< seconds
};

/// Consulted before accepting any integral point as an incumbent. A rejected
/// point does not become the incumbent; its node remains subject to ordinary
/// bound pruning and is explored around the rejected point instead. Exact
/// when the predicate depends only on integer-constrained coordinates.
using IncumbentFilter = std::function<bool(const Vector&)>;

/// Branch-and-bound MILP solve: most-fractional branching, best-first node
/// order, ties broken by lowest column index and node insertion order. No
/// cut generation. Throws Error if the root relaxation is unbounded.
MilpSolution solve_milp(const MilpModel& model, const MilpLimits& limits = {},
                        const IncumbentFilter& filter = {});

}  // namespace miblp
