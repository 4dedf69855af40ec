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

#include <optional>
#include <vector>

#include "miblp/instance.hpp"
#include "miblp/milp.hpp"
#include "miblp/types.hpp"

namespace miblp {

// Primal heuristics. Each reduces to one or more MILPs over the high-point
// set S; the returned points are candidates only and must pass a full
// bilevel feasibility check (with a recomputed follower value) before they
// may become incumbents. That check is the engine's job.

struct HeuristicCandidate {
  Vector x, y;
  double value;  ///< first-level objective c x + d1 y
};

/// Biases the search toward the known reaction: min cx + d1 y over S with
/// d2 y <= d2_reaction, where d2_reaction is the follower value of a cached
/// rational reaction.
std::optional<HeuristicCandidate> improving_objective_cut_heur(
    const MiblpInstance& inst, double d2_reaction, const MilpLimits& limits = {});

/// min d2 y over S subject to cx + d1 y <= incumbent_value. Skipped (returns
/// nothing) when no incumbent exists, since the added row would be vacuous.
std::optional<HeuristicCandidate> second_level_priority_heur(
    const MiblpInstance& inst, double incumbent_value, const MilpLimits& limits = {});

/// One candidate per weight w: min w (cx + d1 y) + (1 - w) d2 y over S.
std::vector<HeuristicCandidate> weighted_sums_heur(const MiblpInstance& inst,
                                                   const std::vector<double>& weights,
                                                   const MilpLimits& limits = {});

}  // namespace miblp
