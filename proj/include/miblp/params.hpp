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
#include <string>
#include <vector>

#include "miblp/types.hpp"

namespace miblp {

enum class BranchStrategy { Auto, Linking, Fractional };
enum class CutSelection { Auto, IntegerNoGood, GeneralizedNoGood, HypercubeIc, None };
enum class SearchOrder { BestFirst, DepthFirst };
enum class CandidateScoring { Pseudocost, Strong };

struct HeuristicParams {
  bool improving_objective_cut = false;
  bool second_level_priority = false;
  bool weighted_sums = false;
  int frequency = 100;  ///< invoke every this many nodes
  std::vector<double> weights = {0.9, 0.5, 0.1};
};

/// Solver configuration. The solve-strategy booleans mirror the conditions
/// under which the follower problem and the fiber upper-bound problem are
/// solved during node processing; see engine.hpp.
struct SolverParams {
  BranchStrategy branch_strategy = BranchStrategy::Auto;
  bool use_linking_pool = true;

  bool solve_second_level_when_lvars_fixed = true;
  bool solve_second_level_when_lvars_int = false;
  bool solve_second_level_when_xvars_int = false;
  bool solve_second_level_when_xyvars_int = true;

  bool compute_best_ub_when_lvars_fixed = true;
  bool compute_best_ub_when_lvars_int = false;
  bool compute_best_ub_when_xvars_int = false;

  CutSelection cuts = CutSelection::Auto;
  CandidateScoring scoring = CandidateScoring::Pseudocost;
  HeuristicParams heuristics;
  SearchOrder search = SearchOrder::BestFirst;

  double time_limit = kInf;  ///< seconds
  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
};

/// The five named solve-strategy presets for the follower / upper-bound
/// problems. Names follow the "when<SL>-<UB>" convention.
enum class SolveStrategyPreset {
  WhenLIntLInt,
  WhenLIntLFixed,
  WhenLFixedLFixed,
  WhenXYIntLFixed,
  WhenXYIntOrLFixedLFixed,  // the default
};

SolverParams with_preset(SolverParams params, SolveStrategyPreset preset);

const std::vector<std::pair<std::string, SolveStrategyPreset>>& preset_names();

/// Parses a preset by its "whenXYIntOrLFixed-LFixed" style name.
SolveStrategyPreset parse_preset(const std::string& name);

}  // namespace miblp
