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

#include "miblp/heuristics.hpp"

#include "miblp/engine.hpp"

namespace miblp {

namespace {

std::optional<HeuristicCandidate> run_candidate_milp(const MiblpInstance& inst,
                                                     MilpModel model,
                                                     const MilpLimits& limits) {
  MilpSolution sol = solve_milp(model, limits);
  if (sol.status != MilpStatus::Optimal) return std::nullopt;
  HeuristicCandidate cand;
  cand.x = sol.x.head(inst.n1);
  cand.y = sol.x.tail(inst.n2);
  cand.value = inst.c.dot(cand.x) + inst.d1.dot(cand.y);
  return cand;
}

}  // namespace

std::optional<HeuristicCandidate> improving_objective_cut_heur(const MiblpInstance& inst,
                                                               double d2_reaction,
                                                               const MilpLimits& limits) {
  MilpModel model = high_point_milp(inst);
  Matrix row(1, inst.n1 + inst.n2);
  row.setZero();
  row.block(0, inst.n1, 1, inst.n2) = -inst.d2.transpose();
  Vector rhs(1);
  rhs(0) = -d2_reaction;
  model.lp = add_rows(model.lp, row, rhs);
  return run_candidate_milp(inst, std::move(model), limits);
}

std::optional<HeuristicCandidate> second_level_priority_heur(const MiblpInstance& inst,
                                                             double incumbent_value,
                                                             const MilpLimits& limits) {
  if (!std::isfinite(incumbent_value)) return std::nullopt;
  MilpModel model = high_point_milp(inst);
  Matrix row(1, inst.n1 + inst.n2);
  row.block(0, 0, 1, inst.n1) = -inst.c.transpose();
  row.block(0, inst.n1, 1, inst.n2) = -inst.d1.transpose();
  Vector rhs(1);
  rhs(0) = -incumbent_value;
  model.lp = add_rows(model.lp, row, rhs);
  model.lp.obj.setZero();
  model.lp.obj.tail(inst.n2) = inst.d2;
  return run_candidate_milp(inst, std::move(model), limits);
}

std::vector<HeuristicCandidate> weighted_sums_heur(const MiblpInstance& inst,
                                                   const std::vector<double>& weights,
                                                   const MilpLimits& limits) {
  std::vector<HeuristicCandidate> out;
  for (double w : weights) {
    MilpModel model = high_point_milp(inst);
    model.lp.obj.head(inst.n1) = w * inst.c;
    model.lp.obj.tail(inst.n2) = w * inst.d1 + (1.0 - w) * inst.d2;
    auto cand = run_candidate_milp(inst, std::move(model), limits);
    if (cand.has_value()) out.push_back(std::move(*cand));
  }
  return out;
}

}  // namespace miblp
