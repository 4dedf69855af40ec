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
#include <string>
#include <vector>

#include "miblp/instance.hpp"
#include "miblp/oracle.hpp"
#include "miblp/simplex.hpp"
#include "miblp/types.hpp"

namespace miblp {

enum class CutClass { IntegerNoGood, GeneralizedNoGood, HypercubeIc };

std::string to_string(CutClass c);

/// A valid inequality coeffs'(x, y) >= rhs over the combined variable vector,
/// violated by the point it was generated to remove. Validity is relative to
/// the originating node's bound box and the incumbent value at generation
/// time (cuts may legitimately exclude non-improving feasible points).
struct Cut {
  Vector coeffs;
  double rhs;
  CutClass cls;
  std::int64_t origin_node = -1;
  Vector lb_x, ub_x, lb_y, ub_y;  ///< originating node's box
  double u_at_generation = kInf;
};

/// Sum of the rows binding at an integral, bilevel-infeasible vertex, with
/// the right-hand side raised by one. Valid when both levels are purely
/// integer and all constraint data are integral. Variable bounds count as
/// binding rows. Returns nothing when the preconditions fail, which signals
/// the caller to branch instead.
std::optional<Cut> integer_no_good(const MiblpInstance& inst,
                                   const InstanceProperties& props, const Vector& x,
                                   const Vector& y, const Vector& lb_x,
                                   const Vector& ub_x, const Vector& lb_y,
                                   const Vector& ub_y);

/// Removes the fiber x_L = gamma from a binary linking lattice:
/// sum_{gamma_i = 0} x_i + sum_{gamma_i = 1} (1 - x_i) >= 1.
std::optional<Cut> generalized_no_good(const MiblpInstance& inst,
                                       const InstanceProperties& props,
                                       const Vector& gamma_full_x);

/// Intersection cut from the relaxation basis against the box
/// gamma - e <= x_L <= gamma + e, which contains no improving bilevel
/// feasible point in its interior once the fiber is accounted for. The
/// node's LP (base rows plus active cuts) and its solved basis are required.
std::optional<Cut> hypercube_intersection(const MiblpInstance& inst,
                                          const std::vector<Index>& linking,
                                          const LpModel& node_lp,
                                          const LpSolution& relaxation);

/// Enumerates the improving bilevel feasible points within the cut's
/// originating box and reports any that violate the cut. An empty report
/// means the cut is valid on its claimed domain. Follower continuous blocks
/// are checked by maximizing the violation over each optimal-reaction face.
struct CutAuditReport {
  std::vector<std::pair<Vector, Vector>> violators;
  bool empty() const { return violators.empty(); }
};

CutAuditReport audit_cut(const Cut& cut, const MiblpInstance& inst, double incumbent,
                         const EnumerationCaps& caps = {});

}  // namespace miblp
