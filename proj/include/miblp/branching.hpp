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

#include <vector>

#include "miblp/instance.hpp"
#include "miblp/params.hpp"
#include "miblp/types.hpp"

namespace miblp {

/// A variable column in the combined (x, y) ordering: x columns first.
struct BranchCandidate {
  Index column;        ///< combined index
  double value;        ///< relaxation value
  bool integral_split; ///< split at the integral value rather than floor/ceil
};

/// A two-child variable disjunction: the down child imposes column <= down_ub,
/// the up child imposes column >= up_lb. The children partition the parent's
/// integer range of that column and neither child is empty.
struct BranchDecision {
  Index column;
  double value;
  double down_ub;
  double up_lb;
};

/// Per-column average objective degradations per unit of bound change.
class PseudocostTable {
 public:
  explicit PseudocostTable(Index columns) : up_(columns), down_(columns) {}

  void observe_up(Index column, double degradation_per_unit);
  void observe_down(Index column, double degradation_per_unit);

  /// Estimate for one direction; columns never branched fall back to the
  /// average of initialized entries, or 1 when none exist yet.
  double estimate_up(Index column) const;
  double estimate_down(Index column) const;

  int count_up(Index column) const { return up_[column].count; }
  int count_down(Index column) const { return down_[column].count; }

 private:
  struct Entry {
    double mean = 0.0;
    int count = 0;
  };
  double estimate(const std::vector<Entry>& side, Index column) const;
  std::vector<Entry> up_, down_;
};

/// Builds the branching candidate list for a node.
///
/// Linking scheme: fractional linking variables first; when the linking part
/// is integral, unfixed linking variables with an integral-value split; empty
/// when every linking variable is fixed (the caller must then cut or prune).
/// Fractional scheme: every integer column with a fractional value.
std::vector<BranchCandidate> candidates(const MiblpInstance& inst,
                                        const std::vector<Index>& linking,
                                        const Vector& x, const Vector& y,
                                        const Vector& lb_x, const Vector& ub_x,
                                        const Vector& lb_y, const Vector& ub_y,
                                        BranchStrategy strategy);

/// Pseudocost product-score selection; ties break to the lowest column.
BranchDecision select(const std::vector<BranchCandidate>& cands,
                      const PseudocostTable& pseudocosts, const Vector& lb,
                      const Vector& ub);

/// Folds the observed per-unit degradations of one branching into the table.
void update_pseudocosts(PseudocostTable& table, const BranchDecision& decision,
                        double parent_bound, double down_child_bound,
                        double up_child_bound);

}  // namespace miblp
