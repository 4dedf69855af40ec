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
#include <map>
#include <optional>
#include <string>

#include "miblp/types.hpp"

namespace miblp {

enum class BilevelStatus { Optimal, Infeasible, TimeLimit, NodeLimit };

std::string to_string(BilevelStatus s);

struct SolveStatistics {
  std::int64_t nodes = 0;
  std::int64_t sl_milp_solves = 0;  ///< fresh follower MILP solves
  std::int64_t ub_solves = 0;       ///< fresh fiber upper-bound MILP solves
  std::int64_t pool_hits = 0;
  std::map<std::string, std::int64_t> cuts_by_class;
  std::int64_t lp_iterations = 0;
  double wall_time_sec = 0.0;

  std::int64_t cuts_total() const {
    std::int64_t t = 0;
    for (const auto& [k, v] : cuts_by_class) t += v;
    return t;
  }
};

struct BilevelResult {
  BilevelStatus status = BilevelStatus::Infeasible;
  std::optional<Vector> x;  ///< incumbent leader part
  std::optional<Vector> y;  ///< incumbent follower part
  double upper_bound = kInf;
  double lower_bound = -kInf;
  SolveStatistics stats;

  double objective() const { return upper_bound; }
  bool has_solution() const { return x.has_value(); }
};

}  // namespace miblp
