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

#include "miblp/events.hpp"

#include <sstream>

namespace miblp {

std::string to_string(Event::Kind k) {
  switch (k) {
    case Event::Kind::NodeOpened: return "node_opened";
    case Event::Kind::NodeBounded: return "node_bounded";
    case Event::Kind::NodePruned: return "node_pruned";
    case Event::Kind::NodeBranched: return "node_branched";
    case Event::Kind::PoolHit: return "pool_hit";
    case Event::Kind::SlSolved: return "sl_solved";
    case Event::Kind::UbSolved: return "ub_solved";
    case Event::Kind::CutAdded: return "cut_added";
    case Event::Kind::Incumbent: return "incumbent";
    case Event::Kind::HeuristicRun: return "heuristic_run";
  }
  return "unknown";
}

std::string render(const Event& e) {
  std::ostringstream out;
  out.precision(17);
  out << "event=" << to_string(e.kind) << " node=" << e.node << " depth=" << e.depth
      << " lower=" << e.node_lower << " global_lower=" << e.global_lower
      << " global_upper=" << e.global_upper;
  if (!e.detail.empty()) out << " detail=" << e.detail;
  return out.str();
}

}  // namespace miblp
