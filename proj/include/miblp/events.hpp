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
#include <memory>
#include <string>

#include "miblp/types.hpp"

namespace miblp {

/// Bound box of a node at the time an event fired.
struct NodeBox {
  Vector lb_x, ub_x, lb_y, ub_y;
};

/// Structured solver event. One line per event in the text rendering:
///   event=<kind> node=<id> depth=<d> lower=<L^t> global_lower=<L>
///   global_upper=<U> detail=<text>
struct Event {
  enum class Kind {
    NodeOpened,
    NodeBounded,
    NodePruned,
    NodeBranched,
    PoolHit,
    SlSolved,
    UbSolved,
    CutAdded,
    Incumbent,
    HeuristicRun,
  };

  Kind kind;
  std::int64_t node = -1;
  int depth = 0;
  double node_lower = -kInf;
  double global_lower = -kInf;
  double global_upper = kInf;
  std::string detail;
  std::shared_ptr<const NodeBox> box;  ///< set on NodeBounded events
};

using EventSink = std::function<void(const Event&)>;

std::string to_string(Event::Kind k);

/// Text rendering used by the command-line tool's event log.
std::string render(const Event& e);

}  // namespace miblp
