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

#include "miblp/result.hpp"

namespace miblp {

std::string to_string(BilevelStatus s) {
  switch (s) {
    case BilevelStatus::Optimal:
      return "optimal";
    case BilevelStatus::Infeasible:
      return "infeasible";
    case BilevelStatus::TimeLimit:
      return "time_limit";
    case BilevelStatus::NodeLimit:
      return "node_limit";
  }
  return "unknown";
}

}  // namespace miblp
