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

#include "miblp/pool.hpp"

#include <cmath>

namespace miblp {

LinkingPool::Key LinkingPool::key_of(const Vector& linking_values) {
  Key k(linking_values.size());
  for (Index i = 0; i < linking_values.size(); ++i) {
    k[i] = static_cast<std::int64_t>(std::llround(linking_values(i)));
  }
  return k;
}

const PoolEntry* LinkingPool::find(const Key& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? nullptr : &it->second;
}

void LinkingPool::store_second_level(const Key& k,
                                     std::optional<std::pair<Vector, double>> feasible) {
  auto it = entries_.find(k);
  if (it != entries_.end()) return;  // tags never revert
  PoolEntry e;
  if (feasible.has_value()) {
    e.tag = PoolTag::SecondLevelIsFeasible;
    e.reaction = std::move(feasible->first);
    e.phi = feasible->second;
  } else {
    e.tag = PoolTag::SecondLevelIsInfeasible;
  }
  entries_.emplace(k, std::move(e));
}

void LinkingPool::store_ub(const Key& k, bool feasible, const Vector& x, const Vector& y,
                           double value) {
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    PoolEntry e;
    e.tag = PoolTag::UbIsSolved;
    e.ub_feasible = feasible;
    e.ub_x = x;
    e.ub_y = y;
    e.ub_value = value;
    entries_.emplace(k, std::move(e));
    return;
  }
  PoolEntry& e = it->second;
  if (e.tag == PoolTag::SecondLevelIsInfeasible) return;  // nothing to upgrade
  e.tag = PoolTag::UbIsSolved;
  e.ub_feasible = feasible;
  e.ub_x = x;
  e.ub_y = y;
  e.ub_value = value;
}

}  // namespace miblp
