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
#include <optional>
#include <unordered_map>
#include <vector>

#include "miblp/types.hpp"

namespace miblp {

enum class PoolTag { SecondLevelIsInfeasible, SecondLevelIsFeasible, UbIsSolved };

/// Cached results for one visited linking-value vector.
struct PoolEntry {
  PoolTag tag;
  Vector reaction;          ///< follower optimum, when feasible
  double phi = kInf;        ///< follower value, when feasible
  bool ub_feasible = false; ///< fiber upper-bound problem had a solution
  Vector ub_x, ub_y;
  double ub_value = kInf;
};

/// Hash map over visited linking-value vectors. Keys are the linking values
/// rounded to integers (they are integral by construction when stored). Tags
/// only ever advance from SecondLevelIsFeasible to UbIsSolved.
class LinkingPool {
 public:
  using Key = std::vector<std::int64_t>;

  static Key key_of(const Vector& linking_values);

  const PoolEntry* find(const Key& k) const;

  /// First insertion for a key; rejects downgrades of an existing tag.
  void store_second_level(const Key& k, std::optional<std::pair<Vector, double>> feasible);

  /// Upgrades (or creates) an entry to UbIsSolved.
  void store_ub(const Key& k, bool feasible, const Vector& x, const Vector& y, double value);

  std::size_t size() const { return entries_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return h;
    }
  };
  std::unordered_map<Key, PoolEntry, KeyHash> entries_;
};

}  // namespace miblp
