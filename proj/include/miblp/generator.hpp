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

#include "miblp/instance_io.hpp"
#include "miblp/types.hpp"

namespace miblp {

enum class GeneratorProfile {
  IblpDen,       ///< all-integer, no first-level rows, 20 second-level rows
  MiblpXu,       ///< integer leader in [0,10], mixed follower, 0.4 n rows per level
  Interdiction,  ///< knapsack-style interdiction with a unit-budget leader
};

GeneratorProfile parse_profile(const std::string& name);

/// Deterministic random instance in MPS + auxiliary form. Matrix
/// coefficients are uniform integers in [-50, 50], objectives in [-100, -1];
/// every instance carries a follower capacity row, which rules out follower
/// recession rays. Throws on size < 2.
struct GeneratedInstance {
  MpsData mps;
  AuxInfo aux;
};

GeneratedInstance generate_instance(GeneratorProfile profile, Index size,
                                    std::uint64_t seed);

/// Writes base.mps and base.aux.
void write_generated(const GeneratedInstance& gen, const std::string& base_path);

}  // namespace miblp
