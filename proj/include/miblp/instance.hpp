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

#include "miblp/types.hpp"

namespace miblp {

/// A mixed integer bilevel linear program in canonical minimization form.
///
/// The leader controls x (n1 variables, the first r1 integer), the follower
/// controls y (n2 variables, the first r2 integer). First-level rows read
/// A1 x + G1 y >= b1; second-level rows read G2 y >= A2 x with no constant
/// term. Constant follower right-hand sides are encoded through a first-level
/// variable fixed to one whose A2 column carries the constants (see
/// instance_io). All rows are >= rows; variable bounds subsume nonnegativity.
///
/// Immutable after construction; safe to share across concurrent solves.
struct MiblpInstance {
  Index n1 = 0;  ///< first-level variable count
  Index n2 = 0;  ///< second-level variable count
  Index r1 = 0;  ///< integer first-level variables occupy indices [0, r1)
  Index r2 = 0;  ///< integer second-level variables occupy indices [0, r2)

  Vector c;   ///< first-level objective on x (length n1)
  Vector d1;  ///< first-level objective on y (length n2)
  Vector d2;  ///< second-level objective on y (length n2)

  Matrix a1;  ///< m1 x n1
  Matrix g1;  ///< m1 x n2
  Vector b1;  ///< m1
  Matrix a2;  ///< m2 x n1
  Matrix g2;  ///< m2 x n2

  Vector lb_x, ub_x;  ///< length n1; finite on integer columns
  Vector lb_y, ub_y;  ///< length n2; finite on integer columns

  std::vector<std::string> x_names;  ///< optional, parallel to x
  std::vector<std::string> y_names;  ///< optional, parallel to y

  /// Column fixed to one that carries follower right-hand-side constants,
  /// when the instance was assembled with that encoding.
  std::optional<Index> rhs_carrier;

  Index m1() const { return b1.size(); }
  Index m2() const { return a2.rows(); }

  bool x_is_integer(Index i) const { return i < r1; }
  bool y_is_integer(Index j) const { return j < r2; }
};

/// Indices of first-level variables with a nonzero column in A2. Fixing all
/// of them fixes the follower's feasible region.
std::vector<Index> linking_set(const MiblpInstance& inst);

struct Diagnostic {
  enum class Code {
    DimensionMismatch,
    LinkingNotInteger,
    LinkingUnbounded,
    IntegerUnbounded,
    SecondLevelUnboundedRay,
    BadBounds,
  };
  Code code;
  std::string message;
};

/// Structural validation. Returns an empty list when the instance satisfies
/// the model contract: consistent dimensions, integer linking variables with
/// finite bounds, and no follower ray r >= 0 with G2 r >= 0 and d2 r < 0.
/// Boundedness of the relaxation is checked lazily at solve time.
std::vector<Diagnostic> validate(const MiblpInstance& inst);

struct InstanceProperties {
  std::vector<Index> linking;   ///< the linking index set
  bool all_linking_binary = false;
  bool pure_integer = false;    ///< r1 == n1 and r2 == n2
  bool integer_data = false;    ///< constraint data, rhs and finite bounds integral
  bool zero_sum = false;        ///< d1 == -d2
  bool is_interdiction = false;
};

/// Deterministic structural analysis used for cut auto-selection.
/// Precondition: validate(inst) is clean.
InstanceProperties classify(const MiblpInstance& inst);

}  // namespace miblp
