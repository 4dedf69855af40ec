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

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace miblp {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Numerical tolerances shared across the solver stack.
struct Tolerances {
  double feasibility = 1e-7;      ///< row / bound satisfaction
  double optimality = 1e-7;       ///< objective comparisons, duality gap
  double integrality = 1e-6;      ///< distance to nearest integer
  double data_integrality = 1e-9; ///< coefficient integrality detection
};

inline const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

/// Unrecoverable contract or I/O failure.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integral(double v, double eps) {
  return std::abs(v - std::round(v)) <= eps;
}

inline bool is_integral(double v) { return is_integral(v, tol().integrality); }

inline bool is_finite(double v) { return std::isfinite(v); }

}  // namespace miblp
