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

#include <string>
#include <vector>

#include "miblp/instance.hpp"
#include "miblp/result.hpp"
#include "miblp/types.hpp"

namespace miblp {

/// Flat MILP description as read from an MPS file, before any bilevel
/// structure is imposed.
struct MpsData {
  std::string name;
  std::vector<std::string> row_names;  ///< constraint rows, file order
  std::vector<char> row_sense;         ///< 'L', 'G' or 'E'
  std::vector<double> rhs;
  std::vector<double> range;  ///< NaN when the row is not ranged
  std::vector<std::string> col_names;
  Matrix coeffs;  ///< constraint rows by columns
  Vector obj;
  double obj_constant = 0.0;
  Vector lb, ub;
  std::vector<bool> integer;
  std::vector<std::string> warnings;

  Index num_rows() const { return static_cast<Index>(row_names.size()); }
  Index num_cols() const { return static_cast<Index>(col_names.size()); }
};

/// Parses fixed- or free-format MPS (NAME/ROWS/COLUMNS/RHS/RANGES/BOUNDS,
/// INTORG/INTEND markers). Malformed input throws Error with a line number.
MpsData read_mps(const std::string& path);

void write_mps(const MpsData& data, const std::string& path);

/// Second-level structure annotations: which columns and rows belong to the
/// follower, the follower objective, and its sense.
struct AuxInfo {
  Index n_lower = 0;
  Index m_lower = 0;
  std::vector<Index> lower_cols;
  std::vector<Index> lower_rows;
  std::vector<double> lower_obj;
  int obj_sense = 1;  ///< +1 min, -1 max
};

/// Parses the line-oriented auxiliary format: records N, M, LC, LR, LO, OS.
AuxInfo read_aux(const std::string& path);

void write_aux(const AuxInfo& aux, const std::string& path);

struct AssembleOptions {
  /// Nonzero right-hand sides on second-level rows are rejected unless this
  /// is set, in which case a first-level variable fixed to one absorbs them.
  bool fixed_rhs_variable = false;
};

/// Builds the canonical bilevel instance from an MPS file and its auxiliary
/// annotations: partitions rows and columns by level, normalizes every row
/// to >= sense (splitting equalities and ranges), moves integer variables to
/// the front of each level, and normalizes the follower objective to
/// minimization.
MiblpInstance assemble(const MpsData& mps, const AuxInfo& aux,
                       const AssembleOptions& opts = {});

/// A follower MILP plus leader-side budget rows, for the interdiction
/// transform. The follower maximizes profit'y subject to rows y >= rhs,
/// 0 <= y <= upper.
struct InterdictionProblem {
  Vector profit;
  Matrix rows;
  Vector rhs;
  Vector upper;
  std::vector<bool> integer;  ///< per follower variable; empty means all
  Matrix leader_rows;         ///< budget rows over the leader's n variables
  Vector leader_rhs;
};

/// Builds the zero-sum interdiction instance: one binary leader variable per
/// follower variable, coupling rows y <= diag(u)(e - x), and the follower
/// right-hand side carried by a variable fixed to one.
MiblpInstance build_interdiction(const InterdictionProblem& prob);

void write_solution(const BilevelResult& result, const MiblpInstance& inst,
                    const std::string& path);

/// Parsed form of a solution file, used for round-trip checks.
struct SolutionFile {
  std::string status;
  double objective = kInf;
  double upper_bound = kInf;
  double lower_bound = -kInf;
  std::vector<std::pair<std::string, double>> variables;
  std::map<std::string, double> stats;
};

SolutionFile read_solution(const std::string& path);

}  // namespace miblp
