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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "miblp/instance_io.hpp"

namespace miblp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw Error(path + ":" + std::to_string(line) + ": " + msg);
}

double parse_number(const std::string& path, int line, const std::string& tok) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) fail(path, line, "bad number '" + tok + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(path, line, "bad number '" + tok + "'");
  }
}

struct Coefficient {
  Index row, col;
  double value;
};

struct BoundUpdate {
  Index col;
  std::string kind;
  double value;
  int line;
};

}  // namespace

MpsData read_mps(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open MPS file: " + path);

  MpsData data;
  std::unordered_map<std::string, Index> row_index;  // constraint rows only
  std::unordered_map<std::string, Index> col_index;
  std::set<std::pair<Index, Index>> seen_coeff;
  std::set<Index> seen_rhs, seen_range;
  std::vector<Coefficient> coeffs;
  std::vector<BoundUpdate> bound_updates;
  std::vector<double> obj_coeffs;
  std::string obj_name;
  bool have_obj_row = false;
  bool integer_mode = false;
  bool maximize = false;

  enum class Section { None, ObjSense, Rows, Columns, Rhs, Ranges, Bounds, Done };
  Section section = Section::None;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;

    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (header) {
      const std::string& h = tokens[0];
      if (h == "NAME") {
        if (tokens.size() > 1) data.name = tokens[1];
      } else if (h == "OBJSENSE") {
        section = Section::ObjSense;
      } else if (h == "ROWS") {
        section = Section::Rows;
      } else if (h == "COLUMNS") {
        section = Section::Columns;
      } else if (h == "RHS") {
        section = Section::Rhs;
      } else if (h == "RANGES") {
        section = Section::Ranges;
      } else if (h == "BOUNDS") {
        section = Section::Bounds;
      } else if (h == "ENDATA") {
        section = Section::Done;
        break;
      } else {
        fail(path, lineno, "unknown section '" + h + "'");
      }
      continue;
    }

    switch (section) {
      case Section::ObjSense: {
        if (tokens[0] == "MAX" || tokens[0] == "MAXIMIZE") maximize = true;
        else if (tokens[0] == "MIN" || tokens[0] == "MINIMIZE") maximize = false;
        else fail(path, lineno, "unknown objective sense");
        break;
      }
      case Section::Rows: {
        if (tokens.size() < 2) fail(path, lineno, "ROWS entry needs a type and a name");
        const char type =
            static_cast<char>(std::toupper(static_cast<unsigned char>(tokens[0][0])));
        const std::string& name = tokens[1];
        if (type == 'N') {
          if (have_obj_row) fail(path, lineno, "multiple objective rows");
          have_obj_row = true;
          obj_name = name;
        } else if (type == 'L' || type == 'G' || type == 'E') {
          if (row_index.count(name)) fail(path, lineno, "duplicate row '" + name + "'");
          row_index[name] = data.num_rows();
          data.row_names.push_back(name);
          data.row_sense.push_back(type);
          data.rhs.push_back(0.0);
          data.range.push_back(std::nan(""));
        } else {
          fail(path, lineno, "unknown row type");
        }
        break;
      }
      case Section::Columns: {
        if (tokens.size() >= 3 && tokens[1] == "'MARKER'") {
          const std::string& mark = tokens[2];
          if (mark == "'INTORG'") integer_mode = true;
          else if (mark == "'INTEND'") integer_mode = false;
          else fail(path, lineno, "unknown marker");
          break;
        }
        if (tokens.size() < 3 || tokens.size() % 2 == 0) {
          fail(path, lineno, "COLUMNS entry needs a name plus row/value pairs");
        }
        const std::string& col = tokens[0];
        Index j;
        auto it = col_index.find(col);
        if (it == col_index.end()) {
          j = data.num_cols();
          col_index[col] = j;
          data.col_names.push_back(col);
          data.integer.push_back(integer_mode);
          obj_coeffs.push_back(0.0);
        } else {
          j = it->second;
        }
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          const std::string& row = tokens[k];
          const double v = parse_number(path, lineno, tokens[k + 1]);
          if (have_obj_row && row == obj_name) {
            obj_coeffs[j] = v;
            continue;
          }
          auto rit = row_index.find(row);
          if (rit == row_index.end()) fail(path, lineno, "unknown row '" + row + "'");
          if (!seen_coeff.insert({rit->second, j}).second) {
            fail(path, lineno, "duplicate coefficient for row '" + row + "'");
          }
          coeffs.push_back({rit->second, j, v});
        }
        break;
      }
      case Section::Rhs: {
        if (tokens.size() < 3 || tokens.size() % 2 == 0) {
          fail(path, lineno, "RHS entry needs a set name plus row/value pairs");
        }
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          const std::string& row = tokens[k];
          const double v = parse_number(path, lineno, tokens[k + 1]);
          if (have_obj_row && row == obj_name) {
            data.obj_constant = -v;
            data.warnings.push_back("objective constant ignored");
            continue;
          }
          auto rit = row_index.find(row);
          if (rit == row_index.end()) fail(path, lineno, "unknown row '" + row + "'");
          if (!seen_rhs.insert(rit->second).second) {
            fail(path, lineno, "duplicate RHS for row '" + row + "'");
          }
          data.rhs[rit->second] = v;
        }
        break;
      }
      case Section::Ranges: {
        if (tokens.size() < 3 || tokens.size() % 2 == 0) {
          fail(path, lineno, "RANGES entry needs a set name plus row/value pairs");
        }
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          const std::string& row = tokens[k];
          const double v = parse_number(path, lineno, tokens[k + 1]);
          auto rit = row_index.find(row);
          if (rit == row_index.end()) fail(path, lineno, "unknown row '" + row + "'");
          if (!seen_range.insert(rit->second).second) {
            fail(path, lineno, "duplicate range for row '" + row + "'");
          }
          data.range[rit->second] = v;
        }
        break;
      }
      case Section::Bounds: {
        if (tokens.size() < 3) fail(path, lineno, "BOUNDS entry too short");
        const std::string& kind = tokens[0];
        const std::string& col = tokens[2];
        auto cit = col_index.find(col);
        if (cit == col_index.end()) fail(path, lineno, "unknown column '" + col + "'");
        double v = 0.0;
        if (kind != "FR" && kind != "MI" && kind != "PL" && kind != "BV") {
          if (tokens.size() < 4) fail(path, lineno, "bound needs a value");
          v = parse_number(path, lineno, tokens[3]);
        }
        bound_updates.push_back({cit->second, kind, v, lineno});
        break;
      }
      case Section::None:
      case Section::Done:
        fail(path, lineno, "data outside any section");
    }
  }

  if (data.num_cols() == 0) throw Error(path + ": no variables");
  if (!have_obj_row) data.warnings.push_back("no objective row; zero objective assumed");

  data.coeffs = Matrix::Zero(data.num_rows(), data.num_cols());
  for (const auto& t : coeffs) data.coeffs(t.row, t.col) = t.value;
  data.obj = Eigen::Map<Vector>(obj_coeffs.data(), static_cast<Index>(obj_coeffs.size()));
  if (maximize) {
    data.obj = -data.obj;
    data.warnings.push_back("objective sense MAX normalized to MIN");
  }

  data.lb = Vector::Zero(data.num_cols());
  data.ub = Vector::Constant(data.num_cols(), kInf);
  for (const auto& u : bound_updates) {
    const Index j = u.col;
    if (u.kind == "UP") data.ub(j) = u.value;
    else if (u.kind == "LO") data.lb(j) = u.value;
    else if (u.kind == "FX") { data.lb(j) = u.value; data.ub(j) = u.value; }
    else if (u.kind == "FR") { data.lb(j) = -kInf; data.ub(j) = kInf; }
    else if (u.kind == "MI") data.lb(j) = -kInf;
    else if (u.kind == "PL") data.ub(j) = kInf;
    else if (u.kind == "BV") { data.lb(j) = 0; data.ub(j) = 1; data.integer[j] = true; }
    else if (u.kind == "UI") { data.ub(j) = u.value; data.integer[j] = true; }
    else if (u.kind == "LI") { data.lb(j) = u.value; data.integer[j] = true; }
    else fail(path, u.line, "unknown bound type '" + u.kind + "'");
  }
  return data;
}

void write_mps(const MpsData& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write MPS file: " + path);
  out << std::setprecision(17);
  out << "NAME          " << (data.name.empty() ? "UNNAMED" : data.name) << "\n";
  out << "ROWS\n N  OBJ\n";
  for (Index i = 0; i < data.num_rows(); ++i) {
    out << " " << data.row_sense[i] << "  " << data.row_names[i] << "\n";
  }
  out << "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (Index j = 0; j < data.num_cols(); ++j) {
    if (data.integer[j] != in_int) {
      out << "    MARKER" << marker++ << "    'MARKER'    "
          << (data.integer[j] ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = data.integer[j];
    }
    if (data.obj(j) != 0.0) {
      out << "    " << data.col_names[j] << "  OBJ  " << data.obj(j) << "\n";
    }
    for (Index i = 0; i < data.num_rows(); ++i) {
      if (data.coeffs(i, j) != 0.0) {
        out << "    " << data.col_names[j] << "  " << data.row_names[i] << "  "
            << data.coeffs(i, j) << "\n";
      }
    }
  }
  if (in_int) out << "    MARKER" << marker++ << "    'MARKER'    'INTEND'\n";
  out << "RHS\n";
  for (Index i = 0; i < data.num_rows(); ++i) {
    if (data.rhs[i] != 0.0) out << "    RHS  " << data.row_names[i] << "  " << data.rhs[i] << "\n";
  }
  bool any_range = false;
  for (Index i = 0; i < data.num_rows(); ++i) {
    if (!std::isnan(data.range[i])) { any_range = true; break; }
  }
  if (any_range) {
    out << "RANGES\n";
    for (Index i = 0; i < data.num_rows(); ++i) {
      if (!std::isnan(data.range[i])) {
        out << "    RNG  " << data.row_names[i] << "  " << data.range[i] << "\n";
      }
    }
  }
  out << "BOUNDS\n";
  for (Index j = 0; j < data.num_cols(); ++j) {
    const double l = data.lb(j), u = data.ub(j);
    if (std::isfinite(l) && l != 0.0) out << " LO BND  " << data.col_names[j] << "  " << l << "\n";
    if (!std::isfinite(l)) out << " MI BND  " << data.col_names[j] << "\n";
    if (std::isfinite(u)) out << " UP BND  " << data.col_names[j] << "  " << u << "\n";
  }
  out << "ENDATA\n";
  if (!out) throw Error("write failure: " + path);
}

AuxInfo read_aux(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open auxiliary file: " + path);

  AuxInfo aux;
  bool have_n = false, have_m = false, have_os = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2) fail(path, lineno, "record needs a value");
    const std::string& kind = tokens[0];
    if (kind == "N") {
      aux.n_lower = static_cast<Index>(parse_number(path, lineno, tokens[1]));
      have_n = true;
    } else if (kind == "M") {
      aux.m_lower = static_cast<Index>(parse_number(path, lineno, tokens[1]));
      have_m = true;
    } else if (kind == "LC") {
      aux.lower_cols.push_back(static_cast<Index>(parse_number(path, lineno, tokens[1])));
    } else if (kind == "LR") {
      aux.lower_rows.push_back(static_cast<Index>(parse_number(path, lineno, tokens[1])));
    } else if (kind == "LO") {
      aux.lower_obj.push_back(parse_number(path, lineno, tokens[1]));
    } else if (kind == "OS") {
      const double v = parse_number(path, lineno, tokens[1]);
      if (v != 1.0 && v != -1.0) fail(path, lineno, "OS must be 1 or -1");
      aux.obj_sense = static_cast<int>(v);
      have_os = true;
    } else {
      fail(path, lineno, "unknown record '" + kind + "'");
    }
  }
  if (!have_n) throw Error(path + ": missing N record");
  if (!have_m) throw Error(path + ": missing M record");
  if (!have_os) throw Error(path + ": missing OS record");
  if (static_cast<Index>(aux.lower_cols.size()) != aux.n_lower) {
    throw Error(path + ": LC count does not match N");
  }
  if (static_cast<Index>(aux.lower_rows.size()) != aux.m_lower) {
    throw Error(path + ": LR count does not match M");
  }
  if (static_cast<Index>(aux.lower_obj.size()) != aux.n_lower) {
    throw Error(path + ": LO count does not match N");
  }
  std::set<Index> cols(aux.lower_cols.begin(), aux.lower_cols.end());
  if (static_cast<Index>(cols.size()) != aux.n_lower) throw Error(path + ": duplicate LC index");
  std::set<Index> rows(aux.lower_rows.begin(), aux.lower_rows.end());
  if (static_cast<Index>(rows.size()) != aux.m_lower) throw Error(path + ": duplicate LR index");
  for (Index i : aux.lower_cols) {
    if (i < 0) throw Error(path + ": negative LC index");
  }
  for (Index i : aux.lower_rows) {
    if (i < 0) throw Error(path + ": negative LR index");
  }
  return aux;
}

void write_aux(const AuxInfo& aux, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write auxiliary file: " + path);
  out << std::setprecision(17);
  out << "N " << aux.n_lower << "\n";
  out << "M " << aux.m_lower << "\n";
  for (Index i : aux.lower_cols) out << "LC " << i << "\n";
  for (Index i : aux.lower_rows) out << "LR " << i << "\n";
  for (double v : aux.lower_obj) out << "LO " << v << "\n";
  out << "OS " << aux.obj_sense << "\n";
  if (!out) throw Error("write failure: " + path);
}

void write_solution(const BilevelResult& result, const MiblpInstance& inst,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write solution file: " + path);
  out << std::setprecision(17);
  out << "status " << to_string(result.status) << "\n";
  if (result.has_solution()) out << "objective " << result.upper_bound << "\n";
  out << "bound_upper " << result.upper_bound << "\n";
  out << "bound_lower " << result.lower_bound << "\n";
  if (result.has_solution()) {
    for (Index i = 0; i < inst.n1; ++i) {
      const std::string name = static_cast<size_t>(i) < inst.x_names.size()
                                   ? inst.x_names[i]
                                   : "x" + std::to_string(i);
      out << "var " << name << " " << (*result.x)(i) << "\n";
    }
    for (Index j = 0; j < inst.n2; ++j) {
      const std::string name = static_cast<size_t>(j) < inst.y_names.size()
                                   ? inst.y_names[j]
                                   : "y" + std::to_string(j);
      out << "var " << name << " " << (*result.y)(j) << "\n";
    }
  }
  out << "stat nodes " << result.stats.nodes << "\n";
  out << "stat sl_milp_solves " << result.stats.sl_milp_solves << "\n";
  out << "stat ub_solves " << result.stats.ub_solves << "\n";
  out << "stat pool_hits " << result.stats.pool_hits << "\n";
  for (const auto& [cls, count] : result.stats.cuts_by_class) {
    out << "stat cuts_" << cls << " " << count << "\n";
  }
  out << "stat cuts_total " << result.stats.cuts_total() << "\n";
  out << "stat lp_iterations " << result.stats.lp_iterations << "\n";
  out << "stat wall_time_sec " << result.stats.wall_time_sec << "\n";
  out << "end\n";
  if (!out) throw Error("write failure: " + path);
}

SolutionFile read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open solution file: " + path);
  SolutionFile sol;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "end") break;
    if (kind == "status" && tokens.size() >= 2) {
      sol.status = tokens[1];
    } else if (kind == "objective" && tokens.size() >= 2) {
      sol.objective = parse_number(path, lineno, tokens[1]);
    } else if (kind == "bound_upper" && tokens.size() >= 2) {
      sol.upper_bound = parse_number(path, lineno, tokens[1]);
    } else if (kind == "bound_lower" && tokens.size() >= 2) {
      sol.lower_bound = parse_number(path, lineno, tokens[1]);
    } else if (kind == "var" && tokens.size() >= 3) {
      sol.variables.emplace_back(tokens[1], parse_number(path, lineno, tokens[2]));
    } else if (kind == "stat" && tokens.size() >= 3) {
      sol.stats[tokens[1]] = parse_number(path, lineno, tokens[2]);
    } else {
      fail(path, lineno, "unrecognized solution record '" + kind + "'");
    }
  }
  return sol;
}

}  // namespace miblp
