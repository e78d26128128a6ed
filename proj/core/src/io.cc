// Copyright 2026 The MCLP Authors
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


#include "mclp/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mclp/error.h"

namespace mclp {
namespace {

using Json = nlohmann::json;

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kValidationError, what);
}

const Json& Field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) ParseFail(std::string("missing field '") + name + "'");
  return *it;
}

// Numbers, or the strings "inf", "-inf" and "nan" when allowed.
double ToNumber(const Json& v, const std::string& where, bool allow_special) {
  if (v.is_number()) return v.get<double>();
  if (allow_special && v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  ParseFail(where + ": expected a number");
}

Vector ToVector(const Json& v, const std::string& where) {
  if (!v.is_array()) ParseFail(where + ": expected an array of numbers");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) =
        ToNumber(v[i], where + "[" + std::to_string(i + 1) + "]", false);
  }
  return out;
}

// Row-major array of arrays. Rows are numbered from 1 in messages.
Matrix ToMatrix(const Json& v, const std::string& where) {
  if (!v.is_array()) ParseFail(where + ": expected an array of rows");
  const size_t rows = v.size();
  size_t cols = 0;
  for (size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array()) {
      ParseFail(where + ": row " + std::to_string(r + 1) + " is not an array");
    }
    if (r == 0) cols = v[r].size();
    if (v[r].size() != cols) {
      Invalid(where + ": row " + std::to_string(r + 1) + " length");
    }
  }
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          ToNumber(v[r][c],
                   where + "[" + std::to_string(r + 1) + "][" +
                       std::to_string(c + 1) + "]",
                   false);
    }
  }
  return out;
}

// An empty block takes its shape from the vectors that size it.
Matrix ShapeBlock(Matrix m, Eigen::Index rows, Eigen::Index cols) {
  if (m.size() == 0 && (rows == 0 || cols == 0)) m.resize(rows, cols);
  return m;
}

double Horizon(const Json& j) {
  const double t = ToNumber(Field(j, "horizon"), "horizon", false);
  if (!(t > 0.0) || !std::isfinite(t)) Invalid("horizon: must be positive");
  return t;
}

template <typename Fn>
void Revalidate(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidationError) throw;
    Invalid(e.what());
  }
}

ProblemData ParseMclp(const Json& j) {
  ProblemData p;
  p.A = ToMatrix(Field(j, "A"), "A");
  p.beta = ToVector(Field(j, "beta"), "beta");
  p.b = ToVector(Field(j, "b"), "b");
  p.gamma = ToVector(Field(j, "gamma"), "gamma");
  p.c = ToVector(Field(j, "c"), "c");
  p.horizon = Horizon(j);
  Revalidate([&] { ValidateProblem(p); });
  return p;
}

SclpData ParseSclp(const Json& j) {
  SclpData s;
  s.alpha = ToVector(Field(j, "alpha"), "alpha");
  s.a = ToVector(Field(j, "a"), "a");
  s.b = ToVector(Field(j, "b"), "b");
  s.gamma = ToVector(Field(j, "gamma"), "gamma");
  s.c = ToVector(Field(j, "c"), "c");
  s.d = ToVector(Field(j, "d"), "d");
  s.G = ToMatrix(Field(j, "G"), "G");
  s.F = ShapeBlock(ToMatrix(Field(j, "F"), "F"), s.alpha.size(), s.d.size());
  s.H = ShapeBlock(ToMatrix(Field(j, "H"), "H"), s.b.size(), s.gamma.size());
  s.horizon = Horizon(j);
  Revalidate([&] { ValidateSclp(s); });
  return s;
}

Json VectorJson(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json MatrixJson(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json NumberJson(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json MeasureJson(const MeasureSolution& sol) {
  Json out;
  out["partition"] = sol.partition;
  out["atom_start"] = VectorJson(sol.atom_start);
  Json densities = Json::array();
  for (const Vector& d : sol.densities) densities.push_back(VectorJson(d));
  out["densities"] = std::move(densities);
  out["atom_end"] = VectorJson(sol.atom_end);
  Json atoms = Json::array();
  for (const InteriorAtom& atom : sol.interior_atoms) {
    atoms.push_back({{"time", atom.time}, {"mass", VectorJson(atom.mass)}});
  }
  out["interior_atoms"] = std::move(atoms);
  return out;
}

MeasureSolution ParseMeasure(const Json& j, const std::string& where) {
  if (!j.is_object()) ParseFail(where + ": expected an object");
  MeasureSolution sol;
  const Json& part = Field(j, "partition");
  if (!part.is_array()) ParseFail(where + ".partition: expected an array");
  for (size_t i = 0; i < part.size(); ++i) {
    sol.partition.push_back(ToNumber(part[i], where + ".partition", false));
  }
  sol.atom_start = ToVector(Field(j, "atom_start"), where + ".atom_start");
  sol.atom_end = ToVector(Field(j, "atom_end"), where + ".atom_end");
  const Matrix dens = ToMatrix(Field(j, "densities"), where + ".densities");
  for (Eigen::Index n = 0; n < dens.rows(); ++n) {
    sol.densities.push_back(dens.row(n).transpose());
  }
  if (j.contains("interior_atoms")) {
    const Json& atoms = j["interior_atoms"];
    if (!atoms.is_array()) {
      ParseFail(where + ".interior_atoms: expected an array");
    }
    for (const Json& a : atoms) {
      if (!a.is_object()) ParseFail(where + ".interior_atoms: expected objects");
      sol.interior_atoms.push_back(
          {ToNumber(Field(a, "time"), where + ".interior_atoms.time", false),
           ToVector(Field(a, "mass"), where + ".interior_atoms.mass")});
    }
  }
  Revalidate([&] {
    if (sol.partition.empty()) Invalid(where + ".partition: empty");
    ValidateMeasure(sol, static_cast<int>(sol.atom_start.size()),
                    sol.partition.back());
  });
  return sol;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    ParseFail(e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

ProblemInstance ParseProblem(std::string_view text) {
  const Json j = ParseJson(text);
  if (!j.is_object()) ParseFail("document: expected an object");
  const Json& kind = Field(j, "kind");
  if (!kind.is_string()) ParseFail("kind: expected a string");
  const std::string& k = kind.get_ref<const std::string&>();
  if (k == "mclp") return ParseMclp(j);
  if (k == "sclp") return ParseSclp(j);
  Invalid("kind: expected \"mclp\" or \"sclp\", got \"" + k + "\"");
}

std::string SerializeProblem(const ProblemData& p) {
  Json j;
  j["kind"] = "mclp";
  j["A"] = MatrixJson(p.A);
  j["beta"] = VectorJson(p.beta);
  j["b"] = VectorJson(p.b);
  j["gamma"] = VectorJson(p.gamma);
  j["c"] = VectorJson(p.c);
  j["horizon"] = p.horizon;
  return Dump(j);
}

std::string SerializeProblem(const SclpData& s) {
  Json j;
  j["kind"] = "sclp";
  j["G"] = MatrixJson(s.G);
  j["F"] = MatrixJson(s.F);
  j["H"] = MatrixJson(s.H);
  j["alpha"] = VectorJson(s.alpha);
  j["a"] = VectorJson(s.a);
  j["b"] = VectorJson(s.b);
  j["gamma"] = VectorJson(s.gamma);
  j["c"] = VectorJson(s.c);
  j["d"] = VectorJson(s.d);
  j["horizon"] = s.horizon;
  return Dump(j);
}

SolutionFile SolutionFileFromReport(const SolveReport& report) {
  SolutionFile out;
  out.status = std::string(SolveStatusName(report.status));
  out.primal = report.primal;
  if (report.dual.dimension() > 0) out.dual = report.dual;
  out.objective = report.v_low;
  out.gap = report.certified_gap;
  out.n_final = report.n_final;
  out.slater_primal = report.slater_primal;
  out.slater_dual = report.slater_dual;
  return out;
}

std::string SerializeSolution(const SolutionFile& sol) {
  Json j;
  j["kind"] = "mclp-solution";
  j["status"] = sol.status;
  j["objective"] = NumberJson(sol.objective);
  j["gap"] = NumberJson(sol.gap);
  j["n_final"] = sol.n_final;
  j["slater_primal"] = NumberJson(sol.slater_primal);
  j["slater_dual"] = NumberJson(sol.slater_dual);
  j["primal"] = MeasureJson(sol.primal);
  if (sol.dual) j["dual"] = MeasureJson(*sol.dual);
  return Dump(j);
}

SolutionFile ParseSolution(std::string_view text) {
  const Json j = ParseJson(text);
  if (!j.is_object()) ParseFail("document: expected an object");
  const Json& kind = Field(j, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "mclp-solution") {
    Invalid("kind: expected \"mclp-solution\"");
  }
  SolutionFile out;
  const Json& status = Field(j, "status");
  if (!status.is_string()) ParseFail("status: expected a string");
  out.status = status.get<std::string>();
  out.objective = ToNumber(Field(j, "objective"), "objective", true);
  out.gap = ToNumber(Field(j, "gap"), "gap", true);
  const Json& n_final = Field(j, "n_final");
  if (!n_final.is_number_integer()) ParseFail("n_final: expected an integer");
  out.n_final = n_final.get<int>();
  out.slater_primal = ToNumber(Field(j, "slater_primal"), "slater_primal", true);
  out.slater_dual = ToNumber(Field(j, "slater_dual"), "slater_dual", true);
  out.primal = ParseMeasure(Field(j, "primal"), "primal");
  if (j.contains("dual")) out.dual = ParseMeasure(j["dual"], "dual");
  return out;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string EmitTrajectory(const ProblemData& p, const MeasureSolution& sol,
                           int points) {
  ValidateProblem(p);
  ValidateMeasure(sol, p.num_cols(), p.horizon);
  if (points < 2) Invalid("points: must be at least 2");
  const double horizon = p.horizon;

  std::vector<double> times;
  for (int i = 0; i < points; ++i) {
    times.push_back(i == points - 1 ? horizon : horizon * i / (points - 1));
  }
  times.insert(times.end(), sol.partition.begin(), sol.partition.end());
  for (const InteriorAtom& atom : sol.interior_atoms) {
    times.push_back(atom.time);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  // Left limits: 0-, every interior atom time, T-.
  std::vector<double> left = {0.0, horizon};
  for (const InteriorAtom& atom : sol.interior_atoms) {
    left.push_back(atom.time);
  }
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());

  std::string out = "t";
  for (int j = 1; j <= p.num_cols(); ++j) out += ",U_" + std::to_string(j);
  for (int k = 1; k <= p.num_rows(); ++k) out += ",x_" + std::to_string(k);
  out += "\n";

  auto row = [&](const std::string& label, const Vector& u, double t) {
    const Vector x = p.beta + t * p.b - p.A * u;
    out += label;
    for (Eigen::Index j = 0; j < u.size(); ++j) out += "," + FormatDouble(u(j));
    for (Eigen::Index k = 0; k < x.size(); ++k) out += "," + FormatDouble(x(k));
    out += "\n";
  };

  size_t next_left = 0;
  for (double t : times) {
    if (next_left < left.size() && left[next_left] == t) {
      row(FormatDouble(t) + "-", CumulativeBefore(sol, t), t);
      ++next_left;
    }
    const TrajectoryPoint pt = SlackAt(p, sol, t);
    row(FormatDouble(t), pt.U, t);
  }
  return out;
}

}  // namespace mclp
