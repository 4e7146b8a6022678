// Copyright 2026 The tempcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempcorr/serialization.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tempcorr/error.hpp"

namespace tempcorr {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchema, path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "non-finite number");
  return v;
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Runs a constructor, converting library validation errors into schema errors
// at `path`.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    schema_error(path, e.what());
  }
}

Scenario scenario_from(const Json& j, const std::string& path) {
  Scenario s{integer(field(j, "L", path), path + ".L"), integer(field(j, "R", path), path + ".R"),
             integer(field(j, "S", path), path + ".S")};
  guarded(path, [&] {
    s.validate();
    return 0;
  });
  return s;
}

void put_scenario(Json& j, const Scenario& s) {
  j["L"] = s.L;
  j["R"] = s.R;
  j["S"] = s.S;
}

std::vector<int> digits_from(const Json& j, int length, int radix, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a digit string");
  const auto str = j.get<std::string>();
  if (str.size() != static_cast<std::size_t>(length)) {
    schema_error(path, "expected " + std::to_string(length) + " digits, got '" + str + "'");
  }
  std::vector<int> d;
  for (char c : str) {
    const int v = c - '0';
    if (v < 0 || v >= radix) schema_error(path, "digit '" + std::string(1, c) + "' out of range");
    d.push_back(v);
  }
  return d;
}

std::string digits_to(const std::vector<int>& d) {
  std::string s;
  for (int v : d) s.push_back(static_cast<char>('0' + v));
  return s;
}

Json bloch_json(const BlochVector& v) { return Json::array({v[0], v[1], v[2]}); }

BlochVector bloch_from(const Json& j, const std::string& path) {
  array(j, path);
  if (j.size() != 3) schema_error(path, "expected 3 components");
  return {number(j[0], idx(path, 0)), number(j[1], idx(path, 1)), number(j[2], idx(path, 2))};
}

Complex complex_from(const Json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path), 0.0};
  array(j, path);
  if (j.size() != 2) schema_error(path, "expected [re, im]");
  return {number(j[0], idx(path, 0)), number(j[1], idx(path, 1))};
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (const auto& z : m.entries()) out.push_back(Json::array({z.real(), z.imag()}));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
  array(j, path);
  if (j.empty()) schema_error(path, "empty matrix");
  // Nested rows hold [re, im] pairs (or plain reals when the entry count is
  // not a perfect square); otherwise the array is flat and row-major.
  const std::size_t root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(j.size()))));
  const bool nested = j[0].is_array() && !j[0].empty() && (j[0][0].is_array() || root * root != j.size());
  std::vector<Complex> entries;
  std::size_t dim = 0;
  if (nested) {
    dim = j.size();
    for (std::size_t r = 0; r < dim; ++r) {
      const Json& row = array(j[r], idx(path, r));
      if (row.size() != dim) schema_error(idx(path, r), "row length differs from row count");
      for (std::size_t c = 0; c < dim; ++c) entries.push_back(complex_from(row[c], idx(idx(path, r), c)));
    }
  } else {
    dim = root;
    if (dim * dim != j.size()) schema_error(path, "entry count " + std::to_string(j.size()) + " is not a square");
    for (std::size_t i = 0; i < j.size(); ++i) entries.push_back(complex_from(j[i], idx(path, i)));
  }
  return ComplexMatrix(dim, std::move(entries));
}

Json to_json(const SystemModel& sys) {
  Json j;
  j["dim"] = sys.dim();
  j["initial"] = to_json(sys.initial().matrix());
  Json insts = Json::array();
  for (const auto& inst : sys.instruments()) {
    Json kraus = Json::array();
    for (const auto& set : inst.kraus_sets()) {
      Json ops = Json::array();
      for (const auto& k : set) ops.push_back(to_json(k));
      kraus.push_back(std::move(ops));
    }
    insts.push_back(Json{{"kraus", std::move(kraus)}});
  }
  j["instruments"] = std::move(insts);
  return j;
}

SystemModel system_from_json(const Json& j, const std::string& path) {
  const int dim = integer(field(j, "dim", path), path + ".dim");
  if (dim < 1) schema_error(path + ".dim", "must be positive");
  auto check_dim = [&](const ComplexMatrix& m, const std::string& p) {
    if (m.dim() != static_cast<std::size_t>(dim)) {
      schema_error(p, "matrix dimension " + std::to_string(m.dim()) + " differs from dim " + std::to_string(dim));
    }
  };
  const std::string ip = path + ".initial";
  ComplexMatrix init = matrix_from_json(field(j, "initial", path), ip);
  check_dim(init, ip);
  DensityMatrix rho = guarded(ip, [&] { return DensityMatrix(init); });
  const std::string insp = path + ".instruments";
  const Json& insts = array(field(j, "instruments", path), insp);
  if (insts.empty()) schema_error(insp, "need at least one instrument");
  std::vector<Instrument> out;
  for (std::size_t s = 0; s < insts.size(); ++s) {
    const std::string sp = idx(insp, s);
    const std::string kp = sp + ".kraus";
    const Json& kraus = array(field(insts[s], "kraus", sp), kp);
    std::vector<KrausSet> sets;
    for (std::size_t r = 0; r < kraus.size(); ++r) {
      const Json& ops = array(kraus[r], idx(kp, r));
      if (ops.empty()) schema_error(idx(kp, r), "outcome needs at least one Kraus operator");
      KrausSet set;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        set.push_back(matrix_from_json(ops[k], idx(idx(kp, r), k)));
        check_dim(set.back(), idx(idx(kp, r), k));
      }
      sets.push_back(std::move(set));
    }
    out.push_back(guarded(kp, [&] { return validate_instrument(std::move(sets)); }));
  }
  return guarded(insp, [&] { return SystemModel(std::move(rho), std::move(out)); });
}

Json to_json(const Behavior& b) {
  const Scenario& s = b.scenario();
  Json j;
  put_scenario(j, s);
  Json table = Json::object();
  for (std::size_t x = 0; x < s.setting_sequences(); ++x) {
    Json row = Json::array();
    for (double v : b.row(x)) row.push_back(v);
    table[digit_string(x, s.S, s.L)] = std::move(row);
  }
  j["table"] = std::move(table);
  return j;
}

Behavior behavior_from_json(const Json& j, const std::string& path) {
  const Scenario s = scenario_from(j, path);
  const std::string tp = path + ".table";
  const Json& table = field(j, "table", path);
  if (!table.is_object()) schema_error(tp, "expected an object keyed by setting digits");
  if (table.size() != s.setting_sequences()) {
    schema_error(tp, "expected " + std::to_string(s.setting_sequences()) + " setting sequences, got " +
                         std::to_string(table.size()));
  }
  Behavior b(s);
  for (std::size_t x = 0; x < s.setting_sequences(); ++x) {
    const std::string key = digit_string(x, s.S, s.L);
    auto it = table.find(key);
    if (it == table.end()) schema_error(tp + "." + key, "missing setting sequence");
    const std::string rp = tp + "." + key;
    const Json& row = array(*it, rp);
    if (row.size() != s.outcome_sequences()) {
      schema_error(rp, "expected " + std::to_string(s.outcome_sequences()) + " probabilities");
    }
    for (std::size_t a = 0; a < row.size(); ++a) b.at(x, a) = number(row[a], idx(rp, a));
  }
  return b;
}

Json to_json(const DeterministicVertex& v) {
  Json j;
  put_scenario(j, v.scenario());
  Json a = Json::object();
  for (const auto& [k, o] : v.keyed()) a[k] = o;
  j["assignment"] = std::move(a);
  return j;
}

DeterministicVertex vertex_from_json(const Json& j, const std::string& path) {
  const Scenario s = scenario_from(j, path);
  const std::string ap = path + ".assignment";
  const Json& assign = field(j, "assignment", path);
  if (!assign.is_object()) schema_error(ap, "expected an object keyed by context strings");
  // Outcome per (t, settings prefix); the outcome-history part of each key is
  // checked against the assignment afterwards.
  std::map<std::string, int> by_context;
  for (auto it = assign.begin(); it != assign.end(); ++it) {
    const std::string& key = it.key();
    const auto semi = key.rfind(";a=");
    if (semi == std::string::npos) schema_error(ap + "." + key, "malformed context key");
    const int o = integer(it.value(), ap + "." + key);
    if (o < 0 || o >= s.R) schema_error(ap + "." + key, "outcome out of range");
    if (!by_context.emplace(key.substr(0, semi), o).second) schema_error(ap + "." + key, "duplicate context");
  }
  std::vector<std::uint8_t> a(s.contexts());
  std::size_t i = 0;
  for (int t = 1; t <= s.L; ++t) {
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp, ++i) {
      const std::string ctx = "t=" + std::to_string(t) + ";x=" + digit_string(xp, s.S, t);
      auto it = by_context.find(ctx);
      if (it == by_context.end()) schema_error(ap, "missing context " + ctx);
      a[i] = static_cast<std::uint8_t>(it->second);
    }
  }
  if (by_context.size() != a.size()) schema_error(ap, "unexpected extra contexts");
  DeterministicVertex v = guarded(ap, [&] { return DeterministicVertex(s, a); });
  for (const auto& [k, o] : v.keyed()) {
    if (!assign.contains(k)) schema_error(ap, "outcome history in key does not match the assignment (expected " + k + ")");
  }
  return v;
}

Json to_json(const ConvexDecomposition& d) {
  Json j;
  put_scenario(j, d.scenario);
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(Json{{"weight", t.weight}, {"vertex", to_json(t.vertex)}});
  j["terms"] = std::move(terms);
  return j;
}

ConvexDecomposition decomposition_from_json(const Json& j, const std::string& path) {
  ConvexDecomposition d{scenario_from(j, path), {}};
  const std::string tp = path + ".terms";
  const Json& terms = array(field(j, "terms", path), tp);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = idx(tp, i);
    const double w = number(field(terms[i], "weight", p), p + ".weight");
    if (w < 0.0) schema_error(p + ".weight", "negative weight");
    DeterministicVertex v = vertex_from_json(field(terms[i], "vertex", p), p + ".vertex");
    if (!(v.scenario() == d.scenario)) schema_error(p + ".vertex", "scenario differs from the decomposition");
    d.terms.push_back({w, std::move(v)});
  }
  return d;
}

Json to_json(const WitnessFunctional& f) {
  Json j;
  j["name"] = f.name;
  put_scenario(j, f.scenario);
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    terms.push_back(Json{{"a", digits_to(t.outcomes)}, {"x", digits_to(t.settings)}, {"coeff", t.coeff}});
  }
  j["terms"] = std::move(terms);
  return j;
}

WitnessFunctional functional_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  WitnessFunctional f;
  f.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  // R and S default to 2; L is required.
  Scenario s{integer(field(j, "L", path), path + ".L"), 2, 2};
  if (j.contains("R")) s.R = integer(j["R"], path + ".R");
  if (j.contains("S")) s.S = integer(j["S"], path + ".S");
  guarded(path, [&] {
    s.validate();
    return 0;
  });
  f.scenario = s;
  const std::string tp = path + ".terms";
  const Json& terms = array(field(j, "terms", path), tp);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = idx(tp, i);
    WitnessTerm t;
    t.outcomes = digits_from(field(terms[i], "a", p), s.L, s.R, p + ".a");
    t.settings = digits_from(field(terms[i], "x", p), s.L, s.S, p + ".x");
    t.coeff = terms[i].contains("coeff") ? number(terms[i]["coeff"], p + ".coeff") : 1.0;
    f.terms.push_back(std::move(t));
  }
  return f;
}

Json to_json(const QubitStrategy& s) {
  Json j;
  j["initial"] = bloch_json(s.initial);
  Json post = Json::array();
  for (const auto& row : s.post) post.push_back(Json::array({bloch_json(row[0]), bloch_json(row[1])}));
  j["post"] = std::move(post);
  Json eff = Json::array();
  for (const auto& e : s.effects) eff.push_back(Json{{"a", e.a}, {"b", e.b}, {"axis", bloch_json(e.axis)}});
  j["effects"] = std::move(eff);
  return j;
}

QubitStrategy strategy_from_json(const Json& j, const std::string& path) {
  QubitStrategy s;
  s.initial = bloch_from(field(j, "initial", path), path + ".initial");
  const std::string pp = path + ".post";
  const Json& post = array(field(j, "post", path), pp);
  if (post.size() != 2) schema_error(pp, "expected 2 rows indexed by first outcome");
  for (std::size_t a = 0; a < 2; ++a) {
    const Json& row = array(post[a], idx(pp, a));
    if (row.size() != 2) schema_error(idx(pp, a), "expected 2 entries indexed by first setting");
    for (std::size_t x = 0; x < 2; ++x) s.post[a][x] = bloch_from(row[x], idx(idx(pp, a), x));
  }
  const std::string ep = path + ".effects";
  const Json& eff = array(field(j, "effects", path), ep);
  if (eff.size() != 2) schema_error(ep, "expected 2 settings");
  for (std::size_t x = 0; x < 2; ++x) {
    const std::string p = idx(ep, x);
    s.effects[x] = {number(field(eff[x], "a", p), p + ".a"), number(field(eff[x], "b", p), p + ".b"),
                    bloch_from(field(eff[x], "axis", p), p + ".axis")};
  }
  guarded(path, [&] {
    s.validate();
    return 0;
  });
  return s;
}

Json to_json(const CertificationReport& r) {
  Json j;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back(Json{{"name", w.name},
                      {"value", w.value},
                      {"bound", w.bound},
                      {"bound_status", to_string(w.status)},
                      {"conjectured_qubit_max", w.conjectured},
                      {"verdict", w.exceeds_qubit ? "dimension > 2" : "qubit-compatible"},
                      {"epsilon_lower_bound", w.epsilon},
                      {"epsilon_cap", w.epsilon_cap}});
  }
  j["witnesses"] = std::move(ws);
  j["verdict"] = r.dimension_exceeds_two ? "dimension > 2" : "qubit-compatible";
  j["epsilon_lower_bound"] = r.epsilon;
  j["tolerances"] = Json{{"verdict", r.verdict_tolerance}, {"membership", r.membership_tolerance}};
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSchema, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchema, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace tempcorr
