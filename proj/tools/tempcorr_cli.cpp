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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tempcorr/bounds.hpp"
#include "tempcorr/certify.hpp"
#include "tempcorr/correlations.hpp"
#include "tempcorr/error.hpp"
#include "tempcorr/random.hpp"
#include "tempcorr/realize.hpp"
#include "tempcorr/serialization.hpp"
#include "tempcorr/witness.hpp"

namespace {

using namespace tempcorr;

constexpr std::uint64_t kDefaultSeed = 7;

enum ExitCode { kOk = 0, kOther = 1, kCap = 2, kSchemaExit = 3, kMembership = 4, kScope = 5 };

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kTooManyVertices:
      return kCap;
    case ErrorCode::kSchema:
      return kSchemaExit;
    case ErrorCode::kNotAMember:
      return kMembership;
    case ErrorCode::kUnsupportedLength:
    case ErrorCode::kScenarioMismatch:
      return kScope;
    default:
      return kOther;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Writes to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, path + ": cannot open for writing");
  out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void require_member(const Behavior& b) {
  const MembershipReport m = check_membership(b);
  if (m.member()) return;
  std::ostringstream os;
  os << m.violations.size() << " constraint(s) violated:";
  for (const auto& v : m.violations) os << "\n  " << v.describe();
  throw Error(ErrorCode::kNotAMember, os.str());
}

RelabelingGroup parse_group(const std::string& g) {
  if (g == "per-setting") return RelabelingGroup::kPerSetting;
  if (g == "global") return RelabelingGroup::kGlobal;
  if (g == "identity") return RelabelingGroup::kIdentity;
  throw Error(ErrorCode::kInvalidArgument, "unknown group '" + g + "'");
}

struct WitnessBound {
  double bound;
  double conjectured;
  BoundStatus status;
};

std::map<std::string, WitnessBound> builtin_bounds() {
  const double c3 = c3_bound().value;
  return {{"B1", {c1_bound().value, c1_bound().value, BoundStatus::kCertified}},
          {"B2", {bounds::kB2Cap, bounds::kB2Conjectured, BoundStatus::kNumericallySupported}},
          {"B3", {c3, c3, BoundStatus::kCertified}},
          {"B4", {bounds::b4_cap(), c3, BoundStatus::kNumericallySupported}}};
}

WitnessFunctional load_functional(const std::string& spec) {
  if (spec.size() == 2 && spec[0] == 'B') return builtin_functional(spec);
  return functional_from_json(read_json_file(spec));
}

// ---------------------------------------------------------------- vertices

struct VerticesArgs {
  int L = 2, R = 2, S = 2;
  bool classify = false;
  std::string group = "per-setting";
  std::uint64_t cap = kDefaultVertexCap;
  std::string out;
};

int cmd_vertices(const VerticesArgs& a) {
  const Scenario s{a.L, a.R, a.S};
  s.validate();
  const BigInt count = count_vertices(s);
  std::vector<DeterministicVertex> vs;
  try {
    vs = enumerate_vertices(s, a.cap);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTooManyVertices) std::cout << "count (formula): " << count << "\n";
    throw;
  }
  std::cout << "count (formula): " << count << "\n";
  std::cout << "enumerated: " << vs.size() << "\n";
  Json j;
  j["L"] = s.L;
  j["R"] = s.R;
  j["S"] = s.S;
  j["count"] = count.str();
  Json list = Json::array();
  for (std::size_t i = 0; i < vs.size(); ++i) list.push_back(Json{{"index", i}, {"assignment", to_json(vs[i])["assignment"]}});
  j["vertices"] = std::move(list);
  if (a.classify) {
    const OrbitPartition p = classify_vertices(s, parse_group(a.group), a.cap);
    std::cout << "classes (" << a.group << " relabelings): " << p.orbits.size() << "\n";
    Json orbits = Json::array();
    for (std::size_t o = 0; o < p.orbits.size(); ++o) {
      orbits.push_back(Json{{"representative", p.representative(o)}, {"members", p.orbits[o]}});
    }
    j["group"] = a.group;
    j["orbits"] = std::move(orbits);
  }
  if (!a.out.empty()) write_json_file(a.out, j);
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string system, protocol, out;
  int L = 2;
};

int cmd_simulate(const SimulateArgs& a) {
  const SystemModel sys = a.protocol.empty() ? system_from_json(read_json_file(a.system)) : canonical_protocol(a.protocol);
  const Behavior b = full_behavior(sys, a.L);
  const MembershipReport m = check_membership(b);
  std::cout << "dimension " << sys.dim() << ", L=" << a.L << ", R=" << sys.outcomes() << ", S=" << sys.settings()
            << "\n";
  std::cout << "arrow-of-time check: " << (m.member() ? "pass" : "FAIL") << " (" << m.violations.size()
            << " violations)\n";
  if (b.scenario() == Scenario{2, 2, 2}) {
    for (const auto& f : builtin_functionals()) std::cout << f.name << " = " << fmt(evaluate(f, b)) << "\n";
  }
  emit(a.out, json_text(to_json(b)));
  return kOk;
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
  std::string behavior, strategy, functional = "B1", format = "text";
};

int cmd_witness(const WitnessArgs& a) {
  const WitnessFunctional f = load_functional(a.functional);
  double value = 0.0;
  if (!a.strategy.empty()) {
    const QubitStrategy s = strategy_from_json(read_json_file(a.strategy));
    value = strategy_value(f, s);
    const double simulated = evaluate(f, full_behavior(measure_and_prepare(s), 2));
    std::cout << "strategy value " << fmt(value) << " (measure-and-prepare simulation " << fmt(simulated) << ")\n";
  } else {
    const Behavior b = behavior_from_json(read_json_file(a.behavior));
    require_member(b);
    value = evaluate(f, b);
  }
  const auto bounds = builtin_bounds();
  auto it = bounds.find(f.name);
  Json j{{"functional", f.name}, {"value", value}};
  if (it == bounds.end()) {
    if (a.format == "json") {
      std::cout << json_text(j);
    } else {
      std::cout << f.name << " = " << fmt(value) << " (no qubit bound known for custom functionals)\n";
    }
    return kOk;
  }
  const WitnessBound& wb = it->second;
  const bool exceeds = value > wb.bound + 1e-9;
  const double eps = epsilon_lower_bound(std::clamp(value, 0.0, 4.0), wb.bound);
  j["bound"] = wb.bound;
  j["bound_status"] = to_string(wb.status);
  j["conjectured_qubit_max"] = wb.conjectured;
  j["verdict"] = exceeds ? "dimension > 2" : "qubit-compatible";
  j["epsilon_lower_bound"] = eps;
  j["epsilon_cap"] = epsilon_cap(wb.bound);
  if (a.format == "json") {
    std::cout << json_text(j);
  } else {
    std::cout << f.name << " = " << fmt(value) << "\n"
              << "qubit bound " << fmt(wb.bound) << " (" << to_string(wb.status) << ", conjectured maximum "
              << fmt(wb.conjectured) << ")\n"
              << "verdict: " << (exceeds ? "dimension > 2" : "qubit-compatible") << "\n"
              << "epsilon >= " << fmt(eps) << " (cap " << fmt(epsilon_cap(wb.bound)) << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
  std::string behavior, format = "text", out;
};

int cmd_certify(const CertifyArgs& a) {
  const CertificationReport r = certify(behavior_from_json(read_json_file(a.behavior)));
  emit(a.out, a.format == "json" ? json_text(to_json(r)) : format_report(r));
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string which = "C3", out;
  int grid = 1001;
};

int cmd_bounds(const BoundsArgs& a) {
  if (a.which == "C1") {
    const C1Bound c = c1_bound();
    std::cout << "C1 = " << fmt(c.value) << "\nprojective maximum = " << fmt(c.projective_max) << "\n";
    return kOk;
  }
  if (a.which == "C3") {
    const C3Bound c = c3_bound();
    std::cout << "C3 = " << fmt(c.value) << "\ncos_gamma* = " << fmt(c.cos_gamma)
              << "\ncertified = " << (c.certified ? "yes" : "no") << "\npolynomial roots in [-1,1]:";
    for (double r : c3_polynomial_roots()) std::cout << " " << fmt(r);
    std::cout << "\n";
    return kOk;
  }
  if (a.grid < 2) throw Error(ErrorCode::kInvalidArgument, "--grid must be at least 2");
  auto node = [&](int i, double lo) { return i + 1 == a.grid ? 1.0 : lo + (1.0 - lo) * i / (a.grid - 1); };
  std::ostringstream csv;
  csv << std::setprecision(12);
  double best = -std::numeric_limits<double>::infinity();
  std::string argmax;
  if (a.which == "B1profile" || a.which == "B3profile") {
    csv << "cos_gamma,value\n";
    for (int i = 0; i < a.grid; ++i) {
      const double x = node(i, -1.0);
      const double v = a.which == "B1profile" ? b1_projective_profile(x) : b3_profile(x);
      csv << x << "," << v << "\n";
      if (v > best) {
        best = v;
        argmax = "cos_gamma=" + fmt(x);
      }
    }
  } else if (a.which == "B4envelope") {
    csv << "p,cos_gamma,value\n";
    for (int i = 0; i < a.grid; ++i) {
      for (int k = 0; k < a.grid; ++k) {
        const double p = node(i, 0.0);
        const double x = node(k, -1.0);
        const double v = b4_envelope(p, x);
        csv << p << "," << x << "," << v << "\n";
        if (v > best) {
          best = v;
          argmax = "p=" + fmt(p) + ", cos_gamma=" + fmt(x);
        }
      }
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown --which '" + a.which + "'");
  }
  emit(a.out, csv.str());
  if (!a.out.empty()) {
    std::cout << a.which << " grid maximum " << fmt(best) << " at " << argmax << "\n";
    if (a.which == "B4envelope") {
      std::cout << "cap 2+sqrt(2) = " << fmt(bounds::b4_cap()) << (best <= bounds::b4_cap() + 1e-9 ? " respected" : " EXCEEDED")
                << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string functional = "B1", out;
  OptimizerConfig cfg;
};

int cmd_optimize(const OptimizeArgs& a) {
  const WitnessFunctional f = load_functional(a.functional);
  const OptimizationResult r = optimize_qubit(f, a.cfg);
  std::cout << f.name << " best value " << fmt(r.value) << " (restart " << r.restart << " of " << a.cfg.restarts
            << ", seed " << a.cfg.seed << ")\n";
  Json j{{"functional", f.name}, {"value", r.value},         {"restart", r.restart},
         {"seed", a.cfg.seed},   {"restarts", a.cfg.restarts}, {"strategy", to_json(r.strategy)}};
  if (!a.out.empty()) write_json_file(a.out, j);
  return kOk;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
  std::string behavior, out;
};

int cmd_decompose(const DecomposeArgs& a) {
  const Behavior b = behavior_from_json(read_json_file(a.behavior));
  require_member(b);
  const ConvexDecomposition d = decompose_behavior(b);
  double total = 0.0;
  for (const auto& t : d.terms) total += t.weight;
  std::cout << d.terms.size() << " vertices with nonzero weight, total weight " << fmt(total) << "\n"
            << "reconstruction max deviation " << fmt(max_abs_diff(reconstruct(d), b)) << "\n";
  emit(a.out, a.out.empty() ? std::string() : json_text(to_json(d)));
  return kOk;
}

// ---------------------------------------------------------------- realize

struct RealizeArgs {
  std::string vertex, decomposition, out;
  int L = 2, R = 2, S = 2;
};

int cmd_realize(const RealizeArgs& a) {
  if (a.L != 2) {
    throw Error(ErrorCode::kUnsupportedLength, "realizations are implemented for L = 2 only, got L = " + std::to_string(a.L));
  }
  SystemModel sys = [&] {
    if (!a.decomposition.empty()) return mixture_realization(decomposition_from_json(read_json_file(a.decomposition)));
    if (a.vertex.size() == 2 && a.vertex[0] == 'e') return qutrit_vertex_realization(named_vertex(a.vertex)).system;
    std::size_t pos = 0;
    unsigned long long index = 0;
    try {
      index = std::stoull(a.vertex, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != a.vertex.size() || a.vertex.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--vertex expects e1..e4 or an enumeration index");
    }
    return qutrit_vertex_realization(vertex_at(Scenario{a.L, a.R, a.S}, index)).system;
  }();
  const Behavior simulated = full_behavior(sys, 2);
  const Behavior target = [&] {
    if (!a.decomposition.empty()) return reconstruct(decomposition_from_json(read_json_file(a.decomposition)));
    if (a.vertex[0] == 'e') return vertex_behavior(named_vertex(a.vertex));
    return vertex_behavior(vertex_at(Scenario{a.L, a.R, a.S}, std::stoull(a.vertex)));
  }();
  const double dev = max_abs_diff(simulated, target);
  std::cout << "dimension " << sys.dim() << "\n"
            << "round trip max deviation " << fmt(dev) << (dev < 1e-9 ? " < 1e-9" : " >= 1e-9") << "\n";
  if (simulated.scenario() == Scenario{2, 2, 2}) {
    for (const auto& f : builtin_functionals()) std::cout << f.name << " = " << fmt(evaluate(f, simulated)) << "\n";
  }
  emit(a.out, a.out.empty() ? std::string() : json_text(to_json(sys)));
  return dev < 1e-9 ? kOk : kOther;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  std::string kind = "system", out;
  int dim = 2, L = 2, R = 2, S = 2;
  std::uint64_t seed = kDefaultSeed;
  double zero_prob = 0.0;
};

int cmd_sample(const SampleArgs& a) {
  Rng rng(derive_seed(a.seed, 0));
  Json j;
  if (a.kind == "system") {
    j = to_json(random_system(static_cast<std::size_t>(a.dim), static_cast<std::size_t>(a.R),
                              static_cast<std::size_t>(a.S), rng));
  } else if (a.kind == "behavior") {
    j = to_json(random_member_behavior(Scenario{a.L, a.R, a.S}, rng, a.zero_prob));
  } else if (a.kind == "strategy") {
    j = to_json(random_strategy(rng));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown --kind '" + a.kind + "'");
  }
  emit(a.out, json_text(j));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal correlations of sequential measurements: polytope, quantum realizations, qubit witnesses."};
  app.require_subcommand(1);
  int rc = kOk;

  VerticesArgs va;
  auto* v = app.add_subcommand("vertices", "Count, enumerate and classify deterministic vertices");
  v->add_option("--L", va.L, "Sequence length")->capture_default_str();
  v->add_option("--R", va.R, "Outcomes per measurement")->capture_default_str();
  v->add_option("--S", va.S, "Settings per step")->capture_default_str();
  v->add_flag("--classify", va.classify, "Partition into relabeling orbits");
  v->add_option("--group", va.group, "per-setting | global | identity")->capture_default_str();
  v->add_option("--cap", va.cap, "Maximum number of vertices to enumerate")->capture_default_str();
  v->add_option("--out", va.out, "Write vertices (and orbits) as JSON");
  v->callback([&] { rc = cmd_vertices(va); });

  SimulateArgs sa;
  auto* s = app.add_subcommand("simulate", "Simulate a system model into a behavior");
  auto* sys_opt = s->add_option("--system", sa.system, "SystemModel JSON file");
  auto* proto_opt = s->add_option("--protocol", sa.protocol, "qubit-B1-3 | qubit-B2-3 | qutrit-e1..qutrit-e4");
  sys_opt->excludes(proto_opt);
  s->add_option("--L", sa.L, "Sequence length")->capture_default_str();
  s->add_option("--out", sa.out, "Behavior JSON output (stdout if omitted)");
  s->callback([&] {
    if (sa.system.empty() && sa.protocol.empty()) throw CLI::ValidationError("--system or --protocol is required");
    rc = cmd_simulate(sa);
  });

  WitnessArgs wa;
  auto* w = app.add_subcommand("witness", "Evaluate a witness functional on a behavior or qubit strategy");
  auto* wb = w->add_option("--behavior", wa.behavior, "Behavior JSON file");
  auto* ws = w->add_option("--strategy", wa.strategy, "QubitStrategy JSON file");
  wb->excludes(ws);
  w->add_option("--functional", wa.functional, "B1 | B2 | B3 | B4 | functional JSON file")->capture_default_str();
  w->add_option("--format", wa.format, "text | json")->capture_default_str();
  w->callback([&] {
    if (wa.behavior.empty() && wa.strategy.empty()) throw CLI::ValidationError("--behavior or --strategy is required");
    rc = cmd_witness(wa);
  });

  CertifyArgs ca;
  auto* c = app.add_subcommand("certify", "Evaluate B1..B4 and report verdicts and epsilon bounds");
  c->add_option("--behavior", ca.behavior, "Behavior JSON file")->required();
  c->add_option("--format", ca.format, "text | json")->capture_default_str();
  c->add_option("--out", ca.out, "Output file (stdout if omitted)");
  c->callback([&] { rc = cmd_certify(ca); });

  BoundsArgs ba;
  auto* b = app.add_subcommand("bounds", "Qubit bounds and closed-form profiles");
  b->add_option("--which", ba.which, "C1 | C3 | B1profile | B3profile | B4envelope")->capture_default_str();
  b->add_option("--grid", ba.grid, "Grid points per axis for profiles")->capture_default_str();
  b->add_option("--out", ba.out, "CSV output (stdout if omitted)");
  b->callback([&] { rc = cmd_bounds(ba); });

  OptimizeArgs oa;
  auto* o = app.add_subcommand("optimize", "Maximize a functional over qubit strategies");
  o->add_option("--functional", oa.functional, "B1 | B2 | B3 | B4 | functional JSON file")->capture_default_str();
  o->add_option("--restarts", oa.cfg.restarts, "Random restarts")->capture_default_str()->check(CLI::PositiveNumber);
  o->add_option("--seed", oa.cfg.seed, "Base seed")->capture_default_str();
  o->add_option("--iterations", oa.cfg.iterations, "Objective evaluations per restart")->capture_default_str();
  o->add_option("--out", oa.out, "Write value and strategy as JSON");
  o->callback([&] { rc = cmd_optimize(oa); });

  DecomposeArgs da;
  auto* d = app.add_subcommand("decompose", "Convex decomposition of a member behavior into vertices");
  d->add_option("--behavior", da.behavior, "Behavior JSON file")->required();
  d->add_option("--out", da.out, "ConvexDecomposition JSON output");
  d->callback([&] { rc = cmd_decompose(da); });

  RealizeArgs ra;
  auto* r = app.add_subcommand("realize", "Quantum realization of a vertex or decomposition (L = 2)");
  auto* rv = r->add_option("--vertex", ra.vertex, "e1..e4 or an enumeration index");
  auto* rd = r->add_option("--decomposition", ra.decomposition, "ConvexDecomposition JSON file");
  rv->excludes(rd);
  r->add_option("--L", ra.L, "Sequence length")->capture_default_str();
  r->add_option("--R", ra.R, "Outcomes (for indexed vertices)")->capture_default_str();
  r->add_option("--S", ra.S, "Settings (for indexed vertices)")->capture_default_str();
  r->add_option("--out", ra.out, "SystemModel JSON output");
  r->callback([&] {
    if (ra.vertex.empty() && ra.decomposition.empty()) throw CLI::ValidationError("--vertex or --decomposition is required");
    rc = cmd_realize(ra);
  });

  SampleArgs pa;
  auto* p = app.add_subcommand("sample", "Seeded random system, member behavior or qubit strategy");
  p->add_option("--kind", pa.kind, "system | behavior | strategy")->capture_default_str();
  p->add_option("--dim", pa.dim, "Hilbert space dimension (system)")->capture_default_str();
  p->add_option("--L", pa.L, "Sequence length (behavior)")->capture_default_str();
  p->add_option("--R", pa.R, "Outcomes")->capture_default_str();
  p->add_option("--S", pa.S, "Settings")->capture_default_str();
  p->add_option("--zero-prob", pa.zero_prob, "Probability of zeroing a conditional entry (behavior)")
      ->capture_default_str();
  p->add_option("--seed", pa.seed, "Seed")->capture_default_str();
  p->add_option("--out", pa.out, "JSON output (stdout if omitted)");
  p->callback([&] { rc = cmd_sample(pa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return rc;
}
