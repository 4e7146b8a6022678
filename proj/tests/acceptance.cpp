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
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tempcorr/bounds.hpp"
#include "tempcorr/certify.hpp"
#include "tempcorr/correlations.hpp"
#include "tempcorr/random.hpp"
#include "tempcorr/realize.hpp"
#include "tempcorr/witness.hpp"

namespace {

using namespace tempcorr;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome vertex_counts() {
  const std::array<std::pair<Scenario, std::uint64_t>, 5> cases{{
      {{1, 2, 2}, 4}, {{2, 2, 2}, 64}, {{2, 3, 2}, 729}, {{2, 2, 3}, 4096}, {{3, 2, 2}, 16384}}};
  std::string detail;
  bool ok = true;
  for (const auto& [s, expected] : cases) {
    const BigInt counted = count_vertices(s);
    const std::size_t listed = enumerate_vertices(s).size();
    ok = ok && counted == expected && listed == expected;
    detail += "(" + std::to_string(s.L) + "," + std::to_string(s.R) + "," + std::to_string(s.S) + ")=" +
              counted.str() + "/" + std::to_string(listed) + " ";
  }
  return {ok, detail};
}

Outcome classification() {
  const Scenario s{2, 2, 2};
  const OrbitPartition part = classify_vertices(s, RelabelingGroup::kPerSetting);
  std::vector<std::size_t> orbit_ids;
  for (const char* name : {"e1", "e2", "e3", "e4"}) orbit_ids.push_back(part.orbit_of(vertex_index(named_vertex(name))));
  std::vector<std::size_t> sorted = orbit_ids;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return {part.orbits.size() == 10 && distinct,
          std::to_string(part.orbits.size()) + " orbits, e1..e4 in " + (distinct ? "distinct" : "shared") + " orbits"};
}

Outcome qutrit_exactness() {
  double worst = 0.0;
  std::size_t n = 0;
  for (const Scenario s : {Scenario{2, 2, 2}, Scenario{2, 3, 2}}) {
    for (const DeterministicVertex& v : enumerate_vertices(s)) {
      const VertexRealization r = qutrit_vertex_realization(v);
      worst = std::max(worst, max_abs_diff(full_behavior(r.system, 2), vertex_behavior(v)));
      ++n;
    }
  }
  return {n == 64 + 729 && worst < 1e-12, std::to_string(n) + " vertices, max deviation " + fmt("%.3g", worst)};
}

Outcome mixture_round_trip() {
  Rng rng(101);
  const Scenario s{2, 2, 2};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Behavior b = random_member_behavior(s, rng);
    const SystemModel sys = mixture_realization(decompose_behavior(b));
    worst = std::max(worst, max_abs_diff(full_behavior(sys, 2), b));
  }
  return {worst < 1e-9, "100 behaviors, max deviation " + fmt("%.3g", worst)};
}

Outcome c1_bound_check() {
  const WitnessFunctional b1 = builtin_functional("B1");
  OptimizerConfig cfg;
  cfg.restarts = 200;
  const double opt = optimize_qubit(b1, cfg).value;
  Rng rng(102);
  double sampled = -1.0;
  for (int i = 0; i < 10000; ++i) sampled = std::max(sampled, strategy_value(b1, random_strategy(rng)));
  return {opt >= 3.0 - 1e-3 && opt <= 3.0 + 1e-9 && sampled <= 3.0 + 1e-9,
          "optimizer " + fmt("%.12g", opt) + ", sampled max " + fmt("%.12g", sampled)};
}

Outcome c3_bound_check() {
  const C3Bound c3 = c3_bound();
  OptimizerConfig cfg;
  cfg.restarts = 200;
  const double opt = optimize_qubit(builtin_functional("B3"), cfg).value;
  const bool ok = c3.certified && std::abs(c3.value - 3.186) <= 0.005 && std::abs(c3.cos_gamma - 0.756) <= 0.005 &&
                  std::abs(opt - c3.value) <= 1e-3;
  return {ok, "C3 " + fmt("%.12g", c3.value) + " at cos " + fmt("%.12g", c3.cos_gamma) + ", certified " +
                  (c3.certified ? "yes" : "no") + ", optimizer " + fmt("%.12g", opt)};
}

Outcome projective_b1() {
  const int n = 200000;
  double best = -1.0;
  double arg = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = -1.0 + 2.0 * i / n;
    const double v = b1_projective_profile(x);
    if (v > best) {
      best = v;
      arg = x;
    }
  }
  const double target = 1.5 + std::sqrt(2.0);
  return {std::abs(best - target) <= 1e-9 && std::abs(arg) <= 1e-9,
          "grid max " + fmt("%.15g", best) + " at cos " + fmt("%.3g", arg)};
}

Outcome b4_caps() {
  const int n = 1000;
  double best = -1.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) best = std::max(best, b4_envelope(static_cast<double>(i) / n, -1.0 + 2.0 * j / n));
  }
  double edge = 0.0;
  for (int j = 0; j <= 100000; ++j) {
    const double x = -1.0 + 2.0 * j / 100000;
    edge = std::max(edge, std::abs(b4_envelope(1.0, x) - b3_profile(x)));
  }
  const bool ok = std::abs(best - 3.186) <= 0.005 && best <= bounds::b4_cap() + 1e-9 && edge <= 1e-12;
  return {ok, "grid max " + fmt("%.12g", best) + " (cap " + fmt("%.12g", bounds::b4_cap()) + "), |b4(1,.)-b3| " +
                  fmt("%.3g", edge)};
}

Outcome b2_check() {
  const WitnessFunctional b2 = builtin_functional("B2");
  Rng rng(103);
  double sampled = -1.0;
  for (int i = 0; i < 10000; ++i) sampled = std::max(sampled, strategy_value(b2, random_strategy(rng)));
  OptimizerConfig cfg;
  cfg.restarts = 200;
  const double opt = optimize_qubit(b2, cfg).value;
  const double protocol = evaluate(b2, full_behavior(canonical_protocol("qubit-B2-3"), 2));
  const bool ok = sampled <= bounds::kB2Cap + 1e-9 && opt <= bounds::kB2Cap + 1e-9 && opt >= 3.0 - 1e-3;
  return {ok, "sampled max " + fmt("%.12g", sampled) + ", optimizer " + fmt("%.12g", opt) + ", protocol " +
                  fmt("%.12g", protocol)};
}

Outcome epsilon_check() {
  const CertificationReport rep = certify(vertex_behavior(named_vertex("e1")));
  const SystemModel sys = canonical_protocol("qutrit-e1");
  const double b1 = evaluate(builtin_functional("B1"), full_behavior(sys, 2));
  Rng rng(104);
  bool holds = true;
  double min_eps = 1e300;
  for (int i = 0; i < 50; ++i) {
    const double eps = system_epsilon(sys, random_projector(3, 2, rng));
    min_eps = std::min(min_eps, eps);
    holds = holds && b1 <= 3.0 + 12.0 * eps + 1e-6;
  }
  return {rep.epsilon >= 1.0 / 12.0 - 1e-9 && holds,
          "certified eps " + fmt("%.12g", rep.epsilon) + ", B1 " + fmt("%.12g", b1) + ", min system eps over 50 projectors " +
              fmt("%.6g", min_eps)};
}

Outcome aot_suite() {
  Rng rng(105);
  int members = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const int length = 1 + (i / 3) % 3;
    const SystemModel sys = random_system(dim, 2, 2, rng);
    const Behavior b = full_behavior(sys, length);
    if (check_membership(b).member()) ++members;
    worst = std::max(worst, max_abs_diff(compose_from_conditionals(factorize(b)), b));
  }
  return {members == 200 && worst <= 1e-9,
          std::to_string(members) + "/200 members, round-trip deviation " + fmt("%.3g", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "vertex counting", 1.0, vertex_counts},
      {2, "orbit classification", 1.0, classification},
      {3, "qutrit vertex realization", 10.0, qutrit_exactness},
      {4, "mixture round trip", 60.0, mixture_round_trip},
      {5, "B1 qubit bound", 60.0, c1_bound_check},
      {6, "B3 qubit bound", 60.0, c3_bound_check},
      {7, "B1 projective maximum", 0.0, projective_b1},
      {8, "B4 caps", 0.0, b4_caps},
      {9, "B2 cap and attainment", 0.0, b2_check},
      {10, "epsilon certification", 120.0, epsilon_check},
      {11, "arrow-of-time property suite", 0.0, aot_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), out.detail.c_str(),
                secs, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
