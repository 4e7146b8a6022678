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

#include "tempcorr/witness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pattern_search.hpp"
#include "tempcorr/error.hpp"

namespace tempcorr {

namespace {

constexpr double kStrategyTol = 1e-9;

std::vector<int> digits_of(const char* s) {
  std::vector<int> d;
  for (; *s; ++s) d.push_back(*s - '0');
  return d;
}

WitnessFunctional from_entries(const char* name, std::initializer_list<std::pair<const char*, const char*>> entries) {
  WitnessFunctional f{name, Scenario{2, 2, 2}, {}};
  for (const auto& [a, x] : entries) f.terms.push_back({digits_of(a), digits_of(x), 1.0});
  return f;
}

}  // namespace

void WitnessFunctional::validate() const {
  scenario.validate();
  for (const auto& t : terms) {
    if (t.outcomes.size() != static_cast<std::size_t>(scenario.L) ||
        t.settings.size() != static_cast<std::size_t>(scenario.L)) {
      throw Error(ErrorCode::kShapeMismatch, "witness term needs " + std::to_string(scenario.L) + " digits");
    }
    for (int a : t.outcomes)
      if (a < 0 || a >= scenario.R) throw Error(ErrorCode::kShapeMismatch, "witness outcome out of range");
    for (int x : t.settings)
      if (x < 0 || x >= scenario.S) throw Error(ErrorCode::kShapeMismatch, "witness setting out of range");
    if (!std::isfinite(t.coeff)) throw Error(ErrorCode::kShapeMismatch, "non-finite witness coefficient");
  }
}

std::array<WitnessFunctional, 4> builtin_functionals() {
  return {
      from_entries("B1", {{"00", "00"}, {"00", "11"}, {"01", "01"}, {"01", "10"}}),
      from_entries("B2", {{"01", "00"}, {"01", "11"}, {"00", "01"}, {"00", "10"}}),
      from_entries("B3", {{"01", "00"}, {"00", "11"}, {"01", "01"}, {"01", "10"}}),
      from_entries("B4", {{"01", "00"}, {"01", "11"}, {"01", "01"}, {"00", "10"}}),
  };
}

WitnessFunctional builtin_functional(const std::string& name) {
  for (auto& f : builtin_functionals())
    if (f.name == name) return f;
  throw Error(ErrorCode::kInvalidArgument, "unknown functional '" + name + "' (expected B1..B4)");
}

double evaluate(const WitnessFunctional& f, const Behavior& b) {
  if (!(f.scenario == b.scenario())) {
    throw Error(ErrorCode::kScenarioMismatch, "functional and behavior scenarios differ");
  }
  f.validate();
  double v = 0.0;
  for (const auto& t : f.terms) v += t.coeff * b.at(from_digits(t.settings, f.scenario.S), from_digits(t.outcomes, f.scenario.R));
  return v;
}

void QubitStrategy::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidStrategy, what); };
  if (initial.norm() > 1.0 + kStrategyTol) fail("initial Bloch vector longer than 1");
  for (const auto& row : post)
    for (const auto& v : row)
      if (v.norm() > 1.0 + kStrategyTol) fail("post-measurement Bloch vector longer than 1");
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& e = effects[s];
    std::ostringstream os;
    os << "setting " << s << ": ";
    if (!(e.b >= 0.0 && e.b <= 1.0)) fail(os.str() + "b not in [0,1]");
    if (!(e.a >= 0.0 && e.a <= 1.0 / (1.0 + e.b) + kStrategyTol)) fail(os.str() + "a not in [0, 1/(1+b)]");
    if (std::abs(e.axis.norm() - 1.0) > kStrategyTol) fail(os.str() + "axis is not a unit vector");
  }
}

namespace {

// tr(E_{r|s} rho) for rho with Bloch vector alpha.
double prob(const EffectParams& e, int r, const BlochVector& alpha) {
  const double p0 = e.a * (1.0 + e.b * e.axis.dot(alpha));
  return r == 0 ? p0 : 1.0 - p0;
}

void require_222(const WitnessFunctional& f) {
  if (!(f.scenario == Scenario{2, 2, 2})) {
    throw Error(ErrorCode::kScenarioMismatch, "qubit strategies are defined for the (L,R,S) = (2,2,2) scenario");
  }
}

double value_unchecked(const WitnessFunctional& f, const QubitStrategy& s) {
  double v = 0.0;
  for (const auto& t : f.terms) {
    const int a = t.outcomes[0];
    const int x = t.settings[0];
    v += t.coeff * prob(s.effects[static_cast<std::size_t>(x)], a, s.initial) *
         prob(s.effects[static_cast<std::size_t>(t.settings[1])], t.outcomes[1],
              s.post[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]);
  }
  return v;
}

// Gradient of tr(E_{r|s} rho) with respect to the Bloch vector of rho.
BlochVector prob_gradient(const EffectParams& e, int r) {
  const BlochVector g = (e.a * e.b) * e.axis;
  return r == 0 ? g : -1.0 * g;
}

QubitStrategy optimize_states_unchecked(const WitnessFunctional& f, QubitStrategy s) {
  constexpr double kTiny = 1e-300;
  // Post states: the value is sum_{a,x} p(a|x) (c_ax + g_ax . alpha_ax) with
  // p(a|x) >= 0, so each alpha_ax aligns with its own g_ax.
  std::array<std::array<BlochVector, 2>, 2> g{};
  for (const auto& t : f.terms) {
    auto& slot = g[static_cast<std::size_t>(t.outcomes[0])][static_cast<std::size_t>(t.settings[0])];
    slot = slot + t.coeff * prob_gradient(s.effects[static_cast<std::size_t>(t.settings[1])], t.outcomes[1]);
  }
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t x = 0; x < 2; ++x)
      if (g[a][x].norm() > kTiny) s.post[a][x] = g[a][x].normalized();

  // Initial state: with posts fixed the value is linear in alpha_in.
  std::array<std::array<double, 2>, 2> q{};
  for (const auto& t : f.terms) {
    const auto a = static_cast<std::size_t>(t.outcomes[0]);
    const auto x = static_cast<std::size_t>(t.settings[0]);
    q[a][x] += t.coeff * prob(s.effects[static_cast<std::size_t>(t.settings[1])], t.outcomes[1], s.post[a][x]);
  }
  BlochVector h;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t x = 0; x < 2; ++x) h = h + q[a][x] * prob_gradient(s.effects[x], static_cast<int>(a));
  if (h.norm() > kTiny) s.initial = h.normalized();
  return s;
}

BlochVector axis_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Effect parameters from (u, b, theta, phi) with a = u / (1 + b).
EffectParams effect_from_search(const double* p) {
  const double b = p[1];
  return {p[0] / (1.0 + b), b, axis_from_angles(p[2], p[3])};
}

}  // namespace

double strategy_value(const WitnessFunctional& f, const QubitStrategy& s) {
  require_222(f);
  f.validate();
  s.validate();
  return value_unchecked(f, s);
}

QubitStrategy optimize_states(const WitnessFunctional& f, QubitStrategy s) {
  require_222(f);
  f.validate();
  return optimize_states_unchecked(f, std::move(s));
}

SystemModel measure_and_prepare(const QubitStrategy& s) {
  s.validate();
  // Spectral data of a qubit operator c0 + c1 n . sigma along unit n.
  auto ket_pair = [](const BlochVector& n) {
    const BlochVector u = n.norm() > 0.0 ? n.normalized() : BlochVector{0.0, 0.0, 1.0};
    return std::array<std::array<Complex, 2>, 2>{bloch_ket(u), bloch_ket(-1.0 * u)};
  };
  std::vector<Instrument> insts;
  for (std::size_t x = 0; x < 2; ++x) {
    const auto& e = s.effects[x];
    const auto e_vecs = ket_pair(e.axis);
    const std::array<double, 2> e0_vals{e.a * (1.0 + e.b), e.a * (1.0 - e.b)};
    std::vector<KrausSet> sets(2);
    for (std::size_t a = 0; a < 2; ++a) {
      const BlochVector& alpha = s.post[a][x];
      const auto s_vecs = ket_pair(alpha);
      const std::array<double, 2> s_vals{0.5 * (1.0 + alpha.norm()), 0.5 * (1.0 - alpha.norm())};
      for (std::size_t j = 0; j < 2; ++j) {
        const double lambda = std::max(0.0, a == 0 ? e0_vals[j] : 1.0 - e0_vals[j]);
        for (std::size_t k = 0; k < 2; ++k) {
          const double w = std::sqrt(lambda * std::max(0.0, s_vals[k]));
          ComplexMatrix kraus(2);
          for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) kraus(r, c) = w * s_vecs[k][r] * std::conj(e_vecs[j][c]);
          sets[a].push_back(std::move(kraus));
        }
      }
    }
    insts.push_back(validate_instrument(std::move(sets)));
  }
  return SystemModel(bloch_to_density(s.initial), std::move(insts));
}

QubitStrategy random_strategy(Rng& rng) {
  QubitStrategy s;
  s.initial = random_bloch_vector(rng);
  for (auto& row : s.post)
    for (auto& v : row) v = random_bloch_vector(rng);
  for (auto& e : s.effects) {
    e.b = uniform01(rng);
    e.a = uniform01(rng) / (1.0 + e.b);
    e.axis = random_unit_vector(rng);
  }
  return s;
}

OptimizationResult optimize_qubit_restart(const WitnessFunctional& f, const OptimizerConfig& cfg, int restart) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  std::vector<double> p(8);
  for (std::size_t s = 0; s < 2; ++s) {
    p[4 * s + 0] = uniform01(rng);
    p[4 * s + 1] = uniform01(rng);
    p[4 * s + 2] = std::numbers::pi * uniform01(rng);
    p[4 * s + 3] = 2.0 * std::numbers::pi * uniform01(rng);
  }
  QubitStrategy current = random_strategy(rng);
  auto build = [&](const std::vector<double>& q) {
    QubitStrategy s = current;
    s.effects[0] = effect_from_search(q.data());
    s.effects[1] = effect_from_search(q.data() + 4);
    return optimize_states_unchecked(f, s);
  };
  auto objective = [&](const std::vector<double>& q) { return value_unchecked(f, build(q)); };

  std::vector<detail::Box> box(8);
  for (std::size_t s = 0; s < 2; ++s) {
    box[4 * s + 0] = {0.0, 1.0};
    box[4 * s + 1] = {0.0, 1.0};
  }
  detail::compass_maximize(objective, p, box, {cfg.iterations, cfg.initial_step, cfg.shrink, cfg.min_step});
  current = build(p);
  return {value_unchecked(f, current), current, restart};
}

namespace {

bool better(const OptimizationResult& a, const OptimizationResult& b) {
  return a.value > b.value || (a.value == b.value && a.restart < b.restart);
}

}  // namespace

OptimizationResult optimize_qubit(const WitnessFunctional& f, const OptimizerConfig& cfg) {
  require_222(f);
  f.validate();
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "optimizer needs at least one restart");
  std::vector<OptimizationResult> results(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) results[static_cast<std::size_t>(r)] = optimize_qubit_restart(f, cfg, r);
  OptimizationResult best = results.front();
  for (const auto& r : results)
    if (better(r, best)) best = r;
  return best;
}

double b4_kraus_form(const ComplexMatrix& k00, const ComplexMatrix& k11, std::span<const Complex> psi) {
  const ComplexMatrix e00 = k00.adjoint() * k00;
  const ComplexMatrix e11 = k11.adjoint() * k11;
  ComplexMatrix op = e00 * Complex(2.0) + e11;
  op += k11.adjoint() * e00 * k11;
  op -= k00.adjoint() * (e11 + e00) * k00;
  op -= k11.adjoint() * e11 * k11;
  Complex v = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) v += std::conj(psi[i]) * op(i, j) * psi[j];
  return v.real();
}

namespace {

// K = W sqrt(E): E from (u, b, theta, phi), W = exp(-i w/2 n . sigma) with n
// from (nt, np).
ComplexMatrix kraus_from_search(const double* p) {
  const EffectParams e = effect_from_search(p);
  const ComplexMatrix proj_n = (ComplexMatrix::identity(2) + pauli_dot(e.axis)) * Complex(0.5);
  const ComplexMatrix proj_m = ComplexMatrix::identity(2) - proj_n;
  const ComplexMatrix sqrt_e = proj_n * Complex(std::sqrt(std::max(0.0, e.a * (1.0 + e.b)))) +
                               proj_m * Complex(std::sqrt(std::max(0.0, e.a * (1.0 - e.b))));
  const BlochVector n = axis_from_angles(p[5], p[6]);
  const ComplexMatrix w = ComplexMatrix::identity(2) * Complex(std::cos(0.5 * p[4])) +
                          pauli_dot(n) * Complex(0.0, -std::sin(0.5 * p[4]));
  return w * sqrt_e;
}

std::vector<Complex> ket_from_search(const double* p) {
  const auto k = bloch_ket(axis_from_angles(p[0], p[1]));
  return {k[0], k[1]};
}

}  // namespace

KrausOptimizationResult optimize_b4_kraus(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "optimizer needs at least one restart");
  constexpr std::size_t kParams = 16;
  std::vector<KrausOptimizationResult> results(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed ^ 0xB4B4B4B4ULL, static_cast<std::uint64_t>(r)));
    std::vector<double> p(kParams);
    for (auto& v : p) v = uniform01(rng);
    for (std::size_t i : {2u, 3u, 4u, 5u, 6u, 9u, 10u, 11u, 12u, 13u, 14u, 15u}) p[i] *= 2.0 * std::numbers::pi;
    auto objective = [](const std::vector<double>& q) {
      return b4_kraus_form(kraus_from_search(q.data()), kraus_from_search(q.data() + 7), ket_from_search(q.data() + 14));
    };
    std::vector<detail::Box> box(kParams);
    for (std::size_t off : {0u, 7u}) {
      box[off + 0] = {0.0, 1.0};
      box[off + 1] = {0.0, 1.0};
    }
    const double v = detail::compass_maximize(objective, p, box,
                                              {4 * cfg.iterations, cfg.initial_step, cfg.shrink, cfg.min_step});
    results[static_cast<std::size_t>(r)] = {v, kraus_from_search(p.data()), kraus_from_search(p.data() + 7),
                                            ket_from_search(p.data() + 14), r};
  }
  KrausOptimizationResult best = results.front();
  for (const auto& res : results)
    if (res.value > best.value) best = res;
  return best;
}

}  // namespace tempcorr
