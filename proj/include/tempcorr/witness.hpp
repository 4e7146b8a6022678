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

#ifndef TEMPCORR_WITNESS_HPP
#define TEMPCORR_WITNESS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"
#include "tempcorr/random.hpp"

namespace tempcorr {

struct WitnessTerm {
  std::vector<int> outcomes;
  std::vector<int> settings;
  double coeff = 1.0;
};

/// Sparse linear functional sum coeff * p(a|x) over a behavior.
struct WitnessFunctional {
  std::string name;
  Scenario scenario{2, 2, 2};
  std::vector<WitnessTerm> terms;

  void validate() const;
};

/// B1..B4: four unit-coefficient terms each, the unit entries of e1..e4.
std::array<WitnessFunctional, 4> builtin_functionals();
/// "B1".."B4".
WitnessFunctional builtin_functional(const std::string& name);

double evaluate(const WitnessFunctional& f, const Behavior& b);

/// E_{0|s} = a (1 + b axis . sigma), E_{1|s} = 1 - E_{0|s}.
struct EffectParams {
  double a = 0.5;
  double b = 1.0;
  BlochVector axis{0.0, 0.0, 1.0};
};

/// Qubit strategy for the (2,2,2) scenario: initial Bloch vector, the state
/// left behind after first outcome a of setting x (post[a][x]), and the
/// effect parameters of each setting.
struct QubitStrategy {
  BlochVector initial{0.0, 0.0, 1.0};
  std::array<std::array<BlochVector, 2>, 2> post{};
  std::array<EffectParams, 2> effects{};

  void validate() const;
};

/// Closed-form value: p(a|x) = tr(E_{a|x} rho_in), p(b|axy) = tr(E_{b|y} rho_{a,x}).
double strategy_value(const WitnessFunctional& f, const QubitStrategy& s);

/// Measure-and-prepare instruments realizing the strategy exactly.
SystemModel measure_and_prepare(const QubitStrategy& s);

/// Replace the initial and post-measurement states by the optimal ones for
/// the given effects. Zero coefficient vectors keep the current state.
QubitStrategy optimize_states(const WitnessFunctional& f, QubitStrategy s);

QubitStrategy random_strategy(Rng& rng);

struct OptimizerConfig {
  int restarts = 200;
  std::uint64_t seed = 7;
  int iterations = 4000;  // objective evaluations per coordinate sweep budget
  double initial_step = 0.25;
  double shrink = 0.5;
  double min_step = 1e-11;
};

struct OptimizationResult {
  double value = 0.0;
  QubitStrategy strategy;
  int restart = -1;
};

/// Random-restart coordinate ascent over the effect parameters, with the
/// states solved analytically at every evaluation. Restarts run in parallel
/// with derived seeds; ties go to the lowest restart index.
OptimizationResult optimize_qubit(const WitnessFunctional& f, const OptimizerConfig& cfg);

/// One restart of optimize_qubit (exposed for the serial reference).
OptimizationResult optimize_qubit_restart(const WitnessFunctional& f, const OptimizerConfig& cfg, int restart);

/// <psi| 2E00 + E11 + K11^dag E00 K11 - K00^dag (E11 + E00) K00 - K11^dag E11 K11 |psi>
/// with E00 = K00^dag K00 (outcome 0 of setting 0) and E11 = K11^dag K11
/// (outcome 1 of setting 1). It equals B4 with the outcome labels of setting
/// 1 swapped, for single-Kraus instruments and a pure initial state.
double b4_kraus_form(const ComplexMatrix& k00, const ComplexMatrix& k11, std::span<const Complex> psi);

struct KrausOptimizationResult {
  double value = 0.0;
  ComplexMatrix k00;
  ComplexMatrix k11;
  std::vector<Complex> psi;
  int restart = -1;
};

/// Maximize b4_kraus_form over qubit Kraus operators K = W sqrt(E) (W
/// unitary, E an effect) and pure states.
KrausOptimizationResult optimize_b4_kraus(const OptimizerConfig& cfg);

}  // namespace tempcorr

#endif  // TEMPCORR_WITNESS_HPP
