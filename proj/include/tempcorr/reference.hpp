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

#ifndef TEMPCORR_REFERENCE_HPP
#define TEMPCORR_REFERENCE_HPP

#include <vector>

#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"
#include "tempcorr/witness.hpp"

/// Serial implementations of the parallel kernels. They take independent
/// routes to the same results and serve as test oracles and benchmark
/// baselines.
namespace tempcorr::reference {

/// Odometer over the per-context outcomes, last context fastest.
std::vector<DeterministicVertex> enumerate_vertices(const Scenario& s);

/// p(a|x) p(b|axy) ... chained through renormalized post-measurement states.
/// Zero-probability branches contribute zero.
Behavior full_behavior(const SystemModel& sys, int length);

/// Restarts run one after another in index order.
OptimizationResult optimize_qubit(const WitnessFunctional& f, const OptimizerConfig& cfg);

}  // namespace tempcorr::reference

#endif  // TEMPCORR_REFERENCE_HPP
