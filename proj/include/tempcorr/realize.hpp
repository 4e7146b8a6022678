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

#ifndef TEMPCORR_REALIZE_HPP
#define TEMPCORR_REALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"

namespace tempcorr {

struct SequenceOutcomeDistribution {
  std::vector<int> settings;
  std::vector<double> probs;  // indexed by outcome sequence, base R
};

/// probs[a_1..a_L] = tr I_{a_L|x_L}(... I_{a_1|x_1}(rho_in) ...), chained on
/// subnormalized states with no intermediate renormalization.
SequenceOutcomeDistribution run_sequence(const SystemModel& sys, std::span<const int> settings);

/// Behavior over all S^L setting sequences; OpenMP-parallel over sequences.
Behavior full_behavior(const SystemModel& sys, int length);

struct VertexRealization {
  SystemModel system;
  DeterministicVertex vertex;
};

/// Dimension S+1 realization of an L = 2 vertex: initial |0>, the first
/// measurement of setting s leaves |s+1>, effects are diagonal projectors
/// selecting the levels on which s answers r, and M_{r|s} = U_s E_{r|s} with
/// U_s swapping |0> and |s+1>.
VertexRealization qutrit_vertex_realization(const DeterministicVertex& v);

/// Direct sum of the vertex realizations weighted by the decomposition.
SystemModel mixture_realization(const ConvexDecomposition& d);

/// Named protocols: qubit-B1-3, qubit-B2-3, qutrit-e1 .. qutrit-e4.
std::map<std::string, SystemModel> canonical_protocols();
SystemModel canonical_protocol(const std::string& name);

}  // namespace tempcorr

#endif  // TEMPCORR_REALIZE_HPP
