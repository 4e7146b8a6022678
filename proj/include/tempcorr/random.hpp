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

#ifndef TEMPCORR_RANDOM_HPP
#define TEMPCORR_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"

namespace tempcorr {

using Rng = std::mt19937_64;

/// Seed for an independent stream `stream` derived from a base seed
/// (splitmix64 finalizer), so parallel workers never share state.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

double uniform01(Rng& rng);
BlochVector random_unit_vector(Rng& rng);
/// Uniform in the unit ball.
BlochVector random_bloch_vector(Rng& rng);

/// Haar-random unit vector in C^dim.
std::vector<Complex> random_pure_state(std::size_t dim, Rng& rng);
DensityMatrix random_density_matrix(std::size_t dim, Rng& rng);
/// Kraus operators cut from a random isometry, `kraus_per_outcome` each.
Instrument random_instrument(std::size_t dim, std::size_t outcomes, std::size_t kraus_per_outcome, Rng& rng);
SystemModel random_system(std::size_t dim, std::size_t outcomes, std::size_t settings, Rng& rng);
/// Projector onto a Haar-random rank-`rank` subspace of C^dim.
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng);

/// Random member of the polytope built from flat-Dirichlet conditionals.
/// Each conditional entry is forced to exactly zero with probability
/// `zero_prob`, which exercises unreachable histories.
Behavior random_member_behavior(const Scenario& s, Rng& rng, double zero_prob = 0.0);

}  // namespace tempcorr

#endif  // TEMPCORR_RANDOM_HPP
