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

#include "tempcorr/random.hpp"

#include <cmath>
#include <numbers>

#include "tempcorr/error.hpp"

namespace tempcorr {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

BlochVector random_unit_vector(Rng& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

BlochVector random_bloch_vector(Rng& rng) { return std::cbrt(uniform01(rng)) * random_unit_vector(rng); }

namespace {

std::vector<Complex> gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) {
    const double re = g(rng);
    const double im = g(rng);
    z = Complex(re, im);
  }
  return v;
}

// Columns of a rows x cols matrix (rows >= cols) with orthonormal columns.
std::vector<std::vector<Complex>> random_isometry_columns(std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<std::vector<Complex>> q;
  while (q.size() < cols) {
    auto v = gaussian_vector(rows, rng);
    for (const auto& u : q) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < rows; ++i) dot += std::conj(u[i]) * v[i];
      for (std::size_t i = 0; i < rows; ++i) v[i] -= dot * u[i];
    }
    double n = 0.0;
    for (const auto& z : v) n += std::norm(z);
    n = std::sqrt(n);
    if (n < 1e-8) continue;
    for (auto& z : v) z /= n;
    q.push_back(std::move(v));
  }
  return q;
}

}  // namespace

std::vector<Complex> random_pure_state(std::size_t dim, Rng& rng) {
  return random_isometry_columns(dim, 1, rng).front();
}

DensityMatrix random_density_matrix(std::size_t dim, Rng& rng) {
  // Ginibre ensemble: G G^dagger / tr.
  ComplexMatrix g(dim, gaussian_vector(dim * dim, rng));
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= Complex(1.0 / tr);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) m(j, i) = std::conj(m(i, j));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = m(i, i).real();
  return DensityMatrix(std::move(m));
}

Instrument random_instrument(std::size_t dim, std::size_t outcomes, std::size_t kraus_per_outcome, Rng& rng) {
  const std::size_t n_ops = outcomes * kraus_per_outcome;
  const auto cols = random_isometry_columns(dim * n_ops, dim, rng);
  std::vector<KrausSet> sets(outcomes);
  for (std::size_t op = 0; op < n_ops; ++op) {
    ComplexMatrix k(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) k(i, j) = cols[j][op * dim + i];
    sets[op / kraus_per_outcome].push_back(std::move(k));
  }
  return validate_instrument(std::move(sets));
}

SystemModel random_system(std::size_t dim, std::size_t outcomes, std::size_t settings, Rng& rng) {
  DensityMatrix rho = random_density_matrix(dim, rng);
  std::vector<Instrument> insts;
  for (std::size_t s = 0; s < settings; ++s) {
    const std::size_t k = 1 + static_cast<std::size_t>(uniform01(rng) * 2.0);
    insts.push_back(random_instrument(dim, outcomes, k, rng));
  }
  return SystemModel(std::move(rho), std::move(insts));
}

ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank > dim) throw Error(ErrorCode::kInvalidArgument, "projector rank exceeds dimension");
  const auto cols = random_isometry_columns(dim, rank, rng);
  ComplexMatrix p(dim);
  for (const auto& c : cols) p += ComplexMatrix::outer(c);
  return p;
}

Behavior random_member_behavior(const Scenario& s, Rng& rng, double zero_prob) {
  ConditionalChain chain(s);
  const auto R = static_cast<std::size_t>(s.R);
  for (int t = 1; t <= s.L; ++t) {
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) {
      for (std::size_t ap = 0; ap < ipow(R, t - 1); ++ap) {
        auto d = chain.dist(t, xp, ap);
        double total = 0.0;
        for (auto& v : d) {
          v = (uniform01(rng) < zero_prob) ? 0.0 : -std::log(1.0 - uniform01(rng));
          total += v;
        }
        if (total == 0.0) {
          d[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(R)) % R] = 1.0;
          total = 1.0;
        }
        for (auto& v : d) v /= total;
      }
    }
  }
  return compose_from_conditionals(chain);
}

}  // namespace tempcorr
