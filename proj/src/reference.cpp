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

#include "tempcorr/reference.hpp"

#include "tempcorr/error.hpp"

namespace tempcorr::reference {

std::vector<DeterministicVertex> enumerate_vertices(const Scenario& s) {
  s.validate();
  const std::size_t n = s.contexts();
  std::vector<std::uint8_t> a(n, 0);
  std::vector<DeterministicVertex> out;
  while (true) {
    out.emplace_back(s, a);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++a[i] < s.R) break;
      a[i] = 0;
      if (i == 0) return out;
    }
  }
}

namespace {

void chain(const SystemModel& sys, const std::vector<int>& xd, std::size_t t, const DensityMatrix& rho,
           double weight, std::size_t aprefix, Behavior& b, std::size_t row) {
  const std::size_t R = sys.outcomes();
  const auto& inst = sys.instrument(static_cast<std::size_t>(xd[t]));
  for (std::size_t a = 0; a < R; ++a) {
    const InstrumentOutput out = apply_instrument(rho, inst, a);
    const double w = weight * out.probability;
    const std::size_t idx = aprefix * R + a;
    if (t + 1 == xd.size()) {
      b.at(row, idx) = w;
      continue;
    }
    // Unreachable branch: every continuation has probability zero.
    if (auto next = renormalized(out)) chain(sys, xd, t + 1, *next, w, idx, b, row);
  }
}

}  // namespace

Behavior full_behavior(const SystemModel& sys, int length) {
  const Scenario s{length, static_cast<int>(sys.outcomes()), static_cast<int>(sys.settings())};
  s.validate();
  Behavior b(s);
  for (std::size_t x = 0; x < s.setting_sequences(); ++x) {
    chain(sys, to_digits(x, s.S, s.L), 0, sys.initial(), 1.0, 0, b, x);
  }
  return b;
}

OptimizationResult optimize_qubit(const WitnessFunctional& f, const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "optimizer needs at least one restart");
  OptimizationResult best = optimize_qubit_restart(f, cfg, 0);
  for (int r = 1; r < cfg.restarts; ++r) {
    OptimizationResult cur = optimize_qubit_restart(f, cfg, r);
    if (cur.value > best.value) best = std::move(cur);
  }
  return best;
}

}  // namespace tempcorr::reference
