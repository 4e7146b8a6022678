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

#include "tempcorr/realize.hpp"

#include <cstdint>

#include "tempcorr/error.hpp"

namespace tempcorr {

namespace {

void chain_outcomes(const SystemModel& sys, std::span<const int> settings, std::size_t step,
                    const ComplexMatrix& state, std::size_t prefix, std::vector<double>& probs) {
  const Instrument& inst = sys.instrument(static_cast<std::size_t>(settings[step]));
  const std::size_t R = inst.outcomes();
  for (std::size_t r = 0; r < R; ++r) {
    ComplexMatrix next = apply_outcome(state, inst, r);
    const std::size_t idx = prefix * R + r;
    if (step + 1 == settings.size()) {
      probs[idx] = next.trace().real();
    } else {
      chain_outcomes(sys, settings, step + 1, next, idx, probs);
    }
  }
}

}  // namespace

SequenceOutcomeDistribution run_sequence(const SystemModel& sys, std::span<const int> settings) {
  if (settings.empty()) throw Error(ErrorCode::kInvalidArgument, "empty setting sequence");
  for (int x : settings) {
    if (x < 0 || static_cast<std::size_t>(x) >= sys.settings()) {
      throw Error(ErrorCode::kInvalidArgument, "setting " + std::to_string(x) + " out of range");
    }
  }
  SequenceOutcomeDistribution out;
  out.settings.assign(settings.begin(), settings.end());
  out.probs.assign(ipow(sys.outcomes(), static_cast<int>(settings.size())), 0.0);
  chain_outcomes(sys, settings, 0, sys.initial().matrix(), 0, out.probs);
  return out;
}

Behavior full_behavior(const SystemModel& sys, int length) {
  const Scenario s{length, static_cast<int>(sys.outcomes()), static_cast<int>(sys.settings())};
  Behavior b(s);
  const auto rows = static_cast<std::int64_t>(s.setting_sequences());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t x = 0; x < rows; ++x) {
    const auto xd = to_digits(static_cast<std::size_t>(x), s.S, s.L);
    const auto dist = run_sequence(sys, xd);
    auto row = b.row(static_cast<std::size_t>(x));
    std::copy(dist.probs.begin(), dist.probs.end(), row.begin());
  }
  return b;
}

namespace {

// Measurement operators M_{r|s} of the vertex realization, indexed [s][r].
std::vector<std::vector<ComplexMatrix>> vertex_operators(const DeterministicVertex& v) {
  const Scenario& s = v.scenario();
  if (s.L != 2) {
    throw Error(ErrorCode::kUnsupportedLength,
                "vertex realization is implemented for L = 2 only (got L = " + std::to_string(s.L) + ")");
  }
  const auto S = static_cast<std::size_t>(s.S);
  const auto R = static_cast<std::size_t>(s.R);
  const std::size_t dim = S + 1;
  std::vector<std::vector<ComplexMatrix>> ops(S);
  for (std::size_t setting = 0; setting < S; ++setting) {
    // Level 0 answers like a first measurement; level s'+1 answers like a
    // second measurement after first setting s'.
    std::vector<int> answer(dim);
    answer[0] = v.outcome(1, setting);
    for (std::size_t first = 0; first < S; ++first) answer[first + 1] = v.outcome(2, first * S + setting);

    ComplexMatrix swap = ComplexMatrix::identity(dim);
    swap(0, 0) = 0.0;
    swap(setting + 1, setting + 1) = 0.0;
    swap(0, setting + 1) = 1.0;
    swap(setting + 1, 0) = 1.0;

    for (std::size_t r = 0; r < R; ++r) {
      ComplexMatrix e(dim);
      for (std::size_t i = 0; i < dim; ++i)
        if (answer[i] == static_cast<int>(r)) e(i, i) = 1.0;
      ops[setting].push_back(swap * e);
    }
  }
  return ops;
}

}  // namespace

VertexRealization qutrit_vertex_realization(const DeterministicVertex& v) {
  auto ops = vertex_operators(v);
  const std::size_t dim = ops.size() + 1;
  std::vector<Instrument> insts;
  for (auto& per_outcome : ops) insts.push_back(instrument_from_kraus(std::move(per_outcome)));
  return {SystemModel(DensityMatrix::basis(dim, 0), std::move(insts)), v};
}

SystemModel mixture_realization(const ConvexDecomposition& d) {
  if (d.terms.empty()) throw Error(ErrorCode::kEmptyDecomposition, "decomposition has no vertices");
  if (d.scenario.L != 2) {
    throw Error(ErrorCode::kUnsupportedLength,
                "mixture realization is implemented for L = 2 only (got L = " + std::to_string(d.scenario.L) + ")");
  }
  const auto S = static_cast<std::size_t>(d.scenario.S);
  const auto R = static_cast<std::size_t>(d.scenario.R);
  const std::size_t block = S + 1;

  std::vector<ComplexMatrix> init_blocks;
  std::vector<std::vector<std::vector<ComplexMatrix>>> op_blocks(S, std::vector<std::vector<ComplexMatrix>>(R));
  for (const auto& term : d.terms) {
    ComplexMatrix rho(block);
    rho(0, 0) = term.weight;
    init_blocks.push_back(std::move(rho));
    auto ops = vertex_operators(term.vertex);
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t r = 0; r < R; ++r) op_blocks[s][r].push_back(std::move(ops[s][r]));
  }
  std::vector<Instrument> insts;
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<ComplexMatrix> per_outcome;
    for (std::size_t r = 0; r < R; ++r) per_outcome.push_back(direct_sum(op_blocks[s][r]));
    insts.push_back(instrument_from_kraus(std::move(per_outcome)));
  }
  return SystemModel(DensityMatrix(direct_sum(init_blocks)), std::move(insts));
}

std::map<std::string, SystemModel> canonical_protocols() {
  std::map<std::string, SystemModel> out;
  const ComplexMatrix p0 = ComplexMatrix::unit(2, 0, 0);
  const ComplexMatrix p1 = ComplexMatrix::unit(2, 1, 1);
  const ComplexMatrix flip{{0.0, 1.0}, {1.0, 0.0}};

  // M0 always answers 0 and flips the state; M1 measures sigma_z.
  out.emplace("qubit-B1-3",
              SystemModel(DensityMatrix::basis(2, 0), {instrument_from_kraus({flip, ComplexMatrix::zero(2)}),
                                                       instrument_from_kraus({p0, p1})}));
  // M0 always answers 0 and leaves the state alone; M1 has effect |0><0| for
  // outcome 0 and then prepares |1>.
  out.emplace("qubit-B2-3", SystemModel(DensityMatrix::basis(2, 0),
                                        {instrument_from_kraus({ComplexMatrix::identity(2), ComplexMatrix::zero(2)}),
                                         instrument_from_kraus({ComplexMatrix::unit(2, 1, 0), p1})}));
  for (const char* name : {"e1", "e2", "e3", "e4"}) {
    out.emplace(std::string("qutrit-") + name, qutrit_vertex_realization(named_vertex(name)).system);
  }
  return out;
}

SystemModel canonical_protocol(const std::string& name) {
  auto all = canonical_protocols();
  auto it = all.find(name);
  if (it == all.end()) {
    std::string known;
    for (const auto& [k, _] : all) known += (known.empty() ? "" : ", ") + k;
    throw Error(ErrorCode::kInvalidArgument, "unknown protocol '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace tempcorr
