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

#include <cmath>

#include <gtest/gtest.h>

#include "tempcorr/bounds.hpp"
#include "tempcorr/certify.hpp"
#include "tempcorr/random.hpp"
#include "tempcorr/realize.hpp"
#include "tempcorr/witness.hpp"
#include "test_support.hpp"

namespace tempcorr {
namespace {

const Scenario k222{2, 2, 2};

ComplexMatrix embed(const ComplexMatrix& m) {
  ComplexMatrix out(3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = m(r, c);
  return out;
}

// A qubit system living on span{|0>, |1>} of a qutrit. The extra Kraus
// operator |0><2| completes each instrument without leaving the subspace.
SystemModel embedded_qubit(const SystemModel& q) {
  std::vector<Instrument> insts;
  for (const auto& inst : q.instruments()) {
    std::vector<KrausSet> sets;
    for (const auto& set : inst.kraus_sets()) {
      KrausSet s;
      for (const auto& k : set) s.push_back(embed(k));
      sets.push_back(std::move(s));
    }
    sets[0].push_back(ComplexMatrix::unit(3, 0, 2));
    insts.push_back(validate_instrument(std::move(sets)));
  }
  return SystemModel(DensityMatrix(embed(q.initial().matrix())), std::move(insts));
}

ComplexMatrix support_projector() { return ComplexMatrix::unit(3, 0, 0) + ComplexMatrix::unit(3, 1, 1); }

TEST(EpsilonLowerBound, Substitution) {
  EXPECT_NEAR(epsilon_lower_bound(4.0, 3.0), 1.0 / 12.0, 1e-15);
  EXPECT_EQ(epsilon_lower_bound(2.5, 3.0), 0.0);
  EXPECT_EQ(epsilon_lower_bound(3.0, 3.0), 0.0);
  const double c3 = c3_bound().value;
  EXPECT_NEAR(epsilon_lower_bound(3.5, c3), (3.5 - c3) / 12.0, 1e-15);
  EXPECT_NEAR(epsilon_lower_bound(3.5, c3), 0.02615, 5e-5);
  EXPECT_NEAR(epsilon_cap(3.0), 1.0 / 12.0, 1e-15);
  for (double v = 0.0; v <= 4.0; v += 0.01) EXPECT_LE(epsilon_lower_bound(v, c3), epsilon_cap(c3) + 1e-15);
  EXPECT_ERROR_CODE(epsilon_lower_bound(4.5, 3.0), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(epsilon_lower_bound(-0.5, 3.0), ErrorCode::kDomainError);
}

TEST(Certify, E1ExceedsQubitBound) {
  const CertificationReport r = certify(vertex_behavior(named_vertex("e1")));
  EXPECT_TRUE(r.dimension_exceeds_two);
  EXPECT_TRUE(r.witnesses[0].exceeds_qubit);
  EXPECT_GE(r.epsilon, 1.0 / 12.0 - 1e-9);
  EXPECT_EQ(r.witnesses[0].status, BoundStatus::kCertified);
  EXPECT_EQ(r.witnesses[1].status, BoundStatus::kNumericallySupported);
  EXPECT_EQ(r.witnesses[1].conjectured, 3.0);
  EXPECT_EQ(r.witnesses[1].bound, 3.5);
  EXPECT_NEAR(r.witnesses[3].conjectured, c3_bound().value, 0.0);
}

TEST(Certify, EveryNamedVertexIsCaught) {
  for (const char* e : {"e1", "e2", "e3", "e4"}) EXPECT_TRUE(certify(vertex_behavior(named_vertex(e))).dimension_exceeds_two);
}

TEST(Certify, SaturatingQubitProtocolIsCompatible) {
  const CertificationReport r = certify(full_behavior(canonical_protocol("qubit-B1-3"), 2));
  EXPECT_FALSE(r.dimension_exceeds_two);
  EXPECT_NEAR(r.witnesses[0].value, 3.0, 1e-12);
  const CertificationReport r2 = certify(full_behavior(canonical_protocol("qubit-B2-3"), 2));
  EXPECT_FALSE(r2.dimension_exceeds_two);
}

TEST(Certify, UniformIsCompatibleWithZeroEpsilon) {
  const CertificationReport r = certify(Behavior::uniform(k222));
  EXPECT_FALSE(r.dimension_exceeds_two);
  for (const auto& w : r.witnesses) EXPECT_EQ(w.epsilon, 0.0);
  EXPECT_EQ(r.epsilon, 0.0);
}

TEST(Certify, OptimalQubitStrategiesAreCompatible) {
  OptimizerConfig cfg;
  cfg.restarts = 20;
  for (const auto& f : builtin_functionals()) {
    const auto opt = optimize_qubit(f, cfg);
    EXPECT_FALSE(certify(full_behavior(measure_and_prepare(opt.strategy), 2)).dimension_exceeds_two) << f.name;
  }
}

TEST(Certify, Errors) {
  EXPECT_ERROR_CODE(certify(Behavior::uniform({2, 3, 2})), ErrorCode::kScenarioMismatch);
  Behavior bad(k222);
  bad.at(0, 0) = 1.0;
  bad.at(1, 2) = 1.0;
  bad.at(2, 0) = 1.0;
  bad.at(3, 0) = 1.0;
  EXPECT_ERROR_CODE(certify(bad), ErrorCode::kNotAMember);
}

TEST(FormatReport, ContainsVerdicts) {
  const std::string text = format_report(certify(vertex_behavior(named_vertex("e1"))));
  EXPECT_NE(text.find("dimension > 2"), std::string::npos);
  EXPECT_NE(text.find("numerically supported"), std::string::npos);
  EXPECT_NE(text.find("0.0833333333333"), std::string::npos);
}

TEST(SystemEpsilon, EmbeddedQubitWithAlignedProjectorIsZero) {
  for (const char* name : {"qubit-B1-3", "qubit-B2-3"}) {
    const SystemModel sys = embedded_qubit(canonical_protocol(name));
    EXPECT_LT(system_epsilon(sys, support_projector()), 1e-12) << name;
  }
}

TEST(SystemEpsilon, MisalignedProjectorIsWorse) {
  const SystemModel sys = embedded_qubit(canonical_protocol("qubit-B1-3"));
  const double aligned = system_epsilon(sys, support_projector());
  Rng rng(61);
  for (int rep = 0; rep < 5; ++rep) {
    EXPECT_GT(system_epsilon(sys, random_projector(3, 2, rng)), aligned + 1e-6);
  }
}

TEST(SystemEpsilon, PureStateLeakageClosedForm) {
  // Identity instrument: the estimate is the worst leakage of a pure state,
  // sqrt(4s - 3s^2) for outside weight s, maximal at s = 2/3.
  const SystemModel sys(DensityMatrix::basis(3, 0), {instrument_from_kraus({ComplexMatrix::identity(3), ComplexMatrix::zero(3)}),
                                                    instrument_from_kraus({ComplexMatrix::identity(3), ComplexMatrix::zero(3)})});
  EXPECT_NEAR(system_epsilon(sys, support_projector()), 2.0 / std::sqrt(3.0), 1e-6);
}

TEST(SystemEpsilon, QutritE1NeedsLargeEpsilon) {
  const SystemModel sys = canonical_protocol("qutrit-e1");
  const double b1 = evaluate(builtin_functional("B1"), full_behavior(sys, 2));
  Rng rng(62);
  for (int rep = 0; rep < 10; ++rep) {
    const double eps = system_epsilon(sys, random_projector(3, 2, rng));
    EXPECT_GE(eps, 1.0 / 12.0 - 1e-3);
    EXPECT_LE(b1, 3.0 + 12.0 * eps + 1e-6);
  }
}

TEST(SystemEpsilon, WitnessInequalityOnRandomQutritSystems) {
  Rng rng(63);
  const double c3 = c3_bound().value;
  const std::array<double, 4> bounds{3.0, bounds::kB2Cap, c3, bounds::b4_cap()};
  EpsilonConfig cfg;
  cfg.restarts = 4;
  for (int rep = 0; rep < 10; ++rep) {
    const SystemModel sys = random_system(3, 2, 2, rng);
    const Behavior beh = full_behavior(sys, 2);
    const double eps = system_epsilon(sys, random_projector(3, 2, rng), cfg);
    const auto fs = builtin_functionals();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(evaluate(fs[i], beh), bounds[i] + 12.0 * eps + 1e-6);
  }
}

TEST(SystemEpsilon, RejectsNonProjectors) {
  const SystemModel sys = canonical_protocol("qutrit-e1");
  EXPECT_ERROR_CODE(system_epsilon(sys, ComplexMatrix::identity(3) * Complex(0.5)), ErrorCode::kNotAProjector);
  EXPECT_ERROR_CODE(system_epsilon(sys, ComplexMatrix::unit(3, 0, 0)), ErrorCode::kNotAProjector);
  EXPECT_ERROR_CODE(system_epsilon(sys, ComplexMatrix::unit(3, 0, 1)), ErrorCode::kNotAProjector);
  EXPECT_ERROR_CODE(system_epsilon(sys, ComplexMatrix::identity(2)), ErrorCode::kDimensionMismatch);
}

TEST(SystemEpsilon, Deterministic) {
  const SystemModel sys = canonical_protocol("qutrit-e2");
  Rng rng(64);
  const ComplexMatrix p = random_projector(3, 2, rng);
  EXPECT_EQ(system_epsilon(sys, p), system_epsilon(sys, p));
}

}  // namespace
}  // namespace tempcorr
